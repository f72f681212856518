#include "ngdvqe/optimizers.hpp"

#include <cmath>
#include <string>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "gd") return Algorithm::GD;
  if (name == "momentum") return Algorithm::Momentum;
  if (name == "nag") return Algorithm::NAG;
  if (name == "adam") return Algorithm::Adam;
  if (name == "ngd") return Algorithm::NGD;
  if (name == "nnag") return Algorithm::NNAG;
  if (name == "ngdm") return Algorithm::NGDm;
  throw InvalidArgument("unknown optimizer '" + std::string(name) +
                        "' (expected gd|momentum|nag|adam|ngd|nnag|ngdm)");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::GD: return "gd";
    case Algorithm::Momentum: return "momentum";
    case Algorithm::NAG: return "nag";
    case Algorithm::Adam: return "adam";
    case Algorithm::NGD: return "ngd";
    case Algorithm::NNAG: return "nnag";
    case Algorithm::NGDm: return "ngdm";
  }
  return "?";
}

void OptimizerConfig::validate() const {
  auto unit = [](double b) { return b >= 0.0 && b < 1.0; };
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidArgument("learning rate must be positive");
  }
  if (!unit(momentum)) throw InvalidArgument("momentum must lie in [0, 1)");
  if (!unit(beta1)) throw InvalidArgument("beta1 must lie in [0, 1)");
  if (!unit(beta2)) throw InvalidArgument("beta2 must lie in [0, 1)");
  if (!(adam_epsilon > 0.0)) throw InvalidArgument("adam epsilon must be positive");
  if (history_length < 1 || history_length > kMaxQpSize) {
    throw InvalidArgument("history length must lie in [1, " + std::to_string(kMaxQpSize) + "]");
  }
  if (!(qp_lower_bound < 0.0)) throw InvalidArgument("QP lower bound k must be negative");
  if (!(norm_tolerance > 0.0)) throw InvalidArgument("norm tolerance must be positive");
}

OptimizerState OptimizerState::initial(const ParameterVector& x0) {
  OptimizerState s;
  s.x = x0;
  s.m = Eigen::VectorXd::Zero(x0.size());
  s.v = Eigen::VectorXd::Zero(x0.size());
  s.x_prev = x0;
  s.anchor = x0;
  return s;
}

GradientVector normalize(const GradientVector& g, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("norm tolerance must be positive");
  const double n = g.norm();
  if (!(n >= tol)) throw VanishingGradient("gradient norm below tolerance", n);
  return g / n;
}

namespace {

void check_size(const OptimizerState& s, const GradientVector& g) {
  if (g.size() != s.x.size()) {
    throw DimensionError("gradient has " + std::to_string(g.size()) + " entries, point has " +
                         std::to_string(s.x.size()));
  }
}

}  // namespace

void gd_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config) {
  check_size(state, g);
  state.x -= config.learning_rate * g;
  ++state.t;
}

void ngd_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config) {
  check_size(state, g);
  state.x -= config.learning_rate * normalize(g, config.norm_tolerance);
  ++state.t;
}

void momentum_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config) {
  check_size(state, g);
  state.m = config.momentum * state.m - config.learning_rate * g;
  state.x += state.m;
  ++state.t;
}

void adam_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config) {
  check_size(state, g);
  state.m = config.beta1 * state.m + (1.0 - config.beta1) * g;
  state.v = config.beta2 * state.v + (1.0 - config.beta2) * g.cwiseAbs2();
  const auto power = static_cast<double>(state.t + 1);
  const Eigen::VectorXd m_hat = state.m / (1.0 - std::pow(config.beta1, power));
  const Eigen::VectorXd v_hat = state.v / (1.0 - std::pow(config.beta2, power));
  state.x -= config.learning_rate *
             m_hat.cwiseQuotient((v_hat.cwiseSqrt().array() + config.adam_epsilon).matrix());
  ++state.t;
}

GradientVector nag_step(OptimizerState& state, const GradientOracle& gradient_at,
                        const OptimizerConfig& config, bool normalized) {
  const double rho_next = (1.0 + std::sqrt(1.0 + 4.0 * state.rho * state.rho)) / 2.0;
  state.gamma = (state.rho - 1.0) / rho_next;
  state.rho = rho_next;

  const ParameterVector y = state.x + state.gamma * (state.x - state.x_prev);
  GradientVector g = gradient_at(y);
  check_size(state, g);
  const GradientVector direction = normalized ? normalize(g, config.norm_tolerance) : g;
  state.x_prev = state.x;
  state.x = y - config.learning_rate * direction;
  ++state.t;
  return g;
}

bool historical_ngd_advance(OptimizerState& state, const GradientVector& g,
                            const OptimizerConfig& config) {
  check_size(state, g);
  const GradientVector ghat = normalize(g, config.norm_tolerance);
  if (state.history.empty()) state.anchor = state.x;
  state.history.push_back(ghat);
  ++state.t;

  if (state.history.size() < config.history_length) {
    state.x -= config.learning_rate * ghat;
    return false;
  }

  const QpSubproblem qp = build_qp(state.history, config.learning_rate, config.qp_lower_bound);
  const Eigen::VectorXd rates = solve_box_qp(qp);
  ParameterVector next = state.anchor;
  for (std::size_t i = 0; i < state.history.size(); ++i) {
    next += rates[static_cast<Eigen::Index>(i)] * state.history[i];
  }
  state.x = std::move(next);
  state.history.clear();
  return true;
}

void abort_block(OptimizerState& state) {
  if (state.history.empty()) return;
  state.x = state.anchor;
  state.history.clear();
}

void historical_ngd_block(OptimizerState& state, const GradientOracle& gradient_at,
                          const OptimizerConfig& config) {
  try {
    while (!historical_ngd_advance(state, gradient_at(state.x), config)) {
    }
  } catch (const VanishingGradient&) {
    abort_block(state);
    throw;
  }
}

Optimizer::Optimizer(OptimizerConfig config, const ParameterVector& x0)
    : config_(config), state_(OptimizerState::initial(x0)) {
  config_.validate();
}

double Optimizer::step(const GradientOracle& gradient_at) {
  switch (config_.algorithm) {
    case Algorithm::NAG: return nag_step(state_, gradient_at, config_, false).norm();
    case Algorithm::NNAG: return nag_step(state_, gradient_at, config_, true).norm();
    default: break;
  }
  const GradientVector g = gradient_at(state_.x);
  switch (config_.algorithm) {
    case Algorithm::GD: gd_step(state_, g, config_); break;
    case Algorithm::Momentum: momentum_step(state_, g, config_); break;
    case Algorithm::Adam: adam_step(state_, g, config_); break;
    case Algorithm::NGD: ngd_step(state_, g, config_); break;
    case Algorithm::NGDm: historical_ngd_advance(state_, g, config_); break;
    case Algorithm::NAG:
    case Algorithm::NNAG: break;
  }
  return g.norm();
}

}  // namespace ngdvqe
