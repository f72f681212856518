#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ngdvqe/gradient.hpp"
#include "ngdvqe/qp.hpp"

namespace ngdvqe {

enum class Algorithm { GD, Momentum, NAG, Adam, NGD, NNAG, NGDm };

/// Accepts gd, momentum, nag, adam, ngd, nnag, ngdm.
Algorithm parse_algorithm(std::string_view name);
std::string to_string(Algorithm algorithm);

struct OptimizerConfig {
  Algorithm algorithm = Algorithm::NGD;
  /// eta; for the normalized methods this is the step length eps/kappa.
  double learning_rate = 0.05;
  double momentum = 0.9;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_epsilon = 1e-8;
  /// m for NGDm.
  std::size_t history_length = 2;
  double qp_lower_bound = kDefaultQpLowerBound;
  double norm_tolerance = 1e-12;

  /// Throws InvalidArgument naming the first field out of range.
  void validate() const;
};

struct OptimizerState {
  ParameterVector x;
  std::size_t t = 0;
  /// Momentum buffer, or ADAM's first moment.
  Eigen::VectorXd m;
  /// ADAM's second moment.
  Eigen::VectorXd v;
  /// NAG: rho of the current step (rho_0 = 1) and the previous iterate.
  double rho = 1.0;
  double gamma = 0.0;
  ParameterVector x_prev;
  /// NGDm: block anchor and the normalized gradients collected so far.
  ParameterVector anchor;
  std::vector<GradientVector> history;

  static OptimizerState initial(const ParameterVector& x0);
};

using GradientOracle = std::function<GradientVector(const ParameterVector&)>;

/// g / |g|. Throws VanishingGradient when |g| < tol.
GradientVector normalize(const GradientVector& g, double tol = 1e-12);

void gd_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config);
void ngd_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config);
/// m = beta m - eta g; x += m.
void momentum_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config);
/// Bias corrections use 1 - beta^(t+1) with t counted from 0.
void adam_step(OptimizerState& state, const GradientVector& g, const OptimizerConfig& config);

/// One Nesterov step: y = x + gamma (x - x_prev), x' = y - eta grad(y), with
/// grad(y) normalized when `normalized` is set. Returns the raw gradient at y.
GradientVector nag_step(OptimizerState& state, const GradientOracle& gradient_at,
                        const OptimizerConfig& config, bool normalized);

/// Feeds the gradient at the current point into an NGDm block. Before the
/// block is full this takes a provisional NGD step; the m-th gradient
/// triggers the QP and the jump from the anchor. Returns true on a jump.
bool historical_ngd_advance(OptimizerState& state, const GradientVector& g,
                            const OptimizerConfig& config);

/// Drops a partial block and moves back to its anchor. No-op between blocks.
void abort_block(OptimizerState& state);

/// A whole block: m gradient evaluations and one jump. On VanishingGradient
/// the state is reverted to the anchor and the exception rethrown.
void historical_ngd_block(OptimizerState& state, const GradientOracle& gradient_at,
                          const OptimizerConfig& config);

/// Uniform driver over every algorithm. One step() is one gradient
/// evaluation; for NGDm that is one point of a block.
class Optimizer {
 public:
  Optimizer(OptimizerConfig config, const ParameterVector& x0);

  /// Advances by one iteration and returns the norm of the gradient it used
  /// (taken at the look-ahead point for NAG variants).
  double step(const GradientOracle& gradient_at);

  const ParameterVector& point() const noexcept { return state_.x; }
  const OptimizerState& state() const noexcept { return state_; }
  const OptimizerConfig& config() const noexcept { return config_; }

  /// True while an NGDm block holds provisional points.
  bool in_block() const noexcept { return !state_.history.empty(); }
  void abort() { abort_block(state_); }

 private:
  OptimizerConfig config_;
  OptimizerState state_;
};

}  // namespace ngdvqe
