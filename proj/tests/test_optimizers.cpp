#include <cmath>
#include <random>

#include <doctest.h>

#include "ngdvqe/benchmarks.hpp"
#include "ngdvqe/error.hpp"
#include "ngdvqe/optimizers.hpp"
#include "test_support.hpp"

using namespace ngdvqe;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) x[i++] = d;
  return x;
}

OptimizerConfig config(Algorithm a) {
  OptimizerConfig c;
  c.algorithm = a;
  return c;
}

GradientOracle quadratic_oracle(const Eigen::VectorXd& x_star) {
  return [x_star](const ParameterVector& x) -> GradientVector { return x - x_star; };
}

}  // namespace

TEST_CASE("parse algorithm names") {
  CHECK(parse_algorithm("gd") == Algorithm::GD);
  CHECK(parse_algorithm("nnag") == Algorithm::NNAG);
  CHECK(parse_algorithm("ngdm") == Algorithm::NGDm);
  CHECK_THROWS_AS(parse_algorithm("sgd"), InvalidArgument);
  for (auto a : {Algorithm::GD, Algorithm::Momentum, Algorithm::NAG, Algorithm::Adam,
                 Algorithm::NGD, Algorithm::NNAG, Algorithm::NGDm}) {
    CHECK(parse_algorithm(to_string(a)) == a);
  }
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(OptimizerConfig{}.validate());
  auto bad = [](auto mutate) {
    OptimizerConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(bad([](auto& c) { c.learning_rate = 0; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](auto& c) { c.momentum = 1.0; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](auto& c) { c.beta1 = -0.1; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](auto& c) { c.beta2 = 1.0; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](auto& c) { c.adam_epsilon = 0; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](auto& c) { c.history_length = 0; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](auto& c) { c.qp_lower_bound = 0; }).validate(), InvalidArgument);
  CHECK_THROWS_AS(bad([](auto& c) { c.norm_tolerance = 0; }).validate(), InvalidArgument);
}

TEST_CASE("normalize") {
  CHECK(normalize(vec({3, 4})).isApprox(vec({0.6, 0.8})));
  CHECK(normalize(vec({2, 0, 0})) == vec({1, 0, 0}));
  CHECK_THROWS_AS(normalize(vec({0, 0})), VanishingGradient);
  try {
    normalize(vec({1e-13, 0}));
    FAIL("expected VanishingGradient");
  } catch (const VanishingGradient& e) {
    CHECK(e.norm() == 1e-13);
  }
}

TEST_CASE("gd_step") {
  const OptimizerConfig c = config(Algorithm::GD);
  OptimizerState s = OptimizerState::initial(vec({1, 1}));
  gd_step(s, vec({1, 0}), c);
  CHECK(s.x.isApprox(vec({0.95, 1})));
  CHECK(s.t == 1);
  OptimizerState z = OptimizerState::initial(vec({1, 1}));
  gd_step(z, vec({0, 0}), c);
  CHECK(z.x == vec({1, 1}));
  OptimizerState n = OptimizerState::initial(vec({0}));
  gd_step(n, vec({-2}), c);
  CHECK(std::abs(n.x[0] - 0.1) < 1e-17);
  CHECK_THROWS_AS(gd_step(n, vec({1, 2}), c), DimensionError);
}

TEST_CASE("ngd_step") {
  const OptimizerConfig c = config(Algorithm::NGD);
  OptimizerState s = OptimizerState::initial(vec({0, 0}));
  ngd_step(s, vec({3, 4}), c);
  CHECK(std::abs(s.x[0] + 0.03) < 1e-17);
  CHECK(std::abs(s.x[1] + 0.04) < 1e-17);
  OptimizerState tiny = OptimizerState::initial(vec({0, 0}));
  ngd_step(tiny, vec({1e-8, 0}), c);
  CHECK(std::abs(tiny.x.norm() - 0.05) < 1e-15);
  OptimizerState zero = OptimizerState::initial(vec({0, 0}));
  CHECK_THROWS_AS(ngd_step(zero, vec({0, 0}), c), VanishingGradient);
}

TEST_CASE("momentum_step") {
  OptimizerConfig c = config(Algorithm::Momentum);
  OptimizerState s = OptimizerState::initial(vec({0}));
  momentum_step(s, vec({1}), c);
  CHECK(std::abs(s.m[0] + 0.05) < 1e-17);
  CHECK(std::abs(s.x[0] + 0.05) < 1e-17);
  const double before = s.x[0];
  momentum_step(s, vec({1}), c);
  CHECK(std::abs((s.x[0] - before) + 0.095) < 1e-15);

  c.momentum = 0.0;
  OptimizerState a = OptimizerState::initial(vec({1, -2}));
  OptimizerState b = a;
  for (int i = 0; i < 5; ++i) {
    momentum_step(a, vec({0.3, -0.7}) * (i + 1), c);
    gd_step(b, vec({0.3, -0.7}) * (i + 1), c);
  }
  CHECK(a.x == b.x);
}

TEST_CASE("adam_step") {
  const OptimizerConfig c = config(Algorithm::Adam);
  OptimizerState s = OptimizerState::initial(vec({0}));
  adam_step(s, vec({1}), c);
  CHECK(std::abs(s.x[0] + 0.05 / (1 + 1e-8)) < 1e-15);

  OptimizerState big = OptimizerState::initial(vec({0}));
  adam_step(big, vec({100}), c);
  CHECK(std::abs(big.x[0] - s.x[0]) < 1e-9);

  OptimizerState z = OptimizerState::initial(vec({0.5, 0.5}));
  for (int i = 0; i < 10; ++i) adam_step(z, vec({0, 0}), c);
  CHECK(z.x == vec({0.5, 0.5}));
}

TEST_CASE("property: adam with zero betas") {
  OptimizerConfig c = config(Algorithm::Adam);
  c.beta1 = 0.0;
  c.beta2 = 0.0;
  std::mt19937_64 rng(51);
  std::normal_distribution<double> d;
  OptimizerState s = OptimizerState::initial(vec({0.1, 0.2, 0.3}));
  for (int i = 0; i < 20; ++i) {
    const Eigen::VectorXd g = vec({d(rng), d(rng), d(rng)});
    const Eigen::VectorXd before = s.x;
    adam_step(s, g, c);
    const Eigen::VectorXd want =
        -c.learning_rate * g.cwiseQuotient((g.cwiseAbs().array() + c.adam_epsilon).matrix());
    CHECK((s.x - before - want).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("NAG coefficients") {
  const OptimizerConfig c = config(Algorithm::NAG);
  OptimizerState s = OptimizerState::initial(vec({1.0, -1.0}));
  const GradientOracle oracle = quadratic_oracle(vec({0, 0}));

  nag_step(s, oracle, c, false);
  CHECK(std::abs(s.rho - (1 + std::sqrt(5.0)) / 2) < 1e-15);
  CHECK(s.gamma == 0.0);
  CHECK(s.x.isApprox(vec({0.95, -0.95})));

  nag_step(s, oracle, c, false);
  CHECK(std::abs(s.rho - 2.193527085331054) < 1e-15);
  CHECK(std::abs(s.gamma - 0.28175352512532087) < 1e-15);
}

TEST_CASE("property: NAG gamma in [0,1) and increasing") {
  const OptimizerConfig c = config(Algorithm::NAG);
  OptimizerState s = OptimizerState::initial(vec({1.0}));
  const GradientOracle oracle = quadratic_oracle(vec({0}));
  double prev = -1.0;
  for (int t = 0; t < 100; ++t) {
    nag_step(s, oracle, c, false);
    CHECK(s.gamma >= 0.0);
    CHECK(s.gamma < 1.0);
    CHECK(s.gamma > prev);
    prev = s.gamma;
  }
}

TEST_CASE("normalized NAG takes unit-length gradient steps") {
  const OptimizerConfig c = config(Algorithm::NNAG);
  OptimizerState s = OptimizerState::initial(vec({3.0, 4.0}));
  const GradientVector g = nag_step(s, quadratic_oracle(vec({0, 0})), c, true);
  CHECK(g == vec({3.0, 4.0}));
  CHECK(std::abs((s.x - vec({3.0, 4.0})).norm() - 0.05) < 1e-15);
}

TEST_CASE("property: NGD step length is exactly eta") {
  const OptimizerConfig c = config(Algorithm::NGD);
  std::mt19937_64 rng(52);
  std::normal_distribution<double> d;
  std::uniform_real_distribution<double> scale(-12, 4);
  for (int i = 0; i < 200; ++i) {
    OptimizerState s = OptimizerState::initial(vec({d(rng), d(rng), d(rng)}));
    const Eigen::VectorXd g = vec({d(rng), d(rng), d(rng)}) * std::pow(10.0, scale(rng));
    const Eigen::VectorXd before = s.x;
    ngd_step(s, g, c);
    CHECK(std::abs((s.x - before).norm() - 0.05) < 1e-12);
    const Eigen::VectorXd n = normalize(g);
    CHECK(std::abs(n.norm() - 1.0) < 1e-12);
    CHECK(std::abs(n.dot(g) / g.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("historical NGD: m=1 reproduces NGD exactly") {
  OptimizerConfig c = config(Algorithm::NGDm);
  c.history_length = 1;
  ProblemInstance p = h2_toy();
  Objective& obj = p.objective;
  const GradientOracle oracle = [&](const ParameterVector& x) {
    return parameter_shift_gradient(obj, x);
  };
  OptimizerState a = OptimizerState::initial(p.initial);
  OptimizerState b = a;
  for (int i = 0; i < 50; ++i) {
    historical_ngd_block(a, oracle, c);
    ngd_step(b, oracle(b.x), c);
    CHECK(a.x == b.x);
  }
}

TEST_CASE("historical NGD: parallel gradients double the step") {
  OptimizerConfig c = config(Algorithm::NGDm);
  c.history_length = 2;
  const Eigen::VectorXd g = vec({0.6, 0.8});
  OptimizerState s = OptimizerState::initial(vec({1.0, 1.0}));
  historical_ngd_block(s, [&](const ParameterVector&) -> GradientVector { return g; }, c);
  CHECK((s.x - (vec({1.0, 1.0}) - 0.1 * g)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(s.history.empty());
  CHECK(s.t == 2);
}

TEST_CASE("historical NGD: m=2 matches the closed form on an interior block") {
  OptimizerConfig c = config(Algorithm::NGDm);
  c.history_length = 2;
  // Gradient flips to a 60-degree direction after the provisional step.
  const Eigen::VectorXd g0 = vec({1.0, 0.0});
  const Eigen::VectorXd g1 = vec({-0.5, std::sqrt(0.75)});
  int calls = 0;
  OptimizerState s = OptimizerState::initial(vec({0.0, 0.0}));
  historical_ngd_block(
      s, [&](const ParameterVector&) -> GradientVector { return calls++ == 0 ? g0 : g1; }, c);
  const TwoStepRates r = ngd2_closed_form(g0.dot(g1), c.learning_rate);
  CHECK((s.x - (r.first * g0 + r.second * g1)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("historical NGD: vanishing gradient reverts to the anchor") {
  OptimizerConfig c = config(Algorithm::NGDm);
  c.history_length = 3;
  int calls = 0;
  OptimizerState s = OptimizerState::initial(vec({1.0, 2.0}));
  const GradientOracle oracle = [&](const ParameterVector&) -> GradientVector {
    return calls++ < 2 ? vec({1.0, 0.0}) : vec({0.0, 0.0});
  };
  CHECK_THROWS_AS(historical_ngd_block(s, oracle, c), VanishingGradient);
  CHECK(s.x == vec({1.0, 2.0}));
  CHECK(s.history.empty());
}

TEST_CASE("historical NGD: m=2 on a quadratic is never behind two NGD steps") {
  OptimizerConfig c = config(Algorithm::NGDm);
  c.history_length = 2;
  std::mt19937_64 rng(53);
  std::normal_distribution<double> d;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::VectorXd x_star = vec({d(rng), d(rng), d(rng)});
    const Eigen::VectorXd x0 = x_star + 10.0 * vec({d(rng), d(rng), d(rng)});
    const GradientOracle oracle = quadratic_oracle(x_star);
    OptimizerState h = OptimizerState::initial(x0);
    OptimizerState n = h;
    historical_ngd_block(h, oracle, c);
    ngd_step(n, oracle(n.x), c);
    ngd_step(n, oracle(n.x), c);
    CHECK((h.x - x_star).norm() <= (n.x - x_star).norm() + 1e-12);
  }
}

TEST_CASE("Optimizer: one step per gradient evaluation") {
  for (auto a : {Algorithm::GD, Algorithm::Momentum, Algorithm::NAG, Algorithm::Adam,
                 Algorithm::NGD, Algorithm::NNAG, Algorithm::NGDm}) {
    OptimizerConfig c = config(a);
    c.history_length = 3;
    Optimizer opt(c, vec({3.0, 4.0}));
    int calls = 0;
    const GradientOracle oracle = [&](const ParameterVector& x) -> GradientVector {
      ++calls;
      return x;
    };
    for (int i = 0; i < 9; ++i) opt.step(oracle);
    CHECK(calls == 9);
    CHECK(opt.state().t == 9);
    CHECK(opt.point().norm() < 5.0);
  }
  OptimizerConfig bad = config(Algorithm::GD);
  bad.learning_rate = -1;
  CHECK_THROWS_AS(Optimizer(bad, vec({1.0})), InvalidArgument);
}

TEST_CASE("Optimizer: NGDm exposes the open block") {
  OptimizerConfig c = config(Algorithm::NGDm);
  c.history_length = 2;
  Optimizer opt(c, vec({3.0, 4.0}));
  const GradientOracle oracle = quadratic_oracle(vec({0, 0}));
  CHECK(!opt.in_block());
  opt.step(oracle);
  CHECK(opt.in_block());
  opt.abort();
  CHECK(opt.point() == vec({3.0, 4.0}));
  opt.step(oracle);
  opt.step(oracle);
  CHECK(!opt.in_block());
}

TEST_CASE("NGD on a quadratic shrinks the distance by eta per step") {
  OptimizerConfig c = config(Algorithm::NGD);
  OptimizerState s = OptimizerState::initial(vec({3.0, 4.0}));
  const GradientOracle oracle = quadratic_oracle(vec({0, 0}));
  for (int i = 1; i <= 99; ++i) {
    ngd_step(s, oracle(s.x), c);
    CHECK(std::abs(s.x.norm() - (5.0 - 0.05 * i)) < 1e-12);
  }
}
