#pragma once

#include <cstddef>
#include <numbers>
#include <span>

#include <Eigen/Core>

namespace ngdvqe {

/// Branch point of the two-step closed form: (sqrt(5) - 1) / 2.
inline constexpr double kTwoStepBranchPoint = std::numbers::phi - 1.0;

inline constexpr double kDefaultQpLowerBound = -1000.0;
inline constexpr std::size_t kMaxQpSize = 10;

/// Learning-rate subproblem: minimize h(y) = y^T A y + C y over the box
/// lower_bound <= y_i <= upper_bound.
///
/// A is the Gram matrix of the normalized gradients in a block,
/// A(i, j) = <g_i, g_j>; C(j) = 2 eta (1 + sum_{i<j} A(i, j)).
struct QpSubproblem {
  Eigen::MatrixXd gram;
  Eigen::VectorXd linear;
  double lower_bound = kDefaultQpLowerBound;
  double upper_bound = 0.0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(linear.size()); }
  double objective(const Eigen::VectorXd& y) const;
  /// 2 A y + C.
  Eigen::VectorXd gradient(const Eigen::VectorXd& y) const;
};

/// Builds A and C from unit gradients g_t ... g_{t+m-1}. Throws
/// InvalidArgument if a vector is not unit-norm within 1e-10, the history is
/// empty or longer than kMaxQpSize, or lower_bound >= 0.
QpSubproblem build_qp(std::span<const Eigen::VectorXd> unit_gradients, double eps_over_kappa,
                      double lower_bound = kDefaultQpLowerBound);

/// Largest violation of the box-constrained KKT conditions at y: |grad_i| on
/// free coordinates, the wrongly signed part of grad_i on active ones, and any
/// bound violation.
double kkt_residual(const QpSubproblem& qp, const Eigen::VectorXd& y);

/// Global minimizer of the box QP (A positive semidefinite). The result lies
/// inside the box exactly and is deterministic for a given input.
Eigen::VectorXd solve_box_qp(const QpSubproblem& qp);

struct TwoStepRates {
  double first;
  double second;
};

/// Rates of the two-gradient historical update for delta = <g_t, g_{t+1}>,
/// -1 < delta <= 1.
TwoStepRates ngd2_closed_form(double delta, double eps_over_kappa);

/// Guaranteed decrease of the squared distance to the minimizer over one
/// two-gradient block: (2 - d^2)/(1 - d^2) eta^2 below the branch point,
/// (1 + d)^2 eta^2 above it.
double certified_decrease(double delta, double eps_over_kappa);

}  // namespace ngdvqe
