#include "ngdvqe/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

namespace {

enum class Face : unsigned char { Free, Lower, Upper };

// Every assignment of {free, at-lower, at-upper} to the m coordinates, most
// free coordinates first so that the common interior case is tried first.
std::vector<std::vector<Face>> faces_by_freedom(std::size_t m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  std::vector<std::vector<Face>> faces;
  faces.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Face> f(m);
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i, c /= 3) f[i] = static_cast<Face>(c % 3);
    faces.push_back(std::move(f));
  }
  auto n_free = [](const std::vector<Face>& f) {
    return std::count(f.begin(), f.end(), Face::Free);
  };
  std::stable_sort(faces.begin(), faces.end(),
                   [&](const auto& a, const auto& b) { return n_free(a) > n_free(b); });
  return faces;
}

constexpr double kKktTolerance = 1e-10;
constexpr double kDefiniteness = 1e-10;

}  // namespace

double QpSubproblem::objective(const Eigen::VectorXd& y) const {
  return y.dot(gram * y) + linear.dot(y);
}

Eigen::VectorXd QpSubproblem::gradient(const Eigen::VectorXd& y) const {
  return 2.0 * (gram * y) + linear;
}

QpSubproblem build_qp(std::span<const Eigen::VectorXd> unit_gradients, double eps_over_kappa,
                      double lower_bound) {
  const std::size_t m = unit_gradients.size();
  if (m == 0) throw InvalidArgument("historical block needs at least one gradient");
  if (m > kMaxQpSize) {
    throw InvalidArgument("history length " + std::to_string(m) + " exceeds " +
                          std::to_string(kMaxQpSize));
  }
  if (!(lower_bound < 0.0)) throw InvalidArgument("QP lower bound must be negative");
  if (!(eps_over_kappa > 0.0)) throw InvalidArgument("step size must be positive");
  for (std::size_t i = 0; i < m; ++i) {
    if (unit_gradients[i].size() != unit_gradients[0].size()) {
      throw DimensionError("gradient history has mixed lengths");
    }
    if (std::abs(unit_gradients[i].norm() - 1.0) > 1e-10) {
      throw InvalidArgument("gradient " + std::to_string(i) + " is not unit-norm");
    }
  }

  const auto n = static_cast<Eigen::Index>(m);
  QpSubproblem qp;
  qp.lower_bound = lower_bound;
  qp.gram = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = std::clamp(unit_gradients[i].dot(unit_gradients[j]), -1.0, 1.0);
      qp.gram(i, j) = d;
      qp.gram(j, i) = d;
    }
  }
  qp.linear.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double s = 1.0;
    for (Eigen::Index i = 0; i < j; ++i) s += qp.gram(i, j);
    qp.linear[j] = 2.0 * eps_over_kappa * s;
  }
  return qp;
}

double kkt_residual(const QpSubproblem& qp, const Eigen::VectorXd& y) {
  const Eigen::VectorXd g = qp.gradient(y);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    double v = 0.0;
    if (y[i] > qp.upper_bound || y[i] < qp.lower_bound) {
      v = std::max(y[i] - qp.upper_bound, qp.lower_bound - y[i]);
    } else if (y[i] == qp.upper_bound) {
      v = std::max(0.0, g[i]);
    } else if (y[i] == qp.lower_bound) {
      v = std::max(0.0, -g[i]);
    } else {
      v = std::abs(g[i]);
    }
    worst = std::max(worst, v);
  }
  return worst;
}

Eigen::VectorXd solve_box_qp(const QpSubproblem& qp) {
  const std::size_t m = qp.size();
  if (m == 0 || m > kMaxQpSize) throw InvalidArgument("QP size out of range");
  if (qp.gram.rows() != qp.gram.cols() || static_cast<std::size_t>(qp.gram.rows()) != m) {
    throw DimensionError("QP matrix and vector sizes disagree");
  }
  if (!(qp.lower_bound < qp.upper_bound)) throw InvalidArgument("empty QP box");

  // A convex QP over a box attains its minimum at a point whose free block
  // A_FF is positive definite; on that face the minimizer solves
  // A_FF y_F = -(C_F + 2 A_FB y_B) / 2. The first face whose solution is
  // feasible and satisfies KKT is optimal.
  const double feas_tol = 1e-12 * std::max(1.0, std::abs(qp.lower_bound));
  Eigen::VectorXd best;
  double best_residual = std::numeric_limits<double>::infinity();

  for (const auto& face : faces_by_freedom(m)) {
    Eigen::VectorXd y(static_cast<Eigen::Index>(m));
    std::vector<Eigen::Index> free;
    for (std::size_t i = 0; i < m; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      switch (face[i]) {
        case Face::Free: free.push_back(k); y[k] = 0.0; break;
        case Face::Lower: y[k] = qp.lower_bound; break;
        case Face::Upper: y[k] = qp.upper_bound; break;
      }
    }

    if (!free.empty()) {
      const auto nf = static_cast<Eigen::Index>(free.size());
      Eigen::MatrixXd a_ff(nf, nf);
      Eigen::VectorXd rhs(nf);
      for (Eigen::Index r = 0; r < nf; ++r) {
        double bound_part = 0.0;
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(m); ++j) {
          if (face[static_cast<std::size_t>(j)] != Face::Free) {
            bound_part += qp.gram(free[r], j) * y[j];
          }
        }
        rhs[r] = -(qp.linear[free[r]] + 2.0 * bound_part) / 2.0;
        for (Eigen::Index c = 0; c < nf; ++c) a_ff(r, c) = qp.gram(free[r], free[c]);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a_ff);
      const auto& lambda = eig.eigenvalues();
      if (lambda.minCoeff() <= kDefiniteness * std::max(1.0, lambda.maxCoeff())) continue;
      const Eigen::VectorXd y_f =
          eig.eigenvectors() *
          (eig.eigenvectors().transpose() * rhs).cwiseQuotient(lambda);

      bool feasible = true;
      for (Eigen::Index r = 0; r < nf; ++r) {
        if (y_f[r] > qp.upper_bound + feas_tol || y_f[r] < qp.lower_bound - feas_tol) {
          feasible = false;
          break;
        }
        y[free[r]] = std::clamp(y_f[r], qp.lower_bound, qp.upper_bound);
      }
      if (!feasible) continue;
    }

    const double residual = kkt_residual(qp, y);
    if (residual <= kKktTolerance) return y;
    if (residual < best_residual) {
      best_residual = residual;
      best = y;
    }
  }
  // Unreachable for a PSD matrix; kept so ill-conditioned input still gets
  // the most nearly stationary feasible point.
  return best;
}

TwoStepRates ngd2_closed_form(double delta, double eps_over_kappa) {
  if (!(delta > -1.0 && delta <= 1.0)) {
    throw InvalidArgument("delta must lie in (-1, 1], got " + std::to_string(delta));
  }
  if (delta <= kTwoStepBranchPoint) {
    const double denom = 1.0 - delta * delta;
    return {-eps_over_kappa * (1.0 - delta - delta * delta) / denom, -eps_over_kappa / denom};
  }
  return {0.0, -eps_over_kappa * (1.0 + delta)};
}

double certified_decrease(double delta, double eps_over_kappa) {
  if (!(delta > -1.0 && delta <= 1.0)) {
    throw InvalidArgument("delta must lie in (-1, 1], got " + std::to_string(delta));
  }
  const double eta2 = eps_over_kappa * eps_over_kappa;
  if (delta <= kTwoStepBranchPoint) return (2.0 - delta * delta) / (1.0 - delta * delta) * eta2;
  return (1.0 + delta) * (1.0 + delta) * eta2;
}

}  // namespace ngdvqe
