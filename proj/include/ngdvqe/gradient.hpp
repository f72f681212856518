#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include <Eigen/Core>

#include "ngdvqe/pauli.hpp"
#include "ngdvqe/statevector.hpp"

namespace ngdvqe {

using GradientVector = Eigen::VectorXd;

/// A cost function of the circuit parameters with an evaluation counter.
///
/// Three bindings exist: the energy <0|U^dag H U|0> of a circuit, the
/// zero-state infidelity 1 - |<0|U|0>|^2 of a circuit, and an arbitrary
/// closed-form function (optionally with an analytic gradient). Copies share
/// nothing; each copy counts its own evaluations.
class Objective {
 public:
  using CostFunction = std::function<double(const ParameterVector&)>;
  using GradientFunction = std::function<GradientVector(const ParameterVector&)>;

  static Objective energy(Circuit circuit, Hamiltonian hamiltonian);
  static Objective zero_state_infidelity(Circuit circuit);
  static Objective closed_form(std::size_t n_params, CostFunction cost,
                               GradientFunction gradient = {});

  std::size_t n_params() const noexcept { return n_params_; }

  /// Cost at theta; increments eval_count by one.
  double evaluate(const ParameterVector& theta);

  /// Cost with one gate angle offset (circuit bindings only); counts as one
  /// evaluation.
  double evaluate_shifted(const ParameterVector& theta, GateShift shift);

  /// nullptr for closed-form objectives.
  const Circuit* circuit() const noexcept { return circuit_ ? &*circuit_ : nullptr; }
  const Hamiltonian* hamiltonian() const noexcept {
    return hamiltonian_ ? &*hamiltonian_ : nullptr;
  }

  bool has_analytic_gradient() const noexcept { return static_cast<bool>(gradient_); }
  /// Does not touch eval_count.
  GradientVector analytic_gradient(const ParameterVector& theta) const;

  std::uint64_t eval_count() const noexcept { return eval_count_; }
  void reset_eval_count() noexcept { eval_count_ = 0; }

 private:
  Objective() = default;
  void check_length(const ParameterVector& theta) const;
  double cost_of_state(const Statevector& psi) const;

  std::size_t n_params_ = 0;
  std::optional<Circuit> circuit_;
  std::optional<Hamiltonian> hamiltonian_;  // empty with a circuit => infidelity
  CostFunction cost_;
  GradientFunction gradient_;
  std::uint64_t eval_count_ = 0;
};

/// Two-term shift rule. For a circuit objective every parameterized gate
/// occurrence is shifted by +-pi/2 in its own angle and the contributions are
/// summed per slot (times the gate's angle scale): exactly
/// 2 * n_parameterized_gates evaluations. A closed-form objective is shifted
/// per slot, which is exact when it is a half-angle trigonometric form.
GradientVector parameter_shift_gradient(Objective& objective, const ParameterVector& theta);

/// Central differences [f(theta + h e_k) - f(theta - h e_k)] / 2h.
GradientVector finite_difference_gradient(Objective& objective, const ParameterVector& theta,
                                          double h);

}  // namespace ngdvqe
