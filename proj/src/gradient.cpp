#include "ngdvqe/gradient.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

Objective Objective::energy(Circuit circuit, Hamiltonian hamiltonian) {
  if (circuit.n_qubits() != hamiltonian.n_qubits()) {
    throw DimensionError("circuit acts on " + std::to_string(circuit.n_qubits()) +
                         " qubits, Hamiltonian on " + std::to_string(hamiltonian.n_qubits()));
  }
  Objective obj;
  obj.n_params_ = circuit.n_params();
  obj.circuit_.emplace(std::move(circuit));
  obj.hamiltonian_.emplace(std::move(hamiltonian));
  return obj;
}

Objective Objective::zero_state_infidelity(Circuit circuit) {
  Objective obj;
  obj.n_params_ = circuit.n_params();
  obj.circuit_.emplace(std::move(circuit));
  return obj;
}

Objective Objective::closed_form(std::size_t n_params, CostFunction cost,
                                 GradientFunction gradient) {
  if (!cost) throw InvalidArgument("closed-form objective needs a cost function");
  Objective obj;
  obj.n_params_ = n_params;
  obj.cost_ = std::move(cost);
  obj.gradient_ = std::move(gradient);
  return obj;
}

void Objective::check_length(const ParameterVector& theta) const {
  if (static_cast<std::size_t>(theta.size()) != n_params_) {
    throw DimensionError("objective expects " + std::to_string(n_params_) +
                         " parameters, got " + std::to_string(theta.size()));
  }
}

double Objective::cost_of_state(const Statevector& psi) const {
  if (hamiltonian_) return expectation(*hamiltonian_, psi);
  return 1.0 - std::norm(amplitude_zero(psi));
}

double Objective::evaluate(const ParameterVector& theta) {
  check_length(theta);
  ++eval_count_;
  if (!circuit_) return cost_(theta);
  const Statevector psi0(circuit_->n_qubits());
  return cost_of_state(apply_circuit(*circuit_, theta, psi0));
}

double Objective::evaluate_shifted(const ParameterVector& theta, GateShift shift) {
  if (!circuit_) throw InvalidArgument("gate shifts need a circuit objective");
  check_length(theta);
  ++eval_count_;
  const Statevector psi0(circuit_->n_qubits());
  return cost_of_state(apply_circuit(*circuit_, theta, psi0, shift));
}

GradientVector Objective::analytic_gradient(const ParameterVector& theta) const {
  if (!gradient_) throw InvalidArgument("objective has no analytic gradient");
  check_length(theta);
  return gradient_(theta);
}

GradientVector parameter_shift_gradient(Objective& objective, const ParameterVector& theta) {
  constexpr double kShift = std::numbers::pi / 2;
  if (static_cast<std::size_t>(theta.size()) != objective.n_params()) {
    throw DimensionError("objective expects " + std::to_string(objective.n_params()) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  GradientVector grad = GradientVector::Zero(theta.size());

  if (const Circuit* circuit = objective.circuit()) {
    const auto gates = circuit->gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      if (!g.parameter_slot) continue;
      const double plus = objective.evaluate_shifted(theta, {i, kShift});
      const double minus = objective.evaluate_shifted(theta, {i, -kShift});
      grad[static_cast<Eigen::Index>(*g.parameter_slot)] += g.angle_scale * (plus - minus) / 2;
    }
    return grad;
  }

  ParameterVector shifted = theta;
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    shifted[k] = theta[k] + kShift;
    const double plus = objective.evaluate(shifted);
    shifted[k] = theta[k] - kShift;
    const double minus = objective.evaluate(shifted);
    shifted[k] = theta[k];
    grad[k] = (plus - minus) / 2;
  }
  return grad;
}

GradientVector finite_difference_gradient(Objective& objective, const ParameterVector& theta,
                                          double h) {
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  if (static_cast<std::size_t>(theta.size()) != objective.n_params()) {
    throw DimensionError("objective expects " + std::to_string(objective.n_params()) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  GradientVector grad(theta.size());
  ParameterVector shifted = theta;
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    shifted[k] = theta[k] + h;
    const double plus = objective.evaluate(shifted);
    shifted[k] = theta[k] - h;
    const double minus = objective.evaluate(shifted);
    shifted[k] = theta[k];
    grad[k] = (plus - minus) / (2 * h);
  }
  return grad;
}

}  // namespace ngdvqe
