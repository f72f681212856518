#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "ngdvqe/ansatz.hpp"
#include "ngdvqe/gradient.hpp"

namespace ngdvqe {

struct ProblemInstance {
  std::string name;
  Objective objective;
  ParameterVector initial;
  double reference_energy;
  /// 0 for closed-form problems.
  int n_qubits;
  std::size_t default_iterations;
};

/// f = 1 - |<0|U|0>|^2 for U a product of half-angle RX gates; starts at
/// theta_k = pi/2. 1 <= n <= 12.
ProblemInstance narrow_gorge(int n_qubits);

/// 1 - prod_k cos^2(theta_k / 2).
double narrow_gorge_cost(const ParameterVector& theta);
/// d/dtheta_k = (1/2) sin(theta_k) prod_{j != k} cos^2(theta_j / 2).
GradientVector narrow_gorge_gradient(const ParameterVector& theta);

/// 0.4 (ZI + IZ) + 0.2 XX with the depth-1 RY ansatz, started at
/// (7pi/32, pi/2, 0, 0).
Hamiltonian h2_hamiltonian();
ProblemInstance h2_toy();

/// Open chain sum Z_i Z_{i+1} + sum X_i.
Hamiltonian tfim_hamiltonian(int n_qubits);
/// Depth-2 RY ansatz started at all pi/2. 2 <= n <= 12.
ProblemInstance tfim(int n_qubits, Entanglement entanglement = Entanglement::Linear);

/// Energy problem for a Hamiltonian file. `initial` defaults to all zeros.
/// The reference energy is exact for n <= 12 and NaN above.
ProblemInstance from_file(const std::filesystem::path& path, const AnsatzSpec& spec,
                          std::optional<ParameterVector> initial = std::nullopt);
ProblemInstance from_hamiltonian(std::string name, Hamiltonian h, const AnsatzSpec& spec,
                                 std::optional<ParameterVector> initial = std::nullopt);

/// f(x) = |x - x_star|^2 / 2 with its analytic gradient; starts at x_star + 1.
ProblemInstance synthetic_quadratic(std::size_t dim, const ParameterVector& x_star);

}  // namespace ngdvqe
