#include "ngdvqe/benchmarks.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

using std::numbers::pi;

double narrow_gorge_cost(const ParameterVector& theta) {
  double prod = 1.0;
  for (double t : theta) {
    const double c = std::cos(t / 2);
    prod *= c * c;
  }
  return 1.0 - prod;
}

GradientVector narrow_gorge_gradient(const ParameterVector& theta) {
  GradientVector g(theta.size());
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    double prod = 0.5 * std::sin(theta[k]);
    for (Eigen::Index j = 0; j < theta.size(); ++j) {
      if (j == k) continue;
      const double c = std::cos(theta[j] / 2);
      prod *= c * c;
    }
    g[k] = prod;
  }
  return g;
}

ProblemInstance narrow_gorge(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 12) {
    throw InvalidArgument("narrow gorge needs 1 <= n <= 12, got " + std::to_string(n_qubits));
  }
  return ProblemInstance{
      .name = "narrow_gorge",
      .objective = Objective::zero_state_infidelity(build(AnsatzSpec::product_rx(n_qubits))),
      .initial = ParameterVector::Constant(n_qubits, pi / 2),
      .reference_energy = 0.0,
      .n_qubits = n_qubits,
      .default_iterations = 100,
  };
}

Hamiltonian h2_hamiltonian() {
  return Hamiltonian(2, {{0.4, {Pauli::Z, Pauli::I}},
                         {0.4, {Pauli::I, Pauli::Z}},
                         {0.2, {Pauli::X, Pauli::X}}});
}

ProblemInstance h2_toy() {
  Hamiltonian h = h2_hamiltonian();
  ParameterVector init(4);
  init << 7 * pi / 32, pi / 2, 0.0, 0.0;
  return ProblemInstance{
      .name = "h2",
      .objective = Objective::energy(build(AnsatzSpec::ry(2, 1)), h),
      .initial = init,
      .reference_energy = -std::sqrt(0.68),
      .n_qubits = 2,
      .default_iterations = 1000,
  };
}

Hamiltonian tfim_hamiltonian(int n_qubits) {
  if (n_qubits < 2) throw InvalidArgument("TFIM chain needs at least 2 qubits");
  const auto n = static_cast<std::size_t>(n_qubits);
  std::vector<PauliTerm> terms;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Pauli> p(n, Pauli::I);
    p[i] = p[i + 1] = Pauli::Z;
    terms.push_back({1.0, std::move(p)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Pauli> p(n, Pauli::I);
    p[i] = Pauli::X;
    terms.push_back({1.0, std::move(p)});
  }
  return Hamiltonian(n, std::move(terms));
}

ProblemInstance tfim(int n_qubits, Entanglement entanglement) {
  if (n_qubits < 2 || n_qubits > 12) {
    throw InvalidArgument("TFIM needs 2 <= n <= 12, got " + std::to_string(n_qubits));
  }
  Hamiltonian h = tfim_hamiltonian(n_qubits);
  const double e0 = ground_energy_exact(h);
  const AnsatzSpec spec = AnsatzSpec::ry(n_qubits, 2, entanglement);
  return ProblemInstance{
      .name = "tfim",
      .objective = Objective::energy(build(spec), std::move(h)),
      .initial = ParameterVector::Constant(static_cast<Eigen::Index>(spec.n_params()), pi / 2),
      .reference_energy = e0,
      .n_qubits = n_qubits,
      .default_iterations = 1000,
  };
}

ProblemInstance from_hamiltonian(std::string name, Hamiltonian h, const AnsatzSpec& spec,
                                 std::optional<ParameterVector> initial) {
  if (static_cast<std::size_t>(spec.n_qubits) != h.n_qubits()) {
    throw DimensionError("ansatz has " + std::to_string(spec.n_qubits) +
                         " qubits, Hamiltonian has " + std::to_string(h.n_qubits()));
  }
  const auto n_params = static_cast<Eigen::Index>(spec.n_params());
  ParameterVector init = initial.value_or(ParameterVector::Zero(n_params));
  if (init.size() != n_params) {
    throw DimensionError("initial point has " + std::to_string(init.size()) +
                         " entries, ansatz has " + std::to_string(n_params) + " parameters");
  }
  const double e0 = h.n_qubits() <= kMaxDenseQubits ? ground_energy_exact(h)
                                                    : std::numeric_limits<double>::quiet_NaN();
  return ProblemInstance{
      .name = std::move(name),
      .objective = Objective::energy(build(spec), std::move(h)),
      .initial = std::move(init),
      .reference_energy = e0,
      .n_qubits = spec.n_qubits,
      .default_iterations = 1000,
  };
}

ProblemInstance from_file(const std::filesystem::path& path, const AnsatzSpec& spec,
                          std::optional<ParameterVector> initial) {
  return from_hamiltonian(path.stem().string(), load_hamiltonian(path), spec, std::move(initial));
}

ProblemInstance synthetic_quadratic(std::size_t dim, const ParameterVector& x_star) {
  if (dim < 1) throw InvalidArgument("quadratic needs dim >= 1");
  if (static_cast<std::size_t>(x_star.size()) != dim) {
    throw DimensionError("minimizer has " + std::to_string(x_star.size()) + " entries, expected " +
                         std::to_string(dim));
  }
  auto cost = [x_star](const ParameterVector& x) { return 0.5 * (x - x_star).squaredNorm(); };
  auto grad = [x_star](const ParameterVector& x) -> GradientVector { return x - x_star; };
  return ProblemInstance{
      .name = "quadratic",
      .objective = Objective::closed_form(dim, cost, grad),
      .initial = (x_star.array() + 1.0).matrix(),
      .reference_energy = 0.0,
      .n_qubits = 0,
      .default_iterations = 1000,
  };
}

}  // namespace ngdvqe
