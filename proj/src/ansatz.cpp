#include "ngdvqe/ansatz.hpp"

#include <vector>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

AnsatzSpec AnsatzSpec::ry(int n_qubits, int depth, Entanglement entanglement) {
  AnsatzSpec spec;
  spec.family = AnsatzFamily::RyHardwareEfficient;
  spec.n_qubits = n_qubits;
  spec.depth = depth;
  spec.entanglement = entanglement;
  return spec;
}

AnsatzSpec AnsatzSpec::product_rx(int n_qubits) {
  AnsatzSpec spec;
  spec.family = AnsatzFamily::ProductRx;
  spec.n_qubits = n_qubits;
  spec.depth = 0;
  spec.rotation = RotationConvention::Half;
  return spec;
}

std::size_t AnsatzSpec::n_params() const {
  const auto n = static_cast<std::size_t>(n_qubits);
  if (family == AnsatzFamily::ProductRx) return n;
  return (static_cast<std::size_t>(depth) + 1) * n;
}

Circuit build(const AnsatzSpec& spec) {
  if (spec.n_qubits < 1 || static_cast<std::size_t>(spec.n_qubits) > kMaxSimulatedQubits) {
    throw InvalidArgument("ansatz qubit count out of range: " + std::to_string(spec.n_qubits));
  }
  const auto n = static_cast<std::size_t>(spec.n_qubits);
  const double scale = spec.rotation == RotationConvention::Full ? 2.0 : 1.0;
  std::vector<Gate> gates;

  if (spec.family == AnsatzFamily::ProductRx) {
    for (std::size_t q = 0; q < n; ++q) gates.push_back(Gate::rx(q, q, scale));
    return Circuit(n, std::move(gates));
  }

  if (spec.depth < 0) throw InvalidArgument("ansatz depth must be >= 0");
  const auto layers = static_cast<std::size_t>(spec.depth) + 1;
  auto slot = [&](std::size_t layer, std::size_t q) {
    return spec.order == ParameterOrder::QubitMajor ? q * layers + layer : layer * n + q;
  };
  auto entangle = [&](std::size_t c, std::size_t t) {
    gates.push_back(spec.entangler == EntanglingGate::CX ? Gate::cx(c, t) : Gate::cz(c, t));
  };

  for (std::size_t layer = 0; layer < layers; ++layer) {
    for (std::size_t q = 0; q < n; ++q) gates.push_back(Gate::ry(q, slot(layer, q), scale));
    if (layer + 1 == layers) break;
    if (spec.entanglement == Entanglement::Linear) {
      for (std::size_t q = 0; q + 1 < n; ++q) entangle(q, q + 1);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) entangle(i, j);
      }
    }
  }
  return Circuit(n, std::move(gates));
}

Entanglement parse_entanglement(std::string_view name) {
  if (name == "linear") return Entanglement::Linear;
  if (name == "full") return Entanglement::Full;
  throw InvalidArgument("unknown entanglement '" + std::string(name) + "' (expected linear|full)");
}

std::string to_string(Entanglement e) { return e == Entanglement::Linear ? "linear" : "full"; }

}  // namespace ngdvqe
