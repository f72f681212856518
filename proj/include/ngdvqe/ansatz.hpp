#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ngdvqe/statevector.hpp"

namespace ngdvqe {

enum class AnsatzFamily { RyHardwareEfficient, ProductRx };
enum class Entanglement { Linear, Full };
enum class EntanglingGate { CX, CZ };

/// How a circuit parameter maps onto a rotation angle.
///   Half: R(theta) = exp(-i theta P / 2)
///   Full: R(theta) = exp(-i theta P)
enum class RotationConvention { Half, Full };

/// Order in which the RY ansatz hands out parameter slots.
///   QubitMajor: slot = qubit * (depth + 1) + layer
///   LayerMajor: slot = layer * n_qubits + qubit
enum class ParameterOrder { QubitMajor, LayerMajor };

struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::RyHardwareEfficient;
  int n_qubits = 2;
  int depth = 1;
  Entanglement entanglement = Entanglement::Linear;
  EntanglingGate entangler = EntanglingGate::CX;
  RotationConvention rotation = RotationConvention::Full;
  ParameterOrder order = ParameterOrder::QubitMajor;

  /// Hardware-efficient RY ansatz with the defaults used by the VQE problems.
  static AnsatzSpec ry(int n_qubits, int depth, Entanglement entanglement = Entanglement::Linear);
  /// One half-angle RX per qubit, no entanglers.
  static AnsatzSpec product_rx(int n_qubits);

  /// (depth + 1) * n for the RY family, n for the product family.
  std::size_t n_params() const;
};

/// RY family: `depth` repetitions of [RY layer; entangling layer], then a
/// final RY layer. Linear entanglement couples (i, i+1); full couples every
/// pair i < j. Throws InvalidArgument on an invalid spec.
Circuit build(const AnsatzSpec& spec);

Entanglement parse_entanglement(std::string_view name);
std::string to_string(Entanglement e);

}  // namespace ngdvqe
