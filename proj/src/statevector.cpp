#include "ngdvqe/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

namespace {

// Applies the 2x2 matrix [[m00, m01], [m10, m11]] to every amplitude pair
// that differs only in bit `qubit`.
void apply_single(std::vector<Complex>& amps, std::size_t qubit, Complex m00, Complex m01,
                  Complex m10, Complex m11) {
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t dim = amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = m00 * a0 + m01 * a1;
      amps[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxSimulatedQubits) {
    throw InvalidArgument("qubit count must be in [1, " + std::to_string(kMaxSimulatedQubits) +
                          "], got " + std::to_string(n_qubits));
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
  if (amplitudes.size() < 2 || !is_power_of_two(amplitudes.size())) {
    throw DimensionError("amplitude count must be a power of two >= 2, got " +
                         std::to_string(amplitudes.size()));
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amplitudes.size()) ++n;
  if (n > kMaxSimulatedQubits) {
    throw InvalidArgument("too many qubits: " + std::to_string(n));
  }
  return Statevector(n, std::move(amplitudes));
}

double Statevector::norm_squared() const noexcept {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

void Statevector::check_qubit(std::size_t qubit) const {
  if (qubit >= n_qubits_) {
    throw DimensionError("qubit " + std::to_string(qubit) + " out of range for " +
                         std::to_string(n_qubits_) + "-qubit state");
  }
}

void Statevector::apply_rx(std::size_t qubit, double angle) {
  check_qubit(qubit);
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  const Complex mis{0.0, -s};
  apply_single(amplitudes_, qubit, c, mis, mis, c);
}

void Statevector::apply_ry(std::size_t qubit, double angle) {
  check_qubit(qubit);
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  apply_single(amplitudes_, qubit, c, -s, s, c);
}

void Statevector::apply_rz(std::size_t qubit, double angle) {
  check_qubit(qubit);
  const Complex lo = std::polar(1.0, -angle / 2);
  const Complex hi = std::polar(1.0, angle / 2);
  apply_single(amplitudes_, qubit, lo, 0.0, 0.0, hi);
}

void Statevector::apply_cx(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw InvalidArgument("CX control equals target");
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    // Visit each swapped pair once, from its target-bit-clear member.
    if ((i & cbit) && !(i & tbit)) std::swap(amplitudes_[i], amplitudes_[i | tbit]);
  }
}

void Statevector::apply_cz(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw InvalidArgument("CZ control equals target");
  const std::size_t mask = (std::size_t{1} << control) | (std::size_t{1} << target);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & mask) == mask) amplitudes_[i] = -amplitudes_[i];
  }
}

Statevector zero_state(int n_qubits) {
  if (n_qubits < 1 || static_cast<std::size_t>(n_qubits) > kMaxSimulatedQubits) {
    throw InvalidArgument("qubit count must be in [1, " + std::to_string(kMaxSimulatedQubits) +
                          "], got " + std::to_string(n_qubits));
  }
  return Statevector(static_cast<std::size_t>(n_qubits));
}

Complex amplitude_zero(const Statevector& psi) { return psi[0]; }

Complex inner_product(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError("inner product of states with different dimensions");
  }
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

bool is_rotation(GateKind kind) noexcept {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

const char* gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
  }
  return "?";
}

Gate Gate::rx(std::size_t target, std::size_t slot, double scale) {
  return {GateKind::RX, target, std::nullopt, slot, scale};
}
Gate Gate::ry(std::size_t target, std::size_t slot, double scale) {
  return {GateKind::RY, target, std::nullopt, slot, scale};
}
Gate Gate::rz(std::size_t target, std::size_t slot, double scale) {
  return {GateKind::RZ, target, std::nullopt, slot, scale};
}
Gate Gate::cx(std::size_t control, std::size_t target) {
  return {GateKind::CX, target, control, std::nullopt, 1.0};
}
Gate Gate::cz(std::size_t control, std::size_t target) {
  return {GateKind::CZ, target, control, std::nullopt, 1.0};
}

Circuit::Circuit(std::size_t n_qubits, std::vector<Gate> gates)
    : n_qubits_(n_qubits), gates_(std::move(gates)) {
  if (n_qubits == 0 || n_qubits > kMaxSimulatedQubits) {
    throw InvalidArgument("circuit qubit count out of range: " + std::to_string(n_qubits));
  }
  std::vector<bool> used;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    const std::string where = std::string(gate_name(g.kind)) + " at position " + std::to_string(i);
    if (g.target >= n_qubits) throw InvalidArgument(where + ": target out of range");
    if (is_rotation(g.kind)) {
      if (!g.parameter_slot) throw InvalidArgument(where + ": rotation without parameter slot");
      if (g.control) throw InvalidArgument(where + ": rotation with a control qubit");
      if (!std::isfinite(g.angle_scale) || g.angle_scale == 0.0) {
        throw InvalidArgument(where + ": angle scale must be finite and nonzero");
      }
      const std::size_t slot = *g.parameter_slot;
      if (slot >= used.size()) used.resize(slot + 1, false);
      used[slot] = true;
    } else {
      if (!g.control) throw InvalidArgument(where + ": two-qubit gate without control");
      if (g.parameter_slot) throw InvalidArgument(where + ": entangler with a parameter slot");
      if (*g.control >= n_qubits) throw InvalidArgument(where + ": control out of range");
      if (*g.control == g.target) throw InvalidArgument(where + ": control equals target");
    }
  }
  if (auto it = std::find(used.begin(), used.end(), false); it != used.end()) {
    throw InvalidArgument("parameter slot " + std::to_string(it - used.begin()) + " is never used");
  }
  n_params_ = used.size();
}

std::size_t Circuit::count(GateKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::n_parameterized_gates() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(), [](const Gate& g) { return g.parameter_slot.has_value(); }));
}

Statevector apply_circuit(const Circuit& circuit, const ParameterVector& theta,
                          const Statevector& psi0, std::optional<GateShift> shift) {
  if (static_cast<std::size_t>(theta.size()) != circuit.n_params()) {
    throw DimensionError("circuit expects " + std::to_string(circuit.n_params()) +
                         " parameters, got " + std::to_string(theta.size()));
  }
  if (psi0.n_qubits() != circuit.n_qubits()) {
    throw DimensionError("circuit acts on " + std::to_string(circuit.n_qubits()) +
                         " qubits, state has " + std::to_string(psi0.n_qubits()));
  }
  if (shift && shift->gate_index >= circuit.gates().size()) {
    throw InvalidArgument("shifted gate index out of range");
  }
  Statevector psi = psi0;
  const auto gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    double angle = 0.0;
    if (g.parameter_slot) {
      angle = g.angle_scale * theta[static_cast<Eigen::Index>(*g.parameter_slot)];
      if (shift && shift->gate_index == i) angle += shift->offset;
    }
    switch (g.kind) {
      case GateKind::RX: psi.apply_rx(g.target, angle); break;
      case GateKind::RY: psi.apply_ry(g.target, angle); break;
      case GateKind::RZ: psi.apply_rz(g.target, angle); break;
      case GateKind::CX: psi.apply_cx(*g.control, g.target); break;
      case GateKind::CZ: psi.apply_cz(*g.control, g.target); break;
    }
  }
  return psi;
}

}  // namespace ngdvqe
