#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace ngdvqe {

using Complex = std::complex<double>;
using ParameterVector = Eigen::VectorXd;

inline constexpr std::size_t kMaxSimulatedQubits = 20;

/// Dense amplitude vector of an n-qubit register. Qubit q is bit q of the
/// basis-state index (qubit 0 is the least significant bit).
class Statevector {
 public:
  /// |0...0> on n qubits.
  explicit Statevector(std::size_t n_qubits);

  /// Wraps explicit amplitudes; the length must be a power of two >= 2.
  /// No normalization is applied or checked here.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const noexcept;

  /// exp(-i angle X / 2) etc. on one qubit.
  void apply_rx(std::size_t qubit, double angle);
  void apply_ry(std::size_t qubit, double angle);
  void apply_rz(std::size_t qubit, double angle);
  void apply_cx(std::size_t control, std::size_t target);
  void apply_cz(std::size_t control, std::size_t target);

 private:
  Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes);
  void check_qubit(std::size_t qubit) const;

  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// |0>^n for 1 <= n <= kMaxSimulatedQubits.
Statevector zero_state(int n_qubits);

/// <0...0|psi>.
Complex amplitude_zero(const Statevector& psi);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const Statevector& a, const Statevector& b);

enum class GateKind : std::uint8_t { RX, RY, RZ, CX, CZ };

bool is_rotation(GateKind kind) noexcept;
const char* gate_name(GateKind kind) noexcept;

/// One circuit instruction. Rotation gates read their angle from a parameter
/// slot: angle = angle_scale * theta[slot]. With angle_scale == 1 the gate is
/// exp(-i theta P / 2); with angle_scale == 2 it is exp(-i theta P).
struct Gate {
  GateKind kind;
  std::size_t target;
  std::optional<std::size_t> control;
  std::optional<std::size_t> parameter_slot;
  double angle_scale = 1.0;

  static Gate rx(std::size_t target, std::size_t slot, double scale = 1.0);
  static Gate ry(std::size_t target, std::size_t slot, double scale = 1.0);
  static Gate rz(std::size_t target, std::size_t slot, double scale = 1.0);
  static Gate cx(std::size_t control, std::size_t target);
  static Gate cz(std::size_t control, std::size_t target);
};

/// An ordered, validated gate list over a fixed register.
class Circuit {
 public:
  /// Throws InvalidArgument if a gate is malformed, touches a qubit outside
  /// the register, or the parameter slots are not exactly 0..n_params-1.
  Circuit(std::size_t n_qubits, std::vector<Gate> gates);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t n_params() const noexcept { return n_params_; }
  std::span<const Gate> gates() const noexcept { return gates_; }

  std::size_t count(GateKind kind) const noexcept;
  /// Number of gates that read a parameter slot.
  std::size_t n_parameterized_gates() const noexcept;

 private:
  std::size_t n_qubits_;
  std::size_t n_params_ = 0;
  std::vector<Gate> gates_;
};

/// Adds `offset` to the angle of a single gate occurrence. Used by the
/// parameter-shift rule when a slot feeds several gates.
struct GateShift {
  std::size_t gate_index;
  double offset;
};

Statevector apply_circuit(const Circuit& circuit, const ParameterVector& theta,
                          const Statevector& psi0,
                          std::optional<GateShift> shift = std::nullopt);

}  // namespace ngdvqe
