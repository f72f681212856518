#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ngdvqe/statevector.hpp"

namespace ngdvqe {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p) noexcept;

/// coefficient * P_0 (x) P_1 (x) ... ; paulis[q] acts on qubit q, and qubit 0
/// is the leftmost character of the text form.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<Pauli> paulis;

  std::string label() const;
  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// A real-coefficient sum of Pauli strings over a fixed register.
class Hamiltonian {
 public:
  /// Throws InvalidArgument on an empty term list, a length mismatch, or a
  /// non-finite coefficient.
  Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::span<const PauliTerm> terms() const noexcept { return terms_; }

  /// Duplicate strings merged, terms sorted by label.
  Hamiltonian canonicalize() const;

  Hamiltonian scaled(double factor) const;
  /// Concatenates the term lists of two Hamiltonians on the same register.
  friend Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b);
  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Parses `<coefficient> <pauli-string>` lines; `#` starts a comment.
Hamiltonian parse_hamiltonian(std::string_view text);
Hamiltonian load_hamiltonian(const std::filesystem::path& path);

/// Inverse of parse_hamiltonian; coefficients use shortest round-trip form.
std::string to_text(const Hamiltonian& h);

/// <psi|H|psi>, applying each term by bit manipulation.
double expectation(const Hamiltonian& h, const Statevector& psi);

inline constexpr std::size_t kMaxDenseQubits = 12;

/// Kronecker-product expansion; row/column index uses the same qubit-to-bit
/// map as Statevector.
Eigen::MatrixXcd dense_matrix(const Hamiltonian& h);

/// All eigenvalues of dense_matrix(h), ascending.
Eigen::VectorXd spectrum(const Hamiltonian& h);

double ground_energy_exact(const Hamiltonian& h);

}  // namespace ngdvqe
