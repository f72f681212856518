#include "ngdvqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include <Eigen/Eigenvalues>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

namespace {

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1.0, 0.0, 0.0, 1.0; break;
    case Pauli::X: m << 0.0, 1.0, 1.0, 0.0; break;
    case Pauli::Y: m << 0.0, -1i, 1i, 0.0; break;
    case Pauli::Z: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Pauli> parse_pauli_string(std::string_view token, std::size_t line_no) {
  std::vector<Pauli> out;
  out.reserve(token.size());
  for (char c : token) {
    switch (c) {
      case 'I': out.push_back(Pauli::I); break;
      case 'X': out.push_back(Pauli::X); break;
      case 'Y': out.push_back(Pauli::Y); break;
      case 'Z': out.push_back(Pauli::Z); break;
      default:
        throw ParseError("line " + std::to_string(line_no) + ": invalid Pauli character '" +
                         std::string(1, c) + "' (expected I, X, Y or Z)");
    }
  }
  return out;
}

double parse_coefficient(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  if (!token.empty() && *begin == '+') ++begin;  // from_chars rejects a leading '+'
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    const bool looks_complex = token.find_first_of("ij") != std::string_view::npos;
    throw ParseError("line " + std::to_string(line_no) + ": malformed coefficient '" +
                     std::string(token) + "'" +
                     (looks_complex ? " (complex coefficients are not supported)" : ""));
  }
  if (!std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) + ": coefficient is not finite");
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

char pauli_char(Pauli p) noexcept {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

std::string PauliTerm::label() const {
  std::string s;
  s.reserve(paulis.size());
  for (Pauli p : paulis) s.push_back(pauli_char(p));
  return s;
}

Hamiltonian::Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits == 0) throw InvalidArgument("Hamiltonian needs at least one qubit");
  if (terms_.empty()) throw InvalidArgument("Hamiltonian needs at least one term");
  for (const auto& t : terms_) {
    if (t.paulis.size() != n_qubits) {
      throw InvalidArgument("term '" + t.label() + "' has length " +
                            std::to_string(t.paulis.size()) + ", expected " +
                            std::to_string(n_qubits));
    }
    if (!std::isfinite(t.coefficient)) {
      throw InvalidArgument("term '" + t.label() + "' has a non-finite coefficient");
    }
  }
}

Hamiltonian Hamiltonian::canonicalize() const {
  std::map<std::string, PauliTerm> merged;
  for (const auto& t : terms_) {
    auto [it, inserted] = merged.try_emplace(t.label(), t);
    if (!inserted) it->second.coefficient += t.coefficient;
  }
  std::vector<PauliTerm> out;
  out.reserve(merged.size());
  for (auto& [label, term] : merged) out.push_back(std::move(term));
  return Hamiltonian(n_qubits_, std::move(out));
}

Hamiltonian Hamiltonian::scaled(double factor) const {
  auto terms = terms_;
  for (auto& t : terms) t.coefficient *= factor;
  return Hamiltonian(n_qubits_, std::move(terms));
}

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("cannot add Hamiltonians on different registers");
  }
  auto terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Hamiltonian(a.n_qubits(), std::move(terms));
}

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::vector<PauliTerm> terms;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto split = line.find_first_of(" \t");
    if (split == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<coefficient> <pauli-string>'");
    }
    const auto coeff_token = line.substr(0, split);
    const auto rest = trim(line.substr(split));
    if (rest.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after Pauli string");
    }

    PauliTerm term{parse_coefficient(coeff_token, line_no), parse_pauli_string(rest, line_no)};
    if (terms.empty()) {
      width = term.paulis.size();
    } else if (term.paulis.size() != width) {
      throw ParseError("line " + std::to_string(line_no) + ": Pauli string length " +
                       std::to_string(term.paulis.size()) + " is inconsistent with " +
                       std::to_string(width));
    }
    terms.push_back(std::move(term));
  }
  if (terms.empty()) throw ParseError("Hamiltonian text contains no terms");
  return Hamiltonian(width, std::move(terms));
}

Hamiltonian load_hamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open Hamiltonian file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hamiltonian(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string to_text(const Hamiltonian& h) {
  std::string out;
  for (const auto& t : h.terms()) {
    out += format_double(t.coefficient);
    out += ' ';
    out += t.label();
    out += '\n';
  }
  return out;
}

double expectation(const Hamiltonian& h, const Statevector& psi) {
  if (psi.n_qubits() != h.n_qubits()) {
    throw DimensionError("state has " + std::to_string(psi.n_qubits()) +
                         " qubits, Hamiltonian has " + std::to_string(h.n_qubits()));
  }
  if (std::abs(psi.norm_squared() - 1.0) > 1e-8) {
    throw InvalidArgument("state is not normalized (norm^2 = " +
                          std::to_string(psi.norm_squared()) + ")");
  }
  const auto amps = psi.amplitudes();
  double energy = 0.0;
  double imag = 0.0;
  for (const auto& term : h.terms()) {
    // P|b> = i^{nY} (-1)^{|b & yz|} |b ^ x>
    std::size_t x_mask = 0;
    std::size_t yz_mask = 0;
    unsigned n_y = 0;
    for (std::size_t q = 0; q < term.paulis.size(); ++q) {
      const std::size_t bit = std::size_t{1} << q;
      switch (term.paulis[q]) {
        case Pauli::I: break;
        case Pauli::X: x_mask |= bit; break;
        case Pauli::Y: x_mask |= bit; yz_mask |= bit; ++n_y; break;
        case Pauli::Z: yz_mask |= bit; break;
      }
    }
    Complex acc{0.0, 0.0};
    for (std::size_t b = 0; b < amps.size(); ++b) {
      const Complex v = std::conj(amps[b ^ x_mask]) * amps[b];
      acc += (std::popcount(b & yz_mask) & 1U) ? -v : v;
    }
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    acc *= kIPow[n_y % 4];
    energy += term.coefficient * acc.real();
    imag += term.coefficient * acc.imag();
  }
  if (std::abs(imag) > 1e-10) {
    throw Error("expectation value has imaginary part " + std::to_string(imag));
  }
  return energy;
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian& h) {
  const std::size_t n = h.n_qubits();
  if (n > kMaxDenseQubits) {
    throw InvalidArgument("dense matrix limited to " + std::to_string(kMaxDenseQubits) +
                          " qubits, got " + std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms()) {
    // Highest qubit is the most significant factor.
    Eigen::MatrixXcd m = pauli_matrix(term.paulis[n - 1]);
    for (std::size_t q = n - 1; q-- > 0;) m = kron(m, pauli_matrix(term.paulis[q]));
    total += term.coefficient * m;
  }
  return total;
}

Eigen::VectorXd spectrum(const Hamiltonian& h) {
  const Eigen::MatrixXcd m = dense_matrix(h);
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double ground_energy_exact(const Hamiltonian& h) { return spectrum(h)(0); }

}  // namespace ngdvqe
