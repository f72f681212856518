#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "ngdvqe/pauli.hpp"
#include "ngdvqe/statevector.hpp"

namespace testsupport {

using ngdvqe::Complex;

inline ngdvqe::Statevector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<Complex> a(std::size_t{1} << n);
  double s = 0.0;
  for (auto& z : a) {
    z = {d(rng), d(rng)};
    s += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(s);
  return ngdvqe::Statevector::from_amplitudes(std::move(a));
}

inline ngdvqe::Hamiltonian random_hamiltonian(std::size_t n, std::size_t terms,
                                              std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<ngdvqe::PauliTerm> t;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<ngdvqe::Pauli> p(n);
    for (auto& x : p) x = static_cast<ngdvqe::Pauli>(pick(rng));
    t.push_back({coeff(rng), std::move(p)});
  }
  return ngdvqe::Hamiltonian(n, std::move(t));
}

inline Eigen::VectorXcd to_eigen(const ngdvqe::Statevector& psi) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.dimension()));
  for (std::size_t i = 0; i < psi.dimension(); ++i) v[static_cast<Eigen::Index>(i)] = psi[i];
  return v;
}

inline ngdvqe::ParameterVector random_angles(Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-M_PI, M_PI);
  ngdvqe::ParameterVector x(n);
  for (auto& v : x) v = a(rng);
  return x;
}

}  // namespace testsupport
