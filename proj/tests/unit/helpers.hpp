// Copyright 2026 The mgzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "mgzz/dense_oracle.hpp"
#include "mgzz/sparse_observable.hpp"

namespace mgzz::testing {

inline ProductState random_pure_state(unsigned n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<BlochVector> qubits;
  for (unsigned q = 0; q < n; ++q) {
    const double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    qubits.push_back({x / r, y / r, z / r});
  }
  return ProductState(std::move(qubits));
}

inline ProductState random_mixed_state(unsigned n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> shrink(0.2, 1.0);
  ProductState pure = random_pure_state(n, rng);
  std::vector<BlochVector> qubits = pure.qubits();
  for (BlochVector& b : qubits) {
    const double s = shrink(rng);
    b = {b.x * s, b.y * s, b.z * s};
  }
  return ProductState(std::move(qubits));
}

inline double max_gap(const SparseObservable& a, const SparseObservable& b) {
  double gap = 0.0;
  for (const auto& [code, v] : a.terms()) gap = std::max(gap, std::abs(v - b.coefficient(code)));
  for (const auto& [code, v] : b.terms()) gap = std::max(gap, std::abs(v - a.coefficient(code)));
  return gap;
}

/// U^dag M U for a matchgate circuit and an observable of uniform Majorana
/// degree k, computed from the order-k compound of the orthogonal action.
inline SparseObservable compound_conjugation(const Circuit& circuit, const SparseObservable& obs, unsigned k) {
  using cd = std::complex<double>;
  const unsigned n = circuit.num_qubits();
  const Eigen::MatrixXd c = dense::compound_matrix(dense::so2n_matrix(circuit).matrix, k);
  const auto subsets = dense::lexicographic_subsets(2 * n, k);
  std::map<std::vector<unsigned>, Eigen::Index> row;
  for (std::size_t i = 0; i < subsets.size(); ++i) row[subsets[i]] = static_cast<Eigen::Index>(i);
  auto ipow = [](int q) { return std::pow(cd(0, 1), ((q % 4) + 4) % 4); };

  // Spinor coefficients m_S with M = sum_S m_S c_S; c_S = i^q P gives m_S = v_P i^{-q}.
  Eigen::VectorXcd m = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(subsets.size()));
  for (const auto& [code, v] : obs.terms()) {
    const auto [spinor, q] = pauli_to_spinor(PauliKey(n, code));
    if (spinor.degree() != k) throw std::invalid_argument("compound_conjugation: mixed degrees");
    m(row.at(spinor.indices())) += v * ipow(-q);
  }
  const Eigen::VectorXcd evolved = c.transpose().cast<cd>() * m;
  SparseObservable out(n);
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    const PhasedPauli p = spinor_to_pauli(SpinorMonomial(n, subsets[t]));
    const cd v = evolved(static_cast<Eigen::Index>(t)) * ipow(p.phase_exp);
    if (std::abs(v.imag()) > 1e-9) throw std::logic_error("compound_conjugation: complex Pauli coefficient");
    if (std::abs(v.real()) > 1e-12) out.set(p.key, v.real());
  }
  return out;
}

}  // namespace mgzz::testing
