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

#include "mgzz/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mgzz/bounds.hpp"

namespace mgzz::dense {
namespace {

using cd = std::complex<double>;

constexpr std::size_t kMaxCompoundSize = 4096;

void check_size(unsigned n, unsigned limit, const char* what) {
  if (n > limit) {
    throw std::length_error(std::string(what) + " supports at most " + std::to_string(limit) + " qubits, got " +
                            std::to_string(n));
  }
}

std::uint64_t bit_of(unsigned num_qubits, unsigned qubit) { return 1ULL << (num_qubits - qubit); }

// Applies a 2^w x 2^w matrix to the listed qubits; qubits[0] is the most
// significant bit of the local index.
void apply_local(StateVector& psi, unsigned num_qubits, const std::vector<unsigned>& qubits,
                 const Eigen::MatrixXcd& m) {
  const std::size_t w = qubits.size();
  const std::size_t dim = std::size_t{1} << w;
  std::vector<std::uint64_t> offsets(dim, 0);
  std::uint64_t mask = 0;
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t t = 0; t < w; ++t) {
      if ((l >> (w - 1 - t)) & 1u) offsets[l] |= bit_of(num_qubits, qubits[t]);
    }
  }
  for (unsigned q : qubits) mask |= bit_of(num_qubits, q);
  Eigen::VectorXcd v(dim);
  const std::uint64_t size = 1ULL << num_qubits;
  for (std::uint64_t base = 0; base < size; ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < dim; ++l) v[l] = psi[base | offsets[l]];
    const Eigen::VectorXcd out = m * v;
    for (std::size_t l = 0; l < dim; ++l) psi[base | offsets[l]] = out[l];
  }
}

}  // namespace

std::pair<std::uint64_t, cd> pauli_action(std::uint64_t code, unsigned num_qubits, std::uint64_t x) {
  std::uint64_t y = x;
  cd phase = 1.0;
  for (unsigned q = 1; q <= num_qubits; ++q) {
    const unsigned letter = (code >> (2 * (q - 1))) & 3u;
    if (letter == 0) continue;
    const std::uint64_t bit = bit_of(num_qubits, q);
    const bool one = (x & bit) != 0;
    switch (letter) {
      case 1: y ^= bit; break;
      case 2:
        y ^= bit;
        phase *= one ? cd(0, -1) : cd(0, 1);
        break;
      default:
        if (one) phase = -phase;
    }
  }
  return {y, phase};
}

Eigen::MatrixXcd pauli_matrix(const PauliKey& key) {
  const unsigned n = key.num_qubits();
  check_size(n, 12, "pauli_matrix");
  const std::uint64_t dim = 1ULL << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    auto [y, phase] = pauli_action(key.code(), n, x);
    m(y, x) = phase;
  }
  return m;
}

StateVector product_state(const ProductState& state) {
  const unsigned n = state.num_qubits();
  check_size(n, kMaxStatevectorQubits, "statevector oracle");
  if (!state.is_pure()) throw std::invalid_argument("statevector oracle needs a pure product state");
  StateVector psi = StateVector::Ones(1);
  for (unsigned q = 1; q <= n; ++q) {
    const BlochVector& r = state.qubit(q);
    const double theta = std::acos(std::clamp(r.z, -1.0, 1.0));
    const double phi = std::atan2(r.y, r.x);
    const cd a0 = std::cos(theta / 2), a1 = std::polar(std::sin(theta / 2), phi);
    StateVector next(psi.size() * 2);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      next[2 * i] = psi[i] * a0;
      next[2 * i + 1] = psi[i] * a1;
    }
    psi = std::move(next);
  }
  return psi;
}

void apply_gate(StateVector& psi, unsigned num_qubits, const Gate& gate) {
  if (const auto* e = std::get_if<PauliExp>(&gate)) {
    // exp(i phi P) = cos(phi) + i sin(phi) P.
    const StateVector in = psi;
    const cd s(0, std::sin(e->angle));
    psi = std::cos(e->angle) * in;
    for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(in.size()); ++x) {
      auto [y, phase] = pauli_action(e->generator.code(), num_qubits, x);
      psi[y] += s * phase * in[x];
    }
    return;
  }
  apply_local(psi, num_qubits, gate_qubits(gate), gate_matrix(gate));
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  const unsigned n = circuit.num_qubits();
  check_size(n, kMaxCircuitUnitaryQubits, "circuit_unitary");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector v = u.col(col);
    for (const Gate& g : circuit.gates()) apply_gate(v, n, g);
    u.col(col) = v;
  }
  return u;
}

double statevector_expectation(const Circuit& circuit, const ProductState& state, unsigned qubit) {
  const unsigned n = circuit.num_qubits();
  if (state.num_qubits() != n) throw std::invalid_argument("state size mismatch");
  if (qubit < 1 || qubit > n) throw std::out_of_range("measured qubit outside the register");
  StateVector psi = product_state(state);
  for (const Gate& g : circuit.gates()) apply_gate(psi, n, g);
  const std::uint64_t bit = bit_of(n, qubit);
  double value = 0.0;
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    value += (static_cast<std::uint64_t>(x) & bit ? -1.0 : 1.0) * std::norm(psi[x]);
  }
  return value;
}

SparseObservable pauli_conjugation_decompose(const Circuit& circuit, const SparseObservable& obs) {
  const unsigned n = circuit.num_qubits();
  check_size(n, kMaxUnitaryQubits, "pauli_conjugation_decompose");
  if (obs.num_qubits() != n) throw std::invalid_argument("observable size mismatch");
  const std::uint64_t dim = 1ULL << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [code, v] : obs.terms()) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      auto [y, phase] = pauli_action(code, n, x);
      m(y, x) += v * phase;
    }
  }
  const Eigen::MatrixXcd u = circuit_unitary(circuit);
  const Eigen::MatrixXcd conj = u.adjoint() * m * u;
  SparseObservable out(n);
  const std::uint64_t keys = 1ULL << (2 * n);
  for (std::uint64_t code = 0; code < keys; ++code) {
    // Tr(P A) = sum_x P(x, y) A(y, x), where P(x, y) = conj(phase) since P is Hermitian.
    cd trace = 0.0;
    for (std::uint64_t x = 0; x < dim; ++x) {
      auto [y, phase] = pauli_action(code, n, x);
      trace += std::conj(phase) * conj(y, x);
    }
    const double v = trace.real() / static_cast<double>(dim);
    if (std::abs(v) >= 1e-12) out.set(code, v);
  }
  return out;
}

OrthogonalAction so2n_matrix(const Circuit& circuit) {
  const unsigned n = circuit.num_qubits();
  check_size(n, kMaxUnitaryQubits, "so2n_matrix");
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    if (gate_class(circuit[i]) != GateClass::Matchgate) {
      throw std::invalid_argument("so2n_matrix: gate " + std::to_string(i) + " (" + gate_kind(circuit[i]) +
                                  ") is not a matchgate");
    }
  }
  const Eigen::MatrixXcd u = circuit_unitary(circuit);
  const unsigned modes = 2 * n;
  std::vector<Eigen::MatrixXcd> majoranas;
  for (unsigned mu = 1; mu <= modes; ++mu) majoranas.push_back(pauli_matrix(majorana_operator(n, mu)));
  const double dim = std::exp2(n);
  OrthogonalAction out;
  out.matrix.resize(modes, modes);
  for (unsigned mu = 0; mu < modes; ++mu) {
    const Eigen::MatrixXcd evolved = u.adjoint() * majoranas[mu] * u;
    for (unsigned nu = 0; nu < modes; ++nu) out.matrix(mu, nu) = (majoranas[nu] * evolved).trace().real() / dim;
  }
  out.determinant = out.matrix.determinant();
  return out;
}

std::vector<std::vector<unsigned>> lexicographic_subsets(unsigned size, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k > size) return out;
  std::vector<unsigned> s(k);
  for (unsigned i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && s[i] == size - k + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (unsigned j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& r, unsigned k) {
  if (r.rows() != r.cols()) throw std::invalid_argument("compound_matrix needs a square matrix");
  const auto size = static_cast<unsigned>(r.rows());
  if (k < 1 || k > size) throw std::out_of_range("compound order outside [1, size]");
  if (bounds::binomial(size, k) > kMaxCompoundSize) {
    throw std::length_error("compound matrix of order " + std::to_string(k) + " would exceed " +
                            std::to_string(kMaxCompoundSize) + " rows");
  }
  const auto subsets = lexicographic_subsets(size, k);
  const auto count = static_cast<Eigen::Index>(subsets.size());
  Eigen::MatrixXd out(count, count);
  Eigen::MatrixXd minor(k, k);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = 0; j < count; ++j) {
      for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b) minor(a, b) = r(subsets[i][a] - 1, subsets[j][b] - 1);
      out(i, j) = minor.determinant();
    }
  }
  return out;
}

}  // namespace mgzz::dense
