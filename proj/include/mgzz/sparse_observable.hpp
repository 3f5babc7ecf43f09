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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgzz/pauli.hpp"

namespace mgzz {

/// Sparse Pauli-basis vector of a Hermitian observable: M = sum_P v_P * P.
///
/// Coefficients are stored as given (the identity-normalised decomposition),
/// so a single Z_j starts at 1.0. Exact zeros are never stored; the entry
/// count is the Pauli rank.
class SparseObservable {
 public:
  using TermMap = std::unordered_map<std::uint64_t, double>;

  SparseObservable() = default;
  explicit SparseObservable(unsigned num_qubits);

  /// {Z_j : 1.0}.
  static SparseObservable single_z(unsigned num_qubits, unsigned qubit);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t pauli_rank() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  double coefficient(const PauliKey& key) const;
  double coefficient(std::uint64_t code) const {
    auto it = terms_.find(code);
    return it == terms_.end() ? 0.0 : it->second;
  }
  /// Stores v, or erases the entry when v == 0.
  void set(const PauliKey& key, double value);
  void set(std::uint64_t code, double value) {
    if (value == 0.0) {
      terms_.erase(code);
    } else {
      terms_[code] = value;
    }
  }
  void add(const PauliKey& key, double value);

  /// Removes entries with |v| < epsilon and returns the L1 mass removed.
  double prune(double epsilon);

  double norm_squared() const;
  double l1_norm() const;
  int max_majorana_degree() const;

  const TermMap& terms() const { return terms_; }
  void reserve(std::size_t n) { terms_.reserve(n); }
  /// Terms ordered by key code; the deterministic view for output and reductions.
  std::vector<std::pair<PauliKey, double>> sorted_terms() const;

 private:
  unsigned num_qubits_ = 0;
  TermMap terms_;
};

/// Bloch vector of a single-qubit density matrix (I + r.sigma)/2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const;
};

/// A product state rho_0 = tensor_j (I + r_j . sigma)/2.
class ProductState {
 public:
  ProductState() = default;
  explicit ProductState(std::vector<BlochVector> qubits);

  /// |0...0>.
  static ProductState zeros(unsigned num_qubits);
  /// Computational basis state from a bit string; character i is qubit i+1.
  static ProductState from_bits(std::string_view bits);

  unsigned num_qubits() const { return static_cast<unsigned>(qubits_.size()); }
  const BlochVector& qubit(unsigned q) const { return qubits_.at(q - 1); }
  const std::vector<BlochVector>& qubits() const { return qubits_; }
  bool is_pure(double tol = 1e-10) const;

  /// Tr(sigma rho_j) for a single letter on qubit q.
  double factor(unsigned q, Pauli p) const;
  /// Tr(P rho_0).
  double trace_with(std::uint64_t code) const;

 private:
  std::vector<BlochVector> qubits_;
};

/// <M> = sum_P v_P Tr(P rho_0). Cost O(rank * n).
double expectation_against(const SparseObservable& obs, const ProductState& state);

}  // namespace mgzz
