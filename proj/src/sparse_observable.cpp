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

#include "mgzz/sparse_observable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mgzz {

SparseObservable::SparseObservable(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("at most " + std::to_string(kMaxQubits) + " qubits supported");
  }
}

SparseObservable SparseObservable::single_z(unsigned num_qubits, unsigned qubit) {
  SparseObservable obs(num_qubits);
  obs.set(PauliKey::single(num_qubits, qubit, Pauli::Z), 1.0);
  return obs;
}

double SparseObservable::coefficient(const PauliKey& key) const {
  if (key.num_qubits() != num_qubits_) throw std::invalid_argument("observable size mismatch");
  return coefficient(key.code());
}

void SparseObservable::set(const PauliKey& key, double value) {
  if (key.num_qubits() != num_qubits_) throw std::invalid_argument("observable size mismatch");
  set(key.code(), value);
}

void SparseObservable::add(const PauliKey& key, double value) {
  set(key, coefficient(key) + value);
}

double SparseObservable::prune(double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("pruning threshold must be non-negative");
  if (epsilon == 0.0) return 0.0;
  double removed = 0.0;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < epsilon) {
      removed += std::abs(it->second);
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return removed;
}

double SparseObservable::norm_squared() const {
  double total = 0.0;
  for (const auto& [code, v] : terms_) total += v * v;
  return total;
}

double SparseObservable::l1_norm() const {
  double total = 0.0;
  for (const auto& [code, v] : terms_) total += std::abs(v);
  return total;
}

int SparseObservable::max_majorana_degree() const {
  int best = 0;
  for (const auto& [code, v] : terms_) best = std::max(best, bits::majorana_degree(code, num_qubits_));
  return best;
}

std::vector<std::pair<PauliKey, double>> SparseObservable::sorted_terms() const {
  std::vector<std::pair<PauliKey, double>> out;
  out.reserve(terms_.size());
  for (const auto& [code, v] : terms_) out.emplace_back(PauliKey(num_qubits_, code), v);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.code() < b.first.code(); });
  return out;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

ProductState::ProductState(std::vector<BlochVector> qubits) : qubits_(std::move(qubits)) {
  if (qubits_.size() > kMaxQubits) throw std::invalid_argument("too many qubits in product state");
  for (std::size_t q = 0; q < qubits_.size(); ++q) {
    const auto& r = qubits_[q];
    if (!std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.z) || r.norm() > 1.0 + 1e-12) {
      throw std::invalid_argument("Bloch vector of qubit " + std::to_string(q + 1) +
                                  " is not a valid state (|r| > 1)");
    }
  }
}

ProductState ProductState::zeros(unsigned num_qubits) {
  return ProductState(std::vector<BlochVector>(num_qubits, BlochVector{0.0, 0.0, 1.0}));
}

ProductState ProductState::from_bits(std::string_view bits) {
  std::vector<BlochVector> qubits;
  qubits.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw std::invalid_argument("bit string has '" + std::string(1, bits[i]) + "' at position " +
                                  std::to_string(i + 1));
    }
    qubits.push_back({0.0, 0.0, bits[i] == '0' ? 1.0 : -1.0});
  }
  return ProductState(std::move(qubits));
}

bool ProductState::is_pure(double tol) const {
  return std::all_of(qubits_.begin(), qubits_.end(),
                     [tol](const BlochVector& r) { return std::abs(r.norm() - 1.0) <= tol; });
}

double ProductState::factor(unsigned q, Pauli p) const {
  const BlochVector& r = qubit(q);
  switch (p) {
    case Pauli::I: return 1.0;
    case Pauli::X: return r.x;
    case Pauli::Y: return r.y;
    case Pauli::Z: return r.z;
  }
  return 0.0;
}

double ProductState::trace_with(std::uint64_t code) const {
  double value = 1.0;
  for (std::size_t q = 0; q < qubits_.size() && code != 0; ++q, code >>= 2) {
    switch (code & 3u) {
      case 1: value *= qubits_[q].x; break;
      case 2: value *= qubits_[q].y; break;
      case 3: value *= qubits_[q].z; break;
      default: break;
    }
    if (value == 0.0) return 0.0;
  }
  return value;
}

double expectation_against(const SparseObservable& obs, const ProductState& state) {
  if (obs.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("observable has " + std::to_string(obs.num_qubits()) +
                                " qubits but state has " + std::to_string(state.num_qubits()));
  }
  // Sum in key order so the result does not depend on hash iteration order.
  double total = 0.0;
  for (const auto& [key, v] : obs.sorted_terms()) total += v * state.trace_with(key.code());
  return total;
}

}  // namespace mgzz
