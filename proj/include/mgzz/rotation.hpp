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

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>

#include "mgzz/gates.hpp"
#include "mgzz/pauli.hpp"

namespace mgzz {

using Matrix16 = Eigen::Matrix<double, 16, 16>;

/// Pauli-basis rotation of a two-qubit gate:
///   R[a][b] = Tr(U^dag p_a U p_b) / 4,  so  U^dag p_a U = sum_b R[a][b] p_b.
///
/// When no entry couples supports of different Majorana degree (beyond 1e-10)
/// the rotation is kept as five blocks over graded_basis(0..4); otherwise as
/// one dense 16x16 matrix indexed by SupportCode.
struct RotationBlocks {
  std::array<Eigen::MatrixXd, 5> blocks;
  std::optional<Matrix16> dense;
  int max_row_sparsity = 0;

  bool block_diagonal() const { return !dense.has_value(); }
  /// Full 16x16 matrix indexed by SupportCode.
  Matrix16 full() const;
};

/// Two-qubit Paulis of Majorana degree d, in the order
///   d=0: II   d=1: XI YI ZX ZY   d=2: ZI XY XX YX YY IZ   d=3: IX IY XZ YZ   d=4: ZZ
/// (leftmost letter on the first qubit of the pair).
std::span<const SupportCode> graded_basis(int degree);

/// Majorana degree of a two-qubit support code.
int support_degree(SupportCode s);

/// The full 16x16 transfer matrix, indexed by SupportCode.
Matrix16 pauli_transfer_matrix(const Matrix4c& u);

/// Throws std::invalid_argument for a non-unitary input (tolerance 1e-10).
RotationBlocks rotations(const Matrix4c& u);

/// Debug dump: one row per nonzero entry "block,row_pauli,col_pauli,value".
std::string blocks_to_csv(const RotationBlocks& r);

/// Memoises rotations() per distinct matrix (entries rounded at 1e-14).
/// Concurrent lookups share a lock; inserts take it exclusively.
class RotationCache {
 public:
  using Hook = std::function<void(RotationBlocks&)>;

  RotationCache() = default;
  /// The hook runs once on every freshly built table before it is cached.
  explicit RotationCache(Hook hook) : hook_(std::move(hook)) {}

  std::shared_ptr<const RotationBlocks> get(const Matrix4c& u);
  std::size_t size() const;

 private:
  using Key = std::array<std::int64_t, 32>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Hook hook_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, std::shared_ptr<const RotationBlocks>, KeyHash> tables_;
};

}  // namespace mgzz
