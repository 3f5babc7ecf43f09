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

#include "mgzz/rotation.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mgzz {
namespace {

constexpr SupportCode code(Pauli first, Pauli second) {
  return static_cast<SupportCode>(static_cast<unsigned>(first) | (static_cast<unsigned>(second) << 2));
}

using enum Pauli;
constexpr std::array<SupportCode, 1> kDegree0{code(I, I)};
constexpr std::array<SupportCode, 4> kDegree1{code(X, I), code(Y, I), code(Z, X), code(Z, Y)};
constexpr std::array<SupportCode, 6> kDegree2{code(Z, I), code(X, Y), code(X, X),
                                              code(Y, X), code(Y, Y), code(I, Z)};
constexpr std::array<SupportCode, 4> kDegree3{code(I, X), code(I, Y), code(X, Z), code(Y, Z)};
constexpr std::array<SupportCode, 1> kDegree4{code(Z, Z)};

constexpr double kCrossDegreeTol = 1e-10;
constexpr double kSparsityTol = 1e-12;

std::string support_str(SupportCode s) {
  return PauliKey(2, s).str();
}

}  // namespace

std::span<const SupportCode> graded_basis(int degree) {
  switch (degree) {
    case 0: return kDegree0;
    case 1: return kDegree1;
    case 2: return kDegree2;
    case 3: return kDegree3;
    case 4: return kDegree4;
  }
  throw std::out_of_range("two-qubit Majorana degree must be in [0, 4], got " + std::to_string(degree));
}

int support_degree(SupportCode s) { return bits::majorana_degree(s, 2); }

Matrix16 pauli_transfer_matrix(const Matrix4c& u) {
  std::array<Matrix4c, 16> paulis;
  std::array<Matrix4c, 16> conjugated;
  for (unsigned s = 0; s < 16; ++s) {
    paulis[s] = matrices::two_qubit_pauli(static_cast<SupportCode>(s));
    conjugated[s] = u.adjoint() * paulis[s] * u;
  }
  Matrix16 r;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) r(a, b) = (conjugated[a] * paulis[b]).trace().real() / 4.0;
  return r;
}

Matrix16 RotationBlocks::full() const {
  if (dense) return *dense;
  Matrix16 r = Matrix16::Zero();
  for (int d = 0; d <= 4; ++d) {
    const auto basis = graded_basis(d);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) r(basis[i], basis[j]) = blocks[d](i, j);
  }
  return r;
}

RotationBlocks rotations(const Matrix4c& u) {
  if (!u.allFinite() || !is_unitary(u, 1e-10)) throw std::invalid_argument("rotations: gate is not unitary");
  const Matrix16 r = pauli_transfer_matrix(u);

  RotationBlocks out;
  bool graded = true;
  for (unsigned a = 0; a < 16 && graded; ++a)
    for (unsigned b = 0; b < 16; ++b)
      if (support_degree(a) != support_degree(b) && std::abs(r(a, b)) > kCrossDegreeTol) {
        graded = false;
        break;
      }

  if (graded) {
    for (int d = 0; d <= 4; ++d) {
      const auto basis = graded_basis(d);
      Eigen::MatrixXd block(basis.size(), basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) block(i, j) = r(basis[i], basis[j]);
      out.blocks[d] = std::move(block);
    }
  } else {
    out.dense = r;
  }
  for (unsigned a = 0; a < 16; ++a) {
    int nonzeros = 0;
    for (unsigned b = 0; b < 16; ++b) nonzeros += std::abs(r(a, b)) > kSparsityTol;
    out.max_row_sparsity = std::max(out.max_row_sparsity, nonzeros);
  }
  return out;
}

std::string blocks_to_csv(const RotationBlocks& r) {
  std::ostringstream os;
  os.precision(17);
  os << "block,row,col,value\n";
  const Matrix16 full = r.full();
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      if (full(a, b) == 0.0) continue;
      const std::string block = r.block_diagonal() ? std::to_string(support_degree(a)) : "dense";
      os << block << ',' << support_str(a) << ',' << support_str(b) << ',' << full(a, b) << '\n';
    }
  }
  return os.str();
}

std::size_t RotationCache::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t v : k) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::shared_ptr<const RotationBlocks> RotationCache::get(const Matrix4c& u) {
  Key key;
  for (int i = 0; i < 16; ++i) {
    key[2 * i] = std::llround(u(i / 4, i % 4).real() * 1e14);
    key[2 * i + 1] = std::llround(u(i / 4, i % 4).imag() * 1e14);
  }
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  auto built = std::make_shared<RotationBlocks>(rotations(u));
  if (hook_) hook_(*built);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = tables_.emplace(key, std::move(built));
  return it->second;
}

std::size_t RotationCache::size() const {
  std::shared_lock lock(mutex_);
  return tables_.size();
}

}  // namespace mgzz
