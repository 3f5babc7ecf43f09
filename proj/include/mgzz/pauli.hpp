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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mgzz {

/// Largest qubit count a PauliKey can hold (two bits per qubit in 64 bits).
inline constexpr unsigned kMaxQubits = 32;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter(Pauli p);

/// An n-qubit Hermitian Pauli string packed two bits per qubit.
///
/// Qubits are numbered from 1. Qubit q occupies bits [2(q-1), 2(q-1)+1] with
/// I=00, X=01, Y=10, Z=11, so qubit 1 is the least-significant pair. The text
/// form lists qubit 1 first ("ZIXY" has Z on qubit 1).
class PauliKey {
 public:
  PauliKey() = default;
  PauliKey(unsigned num_qubits, std::uint64_t code);

  static PauliKey identity(unsigned num_qubits);
  /// Parses a string over {I,X,Y,Z}; throws std::invalid_argument naming the
  /// offending position.
  static PauliKey from_string(std::string_view text);
  static PauliKey single(unsigned num_qubits, unsigned qubit, Pauli p);

  unsigned num_qubits() const { return num_qubits_; }
  std::uint64_t code() const { return code_; }
  bool is_identity() const { return code_ == 0; }

  Pauli at(unsigned qubit) const;
  PauliKey with(unsigned qubit, Pauli p) const;
  /// Number of non-identity letters.
  unsigned weight() const;
  std::string str() const;

  friend bool operator==(const PauliKey&, const PauliKey&) = default;

 private:
  unsigned num_qubits_ = 0;
  std::uint64_t code_ = 0;
};

/// i^phase_exp * key.
struct PhasedPauli {
  PauliKey key;
  int phase_exp = 0;

  friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

namespace bits {

inline constexpr std::uint64_t kLowMask = 0x5555555555555555ULL;

inline constexpr std::uint64_t qubit_mask(unsigned num_qubits) {
  return num_qubits >= 32 ? ~0ULL : ((1ULL << (2 * num_qubits)) - 1);
}

/// One bit per qubit (at the even position) set where the letter is not I.
inline constexpr std::uint64_t nonidentity(std::uint64_t code) {
  return (code | (code >> 1)) & kLowMask;
}

/// Phase exponent q of the product a*b of two Hermitian Pauli strings given
/// as raw codes; the product key is a ^ b.
inline int product_phase(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t alo = a & kLowMask, ahi = (a >> 1) & kLowMask;
  const std::uint64_t blo = b & kLowMask, bhi = (b >> 1) & kLowMask;
  const std::uint64_t ax = alo & ~ahi, ay = ~alo & ahi, az = alo & ahi;
  const std::uint64_t bx = blo & ~bhi, by = ~blo & bhi, bz = blo & bhi;
  // XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
  const std::uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
  const std::uint64_t minus = (ay & bx) | (az & by) | (ax & bz);
  return (std::popcount(plus) - std::popcount(minus)) & 3;
}

inline bool anticommute(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t clash = nonidentity(a) & nonidentity(b) & nonidentity(a ^ b);
  return (std::popcount(clash) & 1) != 0;
}

/// Majorana degree of the Jordan-Wigner preimage of a Pauli code.
int majorana_degree(std::uint64_t code, unsigned num_qubits);

}  // namespace bits

/// P*Q with its phase. Throws std::invalid_argument on a size mismatch.
PhasedPauli multiply(const PauliKey& p, const PauliKey& q);
bool commutes(const PauliKey& p, const PauliKey& q);

/// Two-qubit support code: letter on the first qubit of the pair in bits 0-1,
/// letter on the second in bits 2-3.
using SupportCode = std::uint8_t;

struct SupportSplit {
  SupportCode support = 0;
  /// The remaining n-2 qubits, in their original order.
  PauliKey stem;
};

/// Splits P into its letters on (first, first+1) and the rest.
SupportSplit support_split(const PauliKey& p, unsigned first);
PauliKey recombine(SupportCode support, const PauliKey& stem, unsigned first);

/// A product c_{s1} c_{s2} ... c_{sk} of Majorana operators with strictly
/// increasing indices in [1, 2n].
class SpinorMonomial {
 public:
  SpinorMonomial() = default;
  SpinorMonomial(unsigned num_qubits, std::vector<unsigned> indices);

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<unsigned>& indices() const { return indices_; }
  unsigned degree() const { return static_cast<unsigned>(indices_.size()); }

  friend bool operator==(const SpinorMonomial&, const SpinorMonomial&) = default;

 private:
  unsigned num_qubits_ = 0;
  std::vector<unsigned> indices_;
};

/// Jordan-Wigner image of a single Majorana operator c_mu (mu in [1, 2n]).
PauliKey majorana_operator(unsigned num_qubits, unsigned mu);

/// The monomial c_S and phase q with c_S = i^q * P.
std::pair<SpinorMonomial, int> pauli_to_spinor(const PauliKey& p);
/// Inverse of pauli_to_spinor: returns (P, q) with c_S = i^q * P.
PhasedPauli spinor_to_pauli(const SpinorMonomial& s);

int majorana_degree(const PauliKey& p);

}  // namespace mgzz
