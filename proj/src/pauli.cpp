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

#include "mgzz/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgzz {
namespace {

void check_qubit(unsigned num_qubits, unsigned qubit) {
  if (qubit < 1 || qubit > num_qubits) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside [1, " +
                            std::to_string(num_qubits) + "]");
  }
}

void check_same_size(const PauliKey& p, const PauliKey& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli size mismatch: " + std::to_string(p.num_qubits()) +
                                " vs " + std::to_string(q.num_qubits()));
  }
}

bool is_xy(unsigned letter) { return letter == 1 || letter == 2; }

// Letter seen by the Jordan-Wigner string: multiplying by Z swaps X<->Y and I<->Z.
unsigned effective_letter(unsigned letter, bool parity) { return parity ? letter ^ 3u : letter; }

}  // namespace

char pauli_letter(Pauli p) { return "IXYZ"[static_cast<unsigned>(p)]; }

PauliKey::PauliKey(unsigned num_qubits, std::uint64_t code) : num_qubits_(num_qubits), code_(code) {
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("at most " + std::to_string(kMaxQubits) + " qubits supported");
  }
  if ((code & ~bits::qubit_mask(num_qubits)) != 0) {
    throw std::invalid_argument("Pauli code has bits above qubit " + std::to_string(num_qubits));
  }
}

PauliKey PauliKey::identity(unsigned num_qubits) { return PauliKey(num_qubits, 0); }

PauliKey PauliKey::from_string(std::string_view text) {
  if (text.size() > kMaxQubits) {
    throw std::invalid_argument("Pauli string longer than " + std::to_string(kMaxQubits));
  }
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::uint64_t letter;
    switch (text[i]) {
      case 'I': letter = 0; break;
      case 'X': letter = 1; break;
      case 'Y': letter = 2; break;
      case 'Z': letter = 3; break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" + std::string(1, text[i]) +
                                    "' at position " + std::to_string(i + 1));
    }
    code |= letter << (2 * i);
  }
  return PauliKey(static_cast<unsigned>(text.size()), code);
}

PauliKey PauliKey::single(unsigned num_qubits, unsigned qubit, Pauli p) {
  return identity(num_qubits).with(qubit, p);
}

Pauli PauliKey::at(unsigned qubit) const {
  check_qubit(num_qubits_, qubit);
  return static_cast<Pauli>((code_ >> (2 * (qubit - 1))) & 3u);
}

PauliKey PauliKey::with(unsigned qubit, Pauli p) const {
  check_qubit(num_qubits_, qubit);
  const unsigned shift = 2 * (qubit - 1);
  std::uint64_t code = code_ & ~(3ULL << shift);
  code |= static_cast<std::uint64_t>(p) << shift;
  return PauliKey(num_qubits_, code);
}

unsigned PauliKey::weight() const { return static_cast<unsigned>(std::popcount(bits::nonidentity(code_))); }

std::string PauliKey::str() const {
  std::string out(num_qubits_, 'I');
  for (unsigned q = 0; q < num_qubits_; ++q) out[q] = "IXYZ"[(code_ >> (2 * q)) & 3u];
  return out;
}

int bits::majorana_degree(std::uint64_t code, unsigned num_qubits) {
  static constexpr int kLetterDegree[4] = {0, 1, 1, 2};
  int degree = 0;
  bool parity = false;
  for (unsigned q = num_qubits; q-- > 0;) {
    const unsigned letter = (code >> (2 * q)) & 3u;
    degree += kLetterDegree[effective_letter(letter, parity)];
    parity ^= is_xy(letter);
  }
  return degree;
}

PhasedPauli multiply(const PauliKey& p, const PauliKey& q) {
  check_same_size(p, q);
  return {PauliKey(p.num_qubits(), p.code() ^ q.code()), bits::product_phase(p.code(), q.code())};
}

bool commutes(const PauliKey& p, const PauliKey& q) {
  check_same_size(p, q);
  return !bits::anticommute(p.code(), q.code());
}

SupportSplit support_split(const PauliKey& p, unsigned first) {
  const unsigned n = p.num_qubits();
  if (first < 1 || first + 1 > n) {
    throw std::out_of_range("pair (" + std::to_string(first) + ", " + std::to_string(first + 1) +
                            ") outside a " + std::to_string(n) + "-qubit register");
  }
  const unsigned shift = 2 * (first - 1);
  const std::uint64_t code = p.code();
  const std::uint64_t low = code & ((1ULL << shift) - 1);
  const std::uint64_t high = shift + 4 >= 64 ? 0 : code >> (shift + 4);
  const auto support = static_cast<SupportCode>((code >> shift) & 0xFu);
  return {support, PauliKey(n - 2, low | (high << shift))};
}

PauliKey recombine(SupportCode support, const PauliKey& stem, unsigned first) {
  const unsigned n = stem.num_qubits() + 2;
  if (first < 1 || first + 1 > n) {
    throw std::out_of_range("pair start " + std::to_string(first) + " outside the register");
  }
  if (support > 0xF) throw std::invalid_argument("support code out of range");
  const unsigned shift = 2 * (first - 1);
  const std::uint64_t code = stem.code();
  const std::uint64_t low = code & ((1ULL << shift) - 1);
  const std::uint64_t high = code >> shift;
  return PauliKey(n, low | (static_cast<std::uint64_t>(support) << shift) | (high << (shift + 4)));
}

SpinorMonomial::SpinorMonomial(unsigned num_qubits, std::vector<unsigned> indices)
    : num_qubits_(num_qubits), indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > 2 * num_qubits) {
      throw std::invalid_argument("Majorana index " + std::to_string(indices_[i]) + " outside [1, " +
                                  std::to_string(2 * num_qubits) + "]");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("Majorana indices must be strictly increasing");
    }
  }
}

PauliKey majorana_operator(unsigned num_qubits, unsigned mu) {
  if (mu < 1 || mu > 2 * num_qubits) {
    throw std::out_of_range("Majorana index " + std::to_string(mu) + " outside [1, " +
                            std::to_string(2 * num_qubits) + "]");
  }
  const unsigned mode = (mu + 1) / 2;
  PauliKey key = PauliKey::identity(num_qubits);
  for (unsigned q = 1; q < mode; ++q) key = key.with(q, Pauli::Z);
  return key.with(mode, mu % 2 == 1 ? Pauli::X : Pauli::Y);
}

PhasedPauli spinor_to_pauli(const SpinorMonomial& s) {
  PhasedPauli acc{PauliKey::identity(s.num_qubits()), 0};
  for (unsigned mu : s.indices()) {
    const PhasedPauli step = multiply(acc.key, majorana_operator(s.num_qubits(), mu));
    acc = {step.key, (acc.phase_exp + step.phase_exp) & 3};
  }
  return acc;
}

std::pair<SpinorMonomial, int> pauli_to_spinor(const PauliKey& p) {
  // Peel from the highest qubit down; the X/Y letters above qubit q contribute
  // a Z on q through their Jordan-Wigner strings.
  std::vector<unsigned> indices;
  bool parity = false;
  for (unsigned q = p.num_qubits(); q >= 1; --q) {
    const unsigned letter = static_cast<unsigned>(p.at(q));
    switch (effective_letter(letter, parity)) {
      case 1: indices.push_back(2 * q - 1); break;
      case 2: indices.push_back(2 * q); break;
      case 3:
        indices.push_back(2 * q);
        indices.push_back(2 * q - 1);
        break;
      default: break;
    }
    parity ^= is_xy(letter);
  }
  std::reverse(indices.begin(), indices.end());
  SpinorMonomial monomial(p.num_qubits(), std::move(indices));
  const PhasedPauli image = spinor_to_pauli(monomial);
  if (image.key != p) throw std::logic_error("Jordan-Wigner peeling did not reproduce the key");
  return {std::move(monomial), image.phase_exp};
}

int majorana_degree(const PauliKey& p) { return bits::majorana_degree(p.code(), p.num_qubits()); }

}  // namespace mgzz
