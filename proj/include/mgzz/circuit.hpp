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
#include <vector>

#include "mgzz/gates.hpp"

namespace mgzz {

/// Ordered gate list on n qubits; gates[0] acts first on the input state.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(unsigned num_qubits);

  /// Validates the gate against the register and appends it.
  void append(Gate g);
  void extend(const Circuit& other);

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  /// Number of ZZ-type gates (parity-preserving non-matchgates).
  std::size_t zz_count() const;

 private:
  unsigned num_qubits_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace mgzz
