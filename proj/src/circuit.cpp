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

#include "mgzz/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mgzz {

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw std::invalid_argument("at most " + std::to_string(kMaxQubits) + " qubits supported");
  }
}

void Circuit::append(Gate g) {
  validate_gate(g, num_qubits_);
  gates_.push_back(std::move(g));
}

void Circuit::extend(const Circuit& other) {
  if (other.num_qubits() != num_qubits_) throw std::invalid_argument("circuit size mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t Circuit::zz_count() const {
  return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), is_zz_type));
}

}  // namespace mgzz
