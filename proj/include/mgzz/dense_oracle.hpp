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
#include <complex>
#include <cstdint>
#include <utility>

#include "mgzz/circuit.hpp"
#include "mgzz/sparse_observable.hpp"

namespace mgzz::dense {

/// Statevector size limit for the statevector oracle.
inline constexpr unsigned kMaxStatevectorQubits = 14;
/// Limit for circuit_unitary.
inline constexpr unsigned kMaxCircuitUnitaryQubits = 10;
/// Limit for the 4^n-term Pauli decomposition and the Majorana action.
inline constexpr unsigned kMaxUnitaryQubits = 6;

/// Amplitudes with qubit 1 as the most significant bit of the index.
using StateVector = Eigen::VectorXcd;

/// P|x> = phase |y>.
std::pair<std::uint64_t, std::complex<double>> pauli_action(std::uint64_t code, unsigned num_qubits,
                                                            std::uint64_t x);

Eigen::MatrixXcd pauli_matrix(const PauliKey& key);

/// Pure product state; throws for Bloch vectors shorter than 1.
StateVector product_state(const ProductState& state);

void apply_gate(StateVector& psi, unsigned num_qubits, const Gate& gate);

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// <psi| U^dag Z_j U |psi>.
double statevector_expectation(const Circuit& circuit, const ProductState& state, unsigned qubit);

/// Pauli decomposition of U^dag M U from the dense unitary, dropping |v| < 1e-12.
SparseObservable pauli_conjugation_decompose(const Circuit& circuit, const SparseObservable& obs);

struct OrthogonalAction {
  /// Row mu holds the coefficients of U^dag c_mu U over c_1 .. c_2n.
  Eigen::MatrixXd matrix;
  double determinant = 0.0;
};

/// Action of a matchgate circuit on the Majorana operators.
OrthogonalAction so2n_matrix(const Circuit& circuit);

/// Order-k compound matrix; subsets in lexicographic order.
Eigen::MatrixXd compound_matrix(const Eigen::MatrixXd& r, unsigned k);

/// Sorted k-subsets of {1, .., size}, the row order of compound_matrix.
std::vector<std::vector<unsigned>> lexicographic_subsets(unsigned size, unsigned k);

}  // namespace mgzz::dense
