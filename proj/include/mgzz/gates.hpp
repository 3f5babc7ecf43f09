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
#include <string>
#include <variant>
#include <vector>

#include "mgzz/pauli.hpp"

namespace mgzz {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Two-qubit matrices act on |q_a q_b> ordered |00>,|01>,|10>,|11>, with the
/// first target as the more significant bit.

enum class GateClass { Matchgate, ParityPreservingNonMatchgate, Other };

std::string to_string(GateClass c);

/// Arbitrary two-qubit unitary on the adjacent pair (first, first+1).
struct NNUnitary {
  Matrix4c matrix = Matrix4c::Identity();
  unsigned first = 1;
};

/// exp(i * angle * generator) for a non-identity Hermitian Pauli string.
struct PauliExp {
  PauliKey generator;
  double angle = 0.0;
};

enum class NamedKind { Swap, CZ, CPhase, Givens, Rz, Ry, MatchgateKak };

std::string to_string(NamedKind kind);

/// A named gate with its targets and real parameters.
///
///   Rz(theta) = exp(-i theta Z / 2), Ry(theta) = exp(-i theta Y / 2)
///   CPhase(theta) = diag(1, 1, 1, e^{i theta}), so CPhase(pi) = CZ
///   Givens(theta) rotates |01>,|10> by [[c, -s], [s, c]]
///   MatchgateKak takes (phi1, phi2, phi3, phi4, a, b)
struct NamedGate {
  NamedKind kind = NamedKind::Swap;
  std::vector<unsigned> targets;
  std::vector<double> params;
};

using Gate = std::variant<NNUnitary, PauliExp, NamedGate>;

/// Real parameters of
/// (e^{i phi1 Z} (x) e^{i phi2 Z}) e^{i(a XX + b YY)} (e^{i phi3 Z} (x) e^{i phi4 Z}).
struct KakParams {
  double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0, phi4 = 0.0;
  double a = 0.0, b = 0.0;
};

struct EulerAngles {
  double theta1 = 0.0;  // outer Rz
  double theta2 = 0.0;  // Ry
  double theta3 = 0.0;  // inner Rz
};

/// CPhase(theta) = e^{i global_phase} * e^{i zz_angle Z(x)Z} * (Rz(rz_angle) (x) Rz(rz_angle)).
///
/// The Rz pair equals the matchgate G(Rz(theta), I).
struct CPhaseDecomposition {
  double zz_angle = 0.0;
  double rz_angle = 0.0;
  double global_phase = 0.0;

  Matrix4c zz_factor() const;
  Matrix4c remainder() const;
};

namespace matrices {

Matrix2c pauli(Pauli p);
Matrix2c rz(double theta);
Matrix2c ry(double theta);
Matrix4c swap();
Matrix4c cz();
Matrix4c cphase(double theta);
Matrix4c givens(double theta);
/// sigma_first (x) sigma_second for a two-qubit support code.
Matrix4c two_qubit_pauli(SupportCode support);

}  // namespace matrices

bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

/// 4x4 embedding with A on span{|00>,|11>} (corners) and B on span{|01>,|10>}.
/// No validation; see matchgate_from_ab.
Matrix4c embed_ab(const Matrix2c& a, const Matrix2c& b);

/// G(A, B) for unitary A, B with det(A) = det(B) = +-1 (tolerance 1e-8).
/// Throws std::invalid_argument("not a matchgate ...") otherwise.
Matrix4c matchgate_from_ab(const Matrix2c& a, const Matrix2c& b);

/// Throws std::invalid_argument for a non-unitary input. Tolerance 1e-8.
GateClass classify(const Matrix4c& u);

Matrix4c matchgate_from_kak(const KakParams& p);

/// U = e^{i alpha} Rz(theta1) Ry(theta2) Rz(theta3); theta3 = 0 when
/// theta2 is 0 or pi.
EulerAngles single_qubit_euler(const Matrix2c& u);

CPhaseDecomposition cphase_decompose(double theta);

// Per-gate queries.

/// Targets (1-based) in the order the gate matrix uses them.
std::vector<unsigned> gate_qubits(const Gate& g);
std::string gate_kind(const Gate& g);
GateClass gate_class(const Gate& g);
/// Parity-preserving non-matchgates and even, non-Gaussian Pauli exponentials.
bool is_zz_type(const Gate& g);
/// Dense matrix on gate_qubits(g): 2x2, 4x4, or 2^w x 2^w for a Pauli
/// exponential of weight w (letters in increasing qubit order).
Eigen::MatrixXcd gate_matrix(const Gate& g);
/// Throws if targets are out of range, NN targets are not adjacent, or
/// parameters are malformed.
void validate_gate(const Gate& g, unsigned num_qubits);

}  // namespace mgzz
