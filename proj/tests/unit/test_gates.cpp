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

#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "mgzz/gates.hpp"

namespace mgzz {
namespace {

using cd = std::complex<double>;

Matrix2c random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix2c m;
  m << cd(g(rng), g(rng)), cd(g(rng), g(rng)), cd(g(rng), g(rng)), cd(g(rng), g(rng));
  return Eigen::HouseholderQR<Matrix2c>(m).householderQ();
}

Matrix2c special(const Matrix2c& u) { return u / std::sqrt(u.determinant()); }

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  return out;
}

// Distance between two unitaries modulo a global phase.
double phase_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const cd overlap = (b.adjoint() * a).trace();
  const cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd(1.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

TEST(MatchgateFromAB, IdentityBlocks) {
  EXPECT_TRUE(matchgate_from_ab(Matrix2c::Identity(), Matrix2c::Identity()).isApprox(Matrix4c::Identity()));
}

TEST(MatchgateFromAB, EqualRzBlocksActOnFirstQubit) {
  for (double theta : {0.3, 1.1, -2.5}) {
    const Matrix4c g = matchgate_from_ab(matrices::rz(theta), matrices::rz(theta));
    EXPECT_LT(phase_distance(g, kron(matrices::rz(theta), Matrix2c::Identity())), 1e-12);
  }
}

TEST(MatchgateFromAB, RejectsDeterminantMismatch) {
  const Matrix2c x = matrices::pauli(Pauli::X);
  try {
    matchgate_from_ab(Matrix2c::Identity(), x);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not a matchgate"), std::string::npos);
  }
  EXPECT_TRUE(embed_ab(Matrix2c::Identity(), x).isApprox(matrices::swap()));
}

TEST(MatchgateFromAB, RejectsNonUnitary) {
  EXPECT_THROW(matchgate_from_ab(2.0 * Matrix2c::Identity(), Matrix2c::Identity()), std::invalid_argument);
}

TEST(MatchgateFromAB, AlwaysClassifiedAsMatchgate) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix2c a = special(random_unitary2(rng)), b = special(random_unitary2(rng));
    if (trial % 2) {
      // det = -1 on both blocks.
      a.col(0) *= cd(0, 1);
      a.col(1) *= cd(0, 1);
      b.col(0) *= cd(0, 1);
      b.col(1) *= cd(0, 1);
    }
    EXPECT_EQ(classify(matchgate_from_ab(a, b)), GateClass::Matchgate);
  }
}

TEST(Classify, NamedNonMatchgates) {
  EXPECT_EQ(classify(matrices::swap()), GateClass::ParityPreservingNonMatchgate);
  EXPECT_EQ(classify(matrices::cz()), GateClass::ParityPreservingNonMatchgate);
  EXPECT_EQ(classify(matrices::cphase(0.4)), GateClass::ParityPreservingNonMatchgate);
  EXPECT_EQ(classify(matrices::cphase(0.0)), GateClass::Matchgate);
}

TEST(Classify, SingleQubitRyIsOther) {
  for (double theta : {0.3, 1.0, 2.0}) {
    EXPECT_EQ(classify(kron(matrices::ry(theta), Matrix2c::Identity())), GateClass::Other);
  }
  EXPECT_EQ(classify(kron(matrices::ry(M_PI), Matrix2c::Identity())), GateClass::Other);
}

TEST(Classify, RejectsNonUnitary) { EXPECT_THROW(classify(2.0 * Matrix4c::Identity()), std::invalid_argument); }

TEST(Classify, OffBlockEntriesDecideParityPreservation) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4c u = kron(random_unitary2(rng), random_unitary2(rng));
    double off = 0.0;
    for (int e : {0, 3})
      for (int o : {1, 2}) off = std::max({off, std::abs(u(e, o)), std::abs(u(o, e))});
    EXPECT_EQ(classify(u) == GateClass::Other, off > 1e-8);
  }
}

TEST(Kak, ZeroParametersGiveIdentity) {
  EXPECT_TRUE(matchgate_from_kak({}).isApprox(Matrix4c::Identity()));
}

TEST(Kak, ZRotationsOnlyAreDiagonal) {
  const Matrix4c m = matchgate_from_kak({0.3, -0.2, 1.4, 0.9, 0.0, 0.0});
  EXPECT_LT((m - Matrix4c(m.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Kak, RandomParametersAreMatchgates) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int trial = 0; trial < 1000; ++trial) {
    const KakParams p{angle(rng), angle(rng), angle(rng), angle(rng), angle(rng), angle(rng)};
    EXPECT_EQ(classify(matchgate_from_kak(p)), GateClass::Matchgate);
  }
}

TEST(Kak, MatchesMatrixExponential) {
  const KakParams p{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  const Matrix2c z = matrices::pauli(Pauli::Z), x = matrices::pauli(Pauli::X), y = matrices::pauli(Pauli::Y);
  auto expz = [&](double phi) { return Matrix2c(std::cos(phi) * Matrix2c::Identity() + cd(0, std::sin(phi)) * z); };
  const Matrix4c h = p.a * kron(x, x) + p.b * kron(y, y);
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(h);
  const Matrix4c core = es.eigenvectors() *
                        es.eigenvalues().unaryExpr([](double v) { return std::polar(1.0, v); }).asDiagonal() *
                        es.eigenvectors().adjoint();
  const Matrix4c expected = kron(expz(p.phi1), expz(p.phi2)) * core * kron(expz(p.phi3), expz(p.phi4));
  EXPECT_LT((matchgate_from_kak(p) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CPhase, DecompositionTrivialAngle) {
  const CPhaseDecomposition d = cphase_decompose(0.0);
  EXPECT_TRUE(d.zz_factor().isApprox(Matrix4c::Identity()));
  EXPECT_TRUE(d.remainder().isApprox(Matrix4c::Identity()));
}

TEST(CPhase, PiGivesCZ) {
  const CPhaseDecomposition d = cphase_decompose(M_PI);
  EXPECT_LT(phase_distance(d.zz_factor() * d.remainder(), matrices::cz()), 1e-12);
}

TEST(CPhase, ReassemblesOnGrid) {
  for (int k = -20; k <= 20; ++k) {
    const double theta = 0.17 * k;
    const CPhaseDecomposition d = cphase_decompose(theta);
    const Matrix4c rebuilt = std::polar(1.0, d.global_phase) * d.zz_factor() * d.remainder();
    EXPECT_LT((rebuilt - matrices::cphase(theta)).cwiseAbs().maxCoeff(), 1e-12) << theta;
    EXPECT_EQ(classify(d.remainder()), GateClass::Matchgate);
  }
}

TEST(Euler, NamedRotations) {
  const EulerAngles z = single_qubit_euler(matrices::rz(0.7));
  EXPECT_NEAR(z.theta1 + z.theta3, 0.7, 1e-12);
  EXPECT_NEAR(z.theta2, 0.0, 1e-12);
  const EulerAngles y = single_qubit_euler(matrices::ry(1.2));
  EXPECT_NEAR(y.theta1, 0.0, 1e-12);
  EXPECT_NEAR(y.theta2, 1.2, 1e-12);
  EXPECT_NEAR(y.theta3, 0.0, 1e-12);
}

TEST(Euler, ReassemblesRandomAndHadamard) {
  std::mt19937_64 rng(5);
  std::vector<Matrix2c> cases;
  Matrix2c h;
  h << 1, 1, 1, -1;
  cases.push_back(h / std::sqrt(2.0));
  cases.push_back(matrices::pauli(Pauli::X));
  cases.push_back(matrices::pauli(Pauli::Y));
  for (int i = 0; i < 200; ++i) cases.push_back(random_unitary2(rng));
  for (const Matrix2c& u : cases) {
    const EulerAngles e = single_qubit_euler(u);
    const Matrix2c rebuilt = matrices::rz(e.theta1) * matrices::ry(e.theta2) * matrices::rz(e.theta3);
    EXPECT_LT(phase_distance(rebuilt, u), 1e-10);
  }
}

TEST(NamedGates, MatricesMatchDefinitions) {
  const double t = 0.37;
  EXPECT_LT((matrices::rz(t) - Matrix2c(Eigen::Vector2cd(std::polar(1.0, -t / 2), std::polar(1.0, t / 2)).asDiagonal()))
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  const Matrix2c ry_expected =
      std::cos(t / 2) * Matrix2c::Identity() - cd(0, std::sin(t / 2)) * matrices::pauli(Pauli::Y);
  EXPECT_LT((matrices::ry(t) - ry_expected).cwiseAbs().maxCoeff(), 1e-15);
  const Matrix4c g = matrices::givens(t);
  EXPECT_EQ(g(0, 0), cd(1.0));
  EXPECT_EQ(g(3, 3), cd(1.0));
  EXPECT_NEAR(g(1, 2).real(), -std::sin(t), 1e-15);
  EXPECT_EQ(classify(g), GateClass::Matchgate);
  EXPECT_EQ(matrices::cphase(t)(3, 3), std::polar(1.0, t));
}

TEST(GateModel, PauliExpClasses) {
  const auto key = [](const char* s) { return PauliKey::from_string(s); };
  EXPECT_EQ(gate_class(PauliExp{key("XXI"), 0.3}), GateClass::Matchgate);
  EXPECT_EQ(gate_class(PauliExp{key("ZZI"), 0.3}), GateClass::ParityPreservingNonMatchgate);
  EXPECT_EQ(gate_class(PauliExp{key("ZIZ"), 0.3}), GateClass::ParityPreservingNonMatchgate);
  EXPECT_EQ(gate_class(PauliExp{key("YII"), 0.3}), GateClass::Other);
  EXPECT_TRUE(is_zz_type(NamedGate{NamedKind::CZ, {1, 3}, {}}));
  EXPECT_FALSE(is_zz_type(NamedGate{NamedKind::Givens, {1, 2}, {0.2}}));
}

TEST(GateModel, PauliExpMatrix) {
  const Eigen::MatrixXcd m = gate_matrix(PauliExp{PauliKey::from_string("XZ"), 0.4});
  const Matrix4c expected =
      std::cos(0.4) * Matrix4c::Identity() + cd(0, std::sin(0.4)) * kron(matrices::pauli(Pauli::X), matrices::pauli(Pauli::Z));
  EXPECT_LT((m - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GateModel, Validation) {
  EXPECT_NO_THROW(validate_gate(NamedGate{NamedKind::CZ, {3, 1}, {}}, 3));
  EXPECT_THROW(validate_gate(NamedGate{NamedKind::Givens, {1, 3}, {0.1}}, 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(NamedGate{NamedKind::CZ, {1, 4}, {}}, 3), std::out_of_range);
  EXPECT_THROW(validate_gate(NamedGate{NamedKind::CZ, {2, 2}, {}}, 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(NamedGate{NamedKind::CPhase, {1, 2}, {}}, 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(PauliExp{PauliKey::identity(3), 0.1}, 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(NNUnitary{2.0 * Matrix4c::Identity(), 1}, 3), std::invalid_argument);
  EXPECT_THROW(validate_gate(NNUnitary{Matrix4c::Identity(), 3}, 3), std::out_of_range);
}

}  // namespace
}  // namespace mgzz
