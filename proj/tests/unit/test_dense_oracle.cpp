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

#include <random>

#include "helpers.hpp"
#include "mgzz/bounds.hpp"
#include "mgzz/builders.hpp"
#include "mgzz/dense_oracle.hpp"

namespace mgzz::dense {
namespace {

using cd = std::complex<double>;

TEST(Dense, PauliActionMatchesMatrix) {
  for (std::uint64_t code = 0; code < 64; ++code) {
    const Eigen::MatrixXcd m = pauli_matrix(PauliKey(3, code));
    for (std::uint64_t x = 0; x < 8; ++x) {
      const auto [y, phase] = pauli_action(code, 3, x);
      for (std::uint64_t r = 0; r < 8; ++r) {
        const cd expected = r == y ? phase : cd(0);
        EXPECT_EQ(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)), expected);
      }
    }
  }
}

TEST(Dense, FirstQubitIsMostSignificant) {
  const auto [y, phase] = pauli_action(PauliKey::from_string("XI").code(), 2, 0);
  EXPECT_EQ(y, 2u);
  EXPECT_EQ(phase, cd(1));
}

TEST(Dense, ProductStateRejectsMixed) {
  EXPECT_THROW(product_state(ProductState({BlochVector{0, 0, 0.5}})), std::invalid_argument);
  const StateVector psi = product_state(ProductState::from_bits("01"));
  EXPECT_EQ(psi(1), cd(1));
}

TEST(Dense, IdentityCircuitExpectation) {
  EXPECT_DOUBLE_EQ(statevector_expectation(Circuit(3), ProductState::zeros(3), 2), 1.0);
  EXPECT_DOUBLE_EQ(statevector_expectation(Circuit(3), ProductState::from_bits("010"), 2), -1.0);
}

TEST(Dense, HadamardBasisGivesZero) {
  const ProductState plus({BlochVector{1, 0, 0}, BlochVector{1, 0, 0}});
  EXPECT_NEAR(statevector_expectation(Circuit(2), plus, 1), 0.0, 1e-15);
}

TEST(Dense, RyRotatesZ) {
  Circuit c(1);
  c.append(NamedGate{NamedKind::Ry, {1}, {0.8}});
  EXPECT_NEAR(statevector_expectation(c, ProductState::zeros(1), 1), std::cos(0.8), 1e-14);
}

TEST(Dense, ApplyGateMatchesCircuitUnitary) {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = random_mgzz(4, 12, 3, Placement::Random, seed, ZZKind::MixedLongRange);
    const ProductState s = testing::random_pure_state(4, rng);
    StateVector psi = product_state(s);
    const StateVector start = psi;
    for (const Gate& g : c.gates()) apply_gate(psi, 4, g);
    EXPECT_LT((psi - circuit_unitary(c) * start).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Dense, DecomposeCZ) {
  Circuit c(2);
  c.append(NamedGate{NamedKind::CZ, {1, 2}, {}});
  SparseObservable x(2);
  x.set(PauliKey::from_string("XI"), 1.0);
  const SparseObservable out = pauli_conjugation_decompose(c, x);
  EXPECT_EQ(out.pauli_rank(), 1u);
  EXPECT_NEAR(out.coefficient(PauliKey::from_string("XZ")), 1.0, 1e-14);
}

TEST(Dense, DecomposePreservesNorm) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = random_mgzz(4, 15, 2, Placement::Random, seed, ZZKind::Mixed);
    const SparseObservable out = pauli_conjugation_decompose(c, SparseObservable::single_z(4, 2));
    EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
  }
}

TEST(Dense, SizeLimits) {
  EXPECT_THROW(circuit_unitary(Circuit(kMaxCircuitUnitaryQubits + 1)), std::length_error);
  EXPECT_THROW(pauli_conjugation_decompose(Circuit(kMaxUnitaryQubits + 1),
                                           SparseObservable::single_z(kMaxUnitaryQubits + 1, 1)),
               std::length_error);
  EXPECT_THROW(statevector_expectation(Circuit(kMaxStatevectorQubits + 1),
                                       ProductState::zeros(kMaxStatevectorQubits + 1), 1),
               std::length_error);
}

TEST(So2n, IdentityCircuit) {
  const OrthogonalAction a = so2n_matrix(Circuit(3));
  EXPECT_TRUE(a.matrix.isIdentity(1e-14));
  EXPECT_NEAR(a.determinant, 1.0, 1e-14);
}

TEST(So2n, ZRotationPairIsPlaneRotation) {
  const double theta = 0.37;
  Circuit c(2);
  c.append(NNUnitary{embed_ab(matrices::rz(theta), matrices::rz(theta)), 1});
  const Eigen::MatrixXd r = so2n_matrix(c).matrix;
  // Acts on (c1, c2) as a rotation by theta, fixing c3, c4.
  EXPECT_NEAR(std::abs(r(0, 0)), std::cos(theta), 1e-12);
  EXPECT_NEAR(std::abs(r(0, 1)), std::sin(theta), 1e-12);
  EXPECT_NEAR(r(0, 1), -r(1, 0), 1e-12);
  EXPECT_NEAR(r(2, 2), 1.0, 1e-12);
  EXPECT_NEAR(r(3, 3), 1.0, 1e-12);
}

TEST(So2n, OrthogonalWithUnitDeterminantAndComposes) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit a = brickwall_matchgates(3, 2, seed);
    const Circuit b = brickwall_matchgates(3, 3, seed + 50);
    Circuit ab = a;
    ab.extend(b);
    const Eigen::MatrixXd ra = so2n_matrix(a).matrix, rb = so2n_matrix(b).matrix;
    const OrthogonalAction rab = so2n_matrix(ab);
    EXPECT_TRUE((ra * ra.transpose()).isIdentity(1e-12));
    EXPECT_NEAR(rab.determinant, 1.0, 1e-12);
    // a runs first: U = U_b U_a, so the Heisenberg action composes as R_b R_a.
    EXPECT_LT((rab.matrix - rb * ra).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(So2n, RejectsNonMatchgate) {
  Circuit c(2);
  c.append(NamedGate{NamedKind::CZ, {1, 2}, {}});
  EXPECT_THROW(so2n_matrix(c), std::invalid_argument);
}

TEST(Compound, Subsets) {
  const auto s = lexicographic_subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(s[2], (std::vector<unsigned>{1, 4}));
  EXPECT_EQ(s.back(), (std::vector<unsigned>{3, 4}));
  EXPECT_TRUE(lexicographic_subsets(2, 3).empty());
}

TEST(Compound, OrderOneAndIdentity) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  Eigen::MatrixXd r(5, 5);
  for (Eigen::Index i = 0; i < 25; ++i) r(i) = g(rng);
  EXPECT_TRUE(compound_matrix(r, 1).isApprox(r, 1e-14));
  EXPECT_TRUE(compound_matrix(Eigen::MatrixXd::Identity(6, 6), 3).isIdentity(1e-14));
  EXPECT_NEAR(compound_matrix(r, 5)(0, 0), r.determinant(), 1e-10);
}

TEST(Compound, MultiplicativeAndOrthogonal) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(6, 6), b(6, 6);
  for (Eigen::Index i = 0; i < 36; ++i) {
    a(i) = g(rng);
    b(i) = g(rng);
  }
  // Cauchy-Binet.
  EXPECT_LT((compound_matrix(a * b, 3) - compound_matrix(a, 3) * compound_matrix(b, 3)).cwiseAbs().maxCoeff(),
            1e-9);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
  const Eigen::MatrixXd cq = compound_matrix(q, 2);
  EXPECT_TRUE((cq * cq.transpose()).isIdentity(1e-12));
}

TEST(Compound, Limits) {
  EXPECT_THROW(compound_matrix(Eigen::MatrixXd::Identity(3, 4), 1), std::invalid_argument);
  EXPECT_THROW(compound_matrix(Eigen::MatrixXd::Identity(3, 3), 0), std::out_of_range);
  EXPECT_THROW(compound_matrix(Eigen::MatrixXd::Identity(20, 20), 10), std::length_error);
}

TEST(Compound, PredictsDenseConjugation) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Circuit c = brickwall_matchgates(3, 4, seed);
    for (unsigned k : {2u, 4u}) {
      // All degree-k keys with unit weight.
      SparseObservable obs(3);
      for (std::uint64_t code = 0; code < 64; ++code) {
        if (bits::majorana_degree(code, 3) == static_cast<int>(k)) obs.set(PauliKey(3, code), 1.0 + code);
      }
      EXPECT_LT(testing::max_gap(testing::compound_conjugation(c, obs, k), pauli_conjugation_decompose(c, obs)),
                1e-10);
    }
  }
}

}  // namespace
}  // namespace mgzz::dense
