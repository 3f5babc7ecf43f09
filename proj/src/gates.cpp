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

#include "mgzz/gates.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace mgzz {
namespace {

using cd = std::complex<double>;
constexpr double kClassifyTol = 1e-8;

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Matrix2c exp_i_z(double phi) {
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = std::polar(1.0, phi);
  m(1, 1) = std::polar(1.0, -phi);
  return m;
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

std::size_t expected_params(NamedKind kind) {
  switch (kind) {
    case NamedKind::Swap:
    case NamedKind::CZ: return 0;
    case NamedKind::CPhase:
    case NamedKind::Givens:
    case NamedKind::Rz:
    case NamedKind::Ry: return 1;
    case NamedKind::MatchgateKak: return 6;
  }
  return 0;
}

std::size_t expected_targets(NamedKind kind) {
  return kind == NamedKind::Rz || kind == NamedKind::Ry ? 1 : 2;
}

KakParams kak_from(const std::vector<double>& p) { return {p[0], p[1], p[2], p[3], p[4], p[5]}; }

}  // namespace

std::string to_string(GateClass c) {
  switch (c) {
    case GateClass::Matchgate: return "matchgate";
    case GateClass::ParityPreservingNonMatchgate: return "parity_preserving_non_matchgate";
    case GateClass::Other: return "other";
  }
  return "?";
}

std::string to_string(NamedKind kind) {
  switch (kind) {
    case NamedKind::Swap: return "swap";
    case NamedKind::CZ: return "cz";
    case NamedKind::CPhase: return "cphase";
    case NamedKind::Givens: return "givens";
    case NamedKind::Rz: return "rz";
    case NamedKind::Ry: return "ry";
    case NamedKind::MatchgateKak: return "matchgate_kak";
  }
  return "?";
}

namespace matrices {

Matrix2c pauli(Pauli p) {
  Matrix2c m = Matrix2c::Zero();
  switch (p) {
    case Pauli::I: m(0, 0) = 1; m(1, 1) = 1; break;
    case Pauli::X: m(0, 1) = 1; m(1, 0) = 1; break;
    case Pauli::Y: m(0, 1) = cd(0, -1); m(1, 0) = cd(0, 1); break;
    case Pauli::Z: m(0, 0) = 1; m(1, 1) = -1; break;
  }
  return m;
}

Matrix2c rz(double theta) { return exp_i_z(-theta / 2); }

Matrix2c ry(double theta) {
  Matrix2c m;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

Matrix4c swap() {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

Matrix4c cz() { return cphase(M_PI); }

Matrix4c cphase(double theta) {
  Matrix4c m = Matrix4c::Identity();
  m(3, 3) = std::polar(1.0, theta);
  return m;
}

Matrix4c givens(double theta) {
  Matrix2c b;
  const double c = std::cos(theta), s = std::sin(theta);
  b << c, -s, s, c;
  return embed_ab(Matrix2c::Identity(), b);
}

Matrix4c two_qubit_pauli(SupportCode support) {
  return kron(pauli(static_cast<Pauli>(support & 3u)), pauli(static_cast<Pauli>((support >> 2) & 3u)));
}

}  // namespace matrices

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd defect = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff() <= tol;
}

Matrix4c embed_ab(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c g = Matrix4c::Zero();
  g(0, 0) = a(0, 0);
  g(0, 3) = a(0, 1);
  g(3, 0) = a(1, 0);
  g(3, 3) = a(1, 1);
  g(1, 1) = b(0, 0);
  g(1, 2) = b(0, 1);
  g(2, 1) = b(1, 0);
  g(2, 2) = b(1, 1);
  return g;
}

Matrix4c matchgate_from_ab(const Matrix2c& a, const Matrix2c& b) {
  if (!is_unitary(a, kClassifyTol) || !is_unitary(b, kClassifyTol)) {
    throw std::invalid_argument("not a matchgate: A and B must be unitary");
  }
  const cd det_a = a.determinant(), det_b = b.determinant();
  const bool real_unit = std::abs(det_a - 1.0) <= kClassifyTol || std::abs(det_a + 1.0) <= kClassifyTol;
  if (std::abs(det_a - det_b) > kClassifyTol || !real_unit) {
    throw std::invalid_argument("not a matchgate: requires det(A) = det(B) = +-1");
  }
  return embed_ab(a, b);
}

GateClass classify(const Matrix4c& u) {
  if (!is_unitary(u, kClassifyTol)) throw std::invalid_argument("classify: matrix is not unitary");
  static constexpr int kEven[2] = {0, 3};
  static constexpr int kOdd[2] = {1, 2};
  for (int e : kEven) {
    for (int o : kOdd) {
      if (std::abs(u(e, o)) > kClassifyTol || std::abs(u(o, e)) > kClassifyTol) return GateClass::Other;
    }
  }
  Matrix2c a, b;
  a << u(0, 0), u(0, 3), u(3, 0), u(3, 3);
  b << u(1, 1), u(1, 2), u(2, 1), u(2, 2);
  return std::abs(a.determinant() - b.determinant()) <= kClassifyTol
             ? GateClass::Matchgate
             : GateClass::ParityPreservingNonMatchgate;
}

Matrix4c matchgate_from_kak(const KakParams& p) {
  const Matrix2c x = matrices::pauli(Pauli::X), y = matrices::pauli(Pauli::Y);
  const Matrix4c xx = kron(x, x), yy = kron(y, y);
  const Matrix4c id = Matrix4c::Identity();
  // XX and YY commute, so the exponential factorises.
  const Matrix4c core = (std::cos(p.a) * id + cd(0, std::sin(p.a)) * xx) *
                        (std::cos(p.b) * id + cd(0, std::sin(p.b)) * yy);
  return kron(exp_i_z(p.phi1), exp_i_z(p.phi2)) * core * kron(exp_i_z(p.phi3), exp_i_z(p.phi4));
}

EulerAngles single_qubit_euler(const Matrix2c& u) {
  if (!is_unitary(u, 1e-8)) throw std::invalid_argument("single_qubit_euler: matrix is not unitary");
  const Matrix2c v = u / std::sqrt(u.determinant());
  const cd a = v(0, 0), b = v(1, 0);
  EulerAngles out;
  out.theta2 = 2.0 * std::atan2(std::abs(b), std::abs(a));
  if (std::abs(b) < 1e-12) {
    out.theta1 = -2.0 * std::arg(a);
  } else if (std::abs(a) < 1e-12) {
    out.theta1 = 2.0 * std::arg(b);
  } else {
    out.theta1 = std::arg(b) - std::arg(a);
    out.theta3 = -std::arg(a) - std::arg(b);
  }
  return out;
}

Matrix4c CPhaseDecomposition::zz_factor() const {
  Matrix4c m = Matrix4c::Zero();
  m(0, 0) = m(3, 3) = std::polar(1.0, zz_angle);
  m(1, 1) = m(2, 2) = std::polar(1.0, -zz_angle);
  return m;
}

Matrix4c CPhaseDecomposition::remainder() const { return kron(matrices::rz(rz_angle), matrices::rz(rz_angle)); }

CPhaseDecomposition cphase_decompose(double theta) {
  // |11><11| = (I - Z_a - Z_b + Z_a Z_b) / 4.
  return {theta / 4, theta / 2, theta / 4};
}

std::vector<unsigned> gate_qubits(const Gate& g) {
  return std::visit(Overloaded{
                        [](const NNUnitary& u) { return std::vector<unsigned>{u.first, u.first + 1}; },
                        [](const PauliExp& e) {
                          std::vector<unsigned> qs;
                          for (unsigned q = 1; q <= e.generator.num_qubits(); ++q)
                            if (e.generator.at(q) != Pauli::I) qs.push_back(q);
                          return qs;
                        },
                        [](const NamedGate& n) { return n.targets; },
                    },
                    g);
}

std::string gate_kind(const Gate& g) {
  return std::visit(Overloaded{
                        [](const NNUnitary&) { return std::string("nn_unitary"); },
                        [](const PauliExp&) { return std::string("pauli_exp"); },
                        [](const NamedGate& n) { return to_string(n.kind); },
                    },
                    g);
}

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  return std::visit(
      Overloaded{
          [](const NNUnitary& u) -> Eigen::MatrixXcd { return u.matrix; },
          [](const PauliExp& e) -> Eigen::MatrixXcd {
            Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Identity(1, 1);
            for (unsigned q = 1; q <= e.generator.num_qubits(); ++q) {
              const Pauli p = e.generator.at(q);
              if (p == Pauli::I) continue;
              const Matrix2c s = matrices::pauli(p);
              Eigen::MatrixXcd next(sigma.rows() * 2, sigma.cols() * 2);
              for (Eigen::Index i = 0; i < sigma.rows(); ++i)
                for (Eigen::Index j = 0; j < sigma.cols(); ++j)
                  next.block(2 * i, 2 * j, 2, 2) = sigma(i, j) * s;
              sigma = std::move(next);
            }
            const auto id = Eigen::MatrixXcd::Identity(sigma.rows(), sigma.cols());
            return std::cos(e.angle) * id + cd(0, std::sin(e.angle)) * sigma;
          },
          [](const NamedGate& n) -> Eigen::MatrixXcd {
            switch (n.kind) {
              case NamedKind::Swap: return matrices::swap();
              case NamedKind::CZ: return matrices::cz();
              case NamedKind::CPhase: return matrices::cphase(n.params.at(0));
              case NamedKind::Givens: return matrices::givens(n.params.at(0));
              case NamedKind::Rz: return matrices::rz(n.params.at(0));
              case NamedKind::Ry: return matrices::ry(n.params.at(0));
              case NamedKind::MatchgateKak: return matchgate_from_kak(kak_from(n.params));
            }
            throw std::logic_error("unknown named gate");
          },
      },
      g);
}

GateClass gate_class(const Gate& g) {
  return std::visit(Overloaded{
                        [](const NNUnitary& u) { return classify(u.matrix); },
                        [](const PauliExp& e) {
                          const int d = majorana_degree(e.generator);
                          if (d == 2) return GateClass::Matchgate;
                          return d % 2 == 0 ? GateClass::ParityPreservingNonMatchgate : GateClass::Other;
                        },
                        [&g](const NamedGate& n) {
                          switch (n.kind) {
                            case NamedKind::Rz:
                            case NamedKind::Givens:
                            case NamedKind::MatchgateKak: return GateClass::Matchgate;
                            case NamedKind::Ry: return GateClass::Other;
                            default: return classify(gate_matrix(g));
                          }
                        },
                    },
                    g);
}

bool is_zz_type(const Gate& g) { return gate_class(g) == GateClass::ParityPreservingNonMatchgate; }

void validate_gate(const Gate& g, unsigned num_qubits) {
  std::visit(
      Overloaded{
          [&](const NNUnitary& u) {
            if (u.first < 1 || u.first + 1 > num_qubits) {
              throw std::out_of_range("nn_unitary pair (" + std::to_string(u.first) + ", " +
                                      std::to_string(u.first + 1) + ") outside the register");
            }
            if (!u.matrix.allFinite() || !is_unitary(u.matrix, 1e-10)) {
              throw std::invalid_argument("nn_unitary matrix is not unitary within 1e-10");
            }
          },
          [&](const PauliExp& e) {
            if (e.generator.num_qubits() != num_qubits) {
              throw std::invalid_argument("pauli_exp generator has the wrong qubit count");
            }
            if (e.generator.is_identity()) throw std::invalid_argument("pauli_exp generator is the identity");
            if (!std::isfinite(e.angle)) throw std::invalid_argument("pauli_exp angle is not finite");
          },
          [&](const NamedGate& n) {
            const std::string name = to_string(n.kind);
            if (n.targets.size() != expected_targets(n.kind)) {
              throw std::invalid_argument(name + " expects " + std::to_string(expected_targets(n.kind)) +
                                          " qubits");
            }
            if (n.params.size() != expected_params(n.kind)) {
              throw std::invalid_argument(name + " expects " + std::to_string(expected_params(n.kind)) +
                                          " parameters");
            }
            for (double p : n.params)
              if (!std::isfinite(p)) throw std::invalid_argument(name + " has a non-finite parameter");
            for (unsigned q : n.targets) {
              if (q < 1 || q > num_qubits) {
                throw std::out_of_range(name + " target " + std::to_string(q) + " outside [1, " +
                                        std::to_string(num_qubits) + "]");
              }
            }
            if (n.targets.size() == 2) {
              if (n.targets[0] == n.targets[1]) throw std::invalid_argument(name + " targets must differ");
              const bool nn_only = n.kind == NamedKind::Givens || n.kind == NamedKind::MatchgateKak;
              if (nn_only && n.targets[1] != n.targets[0] + 1) {
                throw std::invalid_argument(name + " must act on an adjacent pair (j, j+1)");
              }
            }
          },
      },
      g);
}

}  // namespace mgzz
