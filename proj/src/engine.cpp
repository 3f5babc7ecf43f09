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

#include "mgzz/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "mgzz/bounds.hpp"

namespace mgzz {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Clock = std::chrono::steady_clock;

constexpr std::size_t kParallelThreshold = 2048;
constexpr std::size_t kMaxStateTerms = std::size_t{1} << 26;

const std::array<int, 16> kSupportDegree = [] {
  std::array<int, 16> d{};
  for (unsigned s = 0; s < 16; ++s) d[s] = support_degree(static_cast<SupportCode>(s));
  return d;
}();

constexpr std::array<SupportCode, 16> kAllSupports{0, 1, 2,  3,  4,  5,  6,  7,
                                                   8, 9, 10, 11, 12, 13, 14, 15};

bool is_exact_identity(const Eigen::MatrixXd& m) {
  return m.rows() == m.cols() && m == Eigen::MatrixXd::Identity(m.rows(), m.cols());
}

void check_pair_index(unsigned first, unsigned num_qubits) {
  if (first < 1 || first + 1 > num_qubits) {
    throw std::out_of_range("pair (" + std::to_string(first) + ", " + std::to_string(first + 1) +
                            ") outside a " + std::to_string(num_qubits) + "-qubit register");
  }
}

// Runs fn(begin, end) over [0, count) split into contiguous chunks.
void for_chunks(std::size_t count, unsigned workers, const std::function<void(std::size_t, std::size_t)>& fn) {
  if (workers <= 1 || count < kParallelThreshold) {
    fn(0, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

std::uint64_t pauli_code(unsigned num_qubits, std::initializer_list<std::pair<unsigned, Pauli>> letters) {
  PauliKey key = PauliKey::identity(num_qubits);
  for (auto [q, p] : letters) key = key.with(q, p);
  return key.code();
}

}  // namespace

void RankProfile::record(StepRecord step) {
  chi_total += step.chi;
  max_chi = std::max(max_chi, step.chi);
  pruned_mass_total += step.pruned_mass;
  steps.push_back(std::move(step));
}

FindResult find(const PauliKey& p, unsigned first) {
  check_pair_index(first, p.num_qubits());
  const SupportSplit split = support_split(p, first);
  FindResult out;
  out.degree = support_degree(split.support);
  for (SupportCode s : graded_basis(out.degree)) out.keys.push_back(recombine(s, split.stem, first));
  return out;
}

void update(SparseObservable& obs, std::span<const PauliKey> keys, const Eigen::MatrixXd& block) {
  if (block.rows() != block.cols() || static_cast<std::size_t>(block.rows()) != keys.size()) {
    throw std::invalid_argument("update: " + std::to_string(keys.size()) + " keys for a " +
                                std::to_string(block.rows()) + "x" + std::to_string(block.cols()) + " block");
  }
  Eigen::VectorXd v(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) v[i] = obs.coefficient(keys[i]);
  const Eigen::VectorXd w = block * v;
  for (std::size_t i = 0; i < keys.size(); ++i) obs.set(keys[i], w[i]);
}

void apply_pauli_exponential(SparseObservable& obs, const PauliKey& generator, double phi) {
  if (generator.num_qubits() != obs.num_qubits()) throw std::invalid_argument("generator size mismatch");
  if (generator.is_identity()) throw std::invalid_argument("identity generator");
  Engine engine;
  Circuit c(obs.num_qubits());
  c.append(PauliExp{generator, phi});
  engine.propagate_backward(c, 0, 1, obs);
}

Engine::Engine(EngineConfig config)
    : config_(std::move(config)), cache_(std::make_shared<RotationCache>(config_.table_hook)) {
  if (!(config_.epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
}

unsigned Engine::worker_count() const {
  if (!config_.parallel) return 1;
  if (config_.threads > 0) return config_.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Engine::Op> Engine::lower(const Gate& gate, unsigned num_qubits) const {
  return std::visit(
      Overloaded{
          [&](const NNUnitary& u) -> std::vector<Op> {
            return {TableOp{u.first, u.first + 1, cache_->get(u.matrix)}};
          },
          [&](const PauliExp& e) -> std::vector<Op> { return {PauliOp{e.generator.code(), e.angle}}; },
          [&](const NamedGate& g) -> std::vector<Op> {
            if (g.kind == NamedKind::Rz) {
              return {PauliOp{pauli_code(num_qubits, {{g.targets[0], Pauli::Z}}), -g.params[0] / 2}};
            }
            if (g.kind == NamedKind::Ry) {
              return {PauliOp{pauli_code(num_qubits, {{g.targets[0], Pauli::Y}}), -g.params[0] / 2}};
            }
            const unsigned a = g.targets[0], b = g.targets[1];
            if (a + 1 == b || b + 1 == a) {
              Matrix4c m = gate_matrix(gate);
              if (a > b) m = matrices::swap() * m * matrices::swap();
              return {TableOp{std::min(a, b), std::max(a, b), cache_->get(m)}};
            }
            if (g.kind == NamedKind::CZ || g.kind == NamedKind::CPhase) {
              const CPhaseDecomposition d = cphase_decompose(g.kind == NamedKind::CZ ? M_PI : g.params[0]);
              return {PauliOp{pauli_code(num_qubits, {{a, Pauli::Z}, {b, Pauli::Z}}), d.zz_angle},
                      PauliOp{pauli_code(num_qubits, {{a, Pauli::Z}}), -d.rz_angle / 2},
                      PauliOp{pauli_code(num_qubits, {{b, Pauli::Z}}), -d.rz_angle / 2}};
            }
            if (g.kind == NamedKind::Swap) {
              // SWAP = e^{i pi/4} e^{-i pi/4 (XX + YY + ZZ)}; the three terms commute.
              std::vector<Op> ops;
              for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
                ops.push_back(PauliOp{pauli_code(num_qubits, {{a, p}, {b, p}}), -M_PI / 4});
              return ops;
            }
            throw std::invalid_argument(to_string(g.kind) + " requires adjacent targets");
          },
      },
      gate);
}

std::optional<int> Engine::degree_shift(const Gate& gate, unsigned num_qubits) const {
  auto pauli_shift = [](std::uint64_t code, unsigned n) {
    const int d = bits::majorana_degree(code, n);
    return d % 2 == 0 ? std::max(d - 2, 0) : d;
  };
  if (const auto* e = std::get_if<PauliExp>(&gate)) return pauli_shift(e->generator.code(), num_qubits);
  if (const auto* u = std::get_if<NNUnitary>(&gate)) {
    switch (classify(u->matrix)) {
      case GateClass::Matchgate: return 0;
      case GateClass::ParityPreservingNonMatchgate: return 2;
      case GateClass::Other: return std::nullopt;
    }
  }
  const auto& g = std::get<NamedGate>(gate);
  if (g.targets.size() == 2 && (g.targets[0] + 1 == g.targets[1] || g.targets[1] + 1 == g.targets[0])) {
    switch (gate_class(gate)) {
      case GateClass::Matchgate: return 0;
      case GateClass::ParityPreservingNonMatchgate: return 2;
      case GateClass::Other: return std::nullopt;
    }
  }
  int total = 0;
  for (const Op& op : lower(gate, num_qubits)) total += pauli_shift(std::get<PauliOp>(op).generator, num_qubits);
  return total;
}

void Engine::apply_op(const Op& op, SparseObservable& obs, bool forward) const {
  std::visit(Overloaded{
                 [&](const TableOp& t) { apply_table(t, obs, forward); },
                 [&](const PauliOp& p) { apply_pauli(p, obs, forward); },
             },
             op);
}

void Engine::apply_table(const TableOp& op, SparseObservable& obs, bool forward) const {
  const RotationBlocks& table = *op.table;
  const unsigned sa = 2 * (op.first_qubit - 1), sb = 2 * (op.second_qubit - 1);
  const std::uint64_t pair_mask = (3ULL << sa) | (3ULL << sb);
  auto support_of = [=](std::uint64_t c) { return static_cast<unsigned>(((c >> sa) & 3u) | (((c >> sb) & 3u) << 2)); };
  auto embed = [=](std::uint64_t stem, SupportCode s) {
    return stem | (static_cast<std::uint64_t>(s & 3u) << sa) | (static_cast<std::uint64_t>(s >> 2) << sb);
  };

  // Heisenberg updates multiply by R^T, forward updates by R.
  const bool dense = !table.block_diagonal();
  const int classes = dense ? 1 : 5;
  std::array<Eigen::MatrixXd, 5> maps;
  std::array<bool, 5> skip{};
  std::array<std::span<const SupportCode>, 5> bases;
  for (int c = 0; c < classes; ++c) {
    const Eigen::MatrixXd r = dense ? Eigen::MatrixXd(*table.dense) : table.blocks[c];
    skip[c] = is_exact_identity(r);
    maps[c] = forward ? r : Eigen::MatrixXd(r.transpose());
    bases[c] = dense ? std::span<const SupportCode>(kAllSupports) : graded_basis(c);
  }

  // Find: one group per (stem, degree class) present in obs.
  struct Group {
    std::uint64_t stem;
    int cls;
    std::size_t offset;
  };
  std::vector<Group> groups;
  std::unordered_set<std::uint64_t> visited;
  visited.reserve(obs.pauli_rank());
  std::size_t total = 0;
  for (const auto& [code, value] : obs.terms()) {
    const int cls = dense ? 0 : kSupportDegree[support_of(code)];
    if (skip[cls]) continue;
    const std::uint64_t stem = code & ~pair_mask;
    if (visited.insert(embed(stem, bases[cls][0])).second) {
      groups.push_back({stem, cls, total});
      total += bases[cls].size();
    }
  }
  if (groups.empty()) return;

  // Update: gather, rotate, then scatter once every group has been read.
  std::vector<double> out(total);
  for_chunks(groups.size(), worker_count(), [&](std::size_t begin, std::size_t end) {
    Eigen::VectorXd v(16);
    for (std::size_t g = begin; g < end; ++g) {
      const Group& grp = groups[g];
      const auto basis = bases[grp.cls];
      const auto dim = static_cast<Eigen::Index>(basis.size());
      for (Eigen::Index i = 0; i < dim; ++i) v[i] = obs.coefficient(embed(grp.stem, basis[i]));
      Eigen::Map<Eigen::VectorXd>(out.data() + grp.offset, dim).noalias() = maps[grp.cls] * v.head(dim);
    }
  });
  for (const Group& grp : groups) {
    const auto basis = bases[grp.cls];
    for (std::size_t i = 0; i < basis.size(); ++i) obs.set(embed(grp.stem, basis[i]), out[grp.offset + i]);
  }
}

void Engine::apply_pauli(const PauliOp& op, SparseObservable& obs, bool forward) const {
  const double c = std::cos(2 * op.angle), s = std::sin(2 * op.angle);
  if (s == 0.0 && c == 1.0) return;
  const std::uint64_t g = op.generator;

  // Each anticommuting pair (P, GP) is rotated once, by its smaller key when
  // both are present.
  std::vector<std::uint64_t> pairs;
  for (const auto& [code, value] : obs.terms()) {
    if (!bits::anticommute(code, g)) continue;
    const std::uint64_t partner = code ^ g;
    if (partner < code && obs.terms().count(partner) != 0) continue;
    pairs.push_back(code);
  }
  if (pairs.empty()) return;

  std::vector<double> out(2 * pairs.size());
  const double sign = forward ? 1.0 : -1.0;
  for_chunks(pairs.size(), worker_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t p = pairs[i], r = p ^ g;
      // G P = i^q R with q odd; e^{-i phi G} P e^{i phi G} = cos(2 phi) P + sigma sin(2 phi) R.
      const double sigma = bits::product_phase(g, p) == 1 ? 1.0 : -1.0;
      const double mp = obs.coefficient(p), mr = obs.coefficient(r);
      out[2 * i] = c * mp + sign * sigma * s * mr;
      out[2 * i + 1] = c * mr - sign * sigma * s * mp;
    }
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    obs.set(pairs[i], out[2 * i]);
    obs.set(pairs[i] ^ g, out[2 * i + 1]);
  }
}

RankProfile Engine::propagate_backward(const Circuit& circuit, std::size_t first, std::size_t last,
                                       SparseObservable& obs) const {
  if (obs.num_qubits() != circuit.num_qubits()) {
    throw std::invalid_argument("observable has " + std::to_string(obs.num_qubits()) + " qubits, circuit has " +
                                std::to_string(circuit.num_qubits()));
  }
  if (first > last || last > circuit.size()) throw std::out_of_range("gate range outside the circuit");
  RankProfile profile;
  for (std::size_t i = last; i-- > first;) {
    const auto start = Clock::now();
    const std::vector<Op> ops = lower(circuit[i], circuit.num_qubits());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) apply_op(*it, obs, false);
    const double pruned = obs.prune(config_.epsilon);
    const double micros = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
    profile.record({i, gate_kind(circuit[i]), obs.pauli_rank(), pruned, micros});
  }
  return profile;
}

RankProfile Engine::propagate_forward(const Circuit& circuit, std::size_t first, std::size_t last,
                                      SparseObservable& rho) const {
  if (rho.num_qubits() != circuit.num_qubits()) throw std::invalid_argument("state vector size mismatch");
  if (first > last || last > circuit.size()) throw std::out_of_range("gate range outside the circuit");
  RankProfile profile;
  for (std::size_t i = first; i < last; ++i) {
    const auto start = Clock::now();
    for (const Op& op : lower(circuit[i], circuit.num_qubits())) apply_op(op, rho, true);
    const double micros = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
    profile.record({i, gate_kind(circuit[i]), rho.pauli_rank(), 0.0, micros});
  }
  return profile;
}

PropagationResult Engine::conjugate_through(const Circuit& circuit, SparseObservable obs) const {
  RankProfile profile = propagate_backward(circuit, 0, circuit.size(), obs);
  return {std::move(obs), std::move(profile)};
}

ExpectationResult Engine::expectation(const Circuit& circuit, unsigned qubit, const ProductState& state) const {
  return config_.mode == Mode::Heisenberg ? expectation_heisenberg(circuit, qubit, state)
                                          : expectation_interaction(circuit, qubit, state);
}

ExpectationResult Engine::expectation_heisenberg(const Circuit& circuit, unsigned qubit,
                                                 const ProductState& state) const {
  if (state.num_qubits() != circuit.num_qubits()) throw std::invalid_argument("state size mismatch");
  const auto start = Clock::now();
  SparseObservable obs = SparseObservable::single_z(circuit.num_qubits(), qubit);
  ExpectationResult result;
  result.profile = propagate_backward(circuit, 0, circuit.size(), obs);
  result.value = expectation_against(obs, state);
  result.cut = circuit.size();
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

ExpectationResult Engine::expectation_interaction(const Circuit& circuit, unsigned qubit,
                                                  const ProductState& state) const {
  if (state.num_qubits() != circuit.num_qubits()) throw std::invalid_argument("state size mismatch");
  const std::size_t cut = config_.cut.value_or(default_cut(circuit));
  if (cut > circuit.size()) {
    throw std::out_of_range("cut " + std::to_string(cut) + " outside [0, " + std::to_string(circuit.size()) + "]");
  }
  const auto start = Clock::now();
  const unsigned n = circuit.num_qubits();
  SparseObservable meas = SparseObservable::single_z(n, qubit);
  ExpectationResult result;
  result.cut = cut;
  result.profile = propagate_backward(circuit, cut, circuit.size(), meas);

  // Only state components that can reach the measurement side's degrees matter.
  int max_degree = meas.max_majorana_degree();
  for (std::size_t i = 0; i < cut && max_degree < static_cast<int>(2 * n); ++i) {
    const auto shift = degree_shift(circuit[i], n);
    max_degree = shift ? max_degree + *shift : static_cast<int>(2 * n);
  }
  max_degree = std::min(max_degree, static_cast<int>(2 * n));
  SparseObservable rho = product_state_vector(state, max_degree);
  result.state_profile = propagate_forward(circuit, 0, cut, rho);

  double value = 0.0;
  for (const auto& [key, m] : meas.sorted_terms()) value += m * rho.coefficient(key.code());
  result.value = value;
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::size_t Engine::default_cut(const Circuit& circuit) const {
  const unsigned n = circuit.num_qubits();
  const std::size_t gates = circuit.size();
  const int full = static_cast<int>(2 * n);
  std::vector<int> shift(gates);
  for (std::size_t i = 0; i < gates; ++i) shift[i] = degree_shift(circuit[i], n).value_or(full);

  std::vector<double> span_upto(full + 1);  // sizes of spans of degree <= k
  for (int k = 0; k <= full; ++k) span_upto[k] = (k ? span_upto[k - 1] : 0.0) + bounds::binomial(full, k);

  // Measurement side, walking back from the end: cost of gates [c, N).
  std::vector<double> meas_cost(gates + 1, 0.0);
  std::vector<int> meas_degree(gates + 1, 2);
  for (std::size_t c = gates; c-- > 0;) {
    meas_degree[c] = std::min(full, meas_degree[c + 1] + shift[c]);
    meas_cost[c] = meas_cost[c + 1] + span_upto[meas_degree[c]] - 1.0;
  }
  std::size_t best = gates;
  double best_cost = std::numeric_limits<double>::infinity();
  int prefix_shift = 0;
  for (std::size_t c = 0; c <= gates; ++c) {
    const int state_degree = std::min(full, meas_degree[c] + prefix_shift);
    const double cost = meas_cost[c] + static_cast<double>(c) * span_upto[state_degree];
    if (cost <= best_cost) {
      best_cost = cost;
      best = c;
    }
    if (c < gates) prefix_shift = std::min(full, prefix_shift + shift[c]);
  }
  return best;
}

SparseObservable product_state_vector(const ProductState& state, int max_degree) {
  static constexpr int kLetterDegree[4] = {0, 1, 1, 2};
  const unsigned n = state.num_qubits();
  SparseObservable rho(n);
  // Depth-first from the highest qubit so the Jordan-Wigner parity is known.
  std::function<void(unsigned, bool, int, std::uint64_t, double)> visit =
      [&](unsigned q, bool parity, int degree, std::uint64_t code, double value) {
        if (q == 0) {
          if (rho.pauli_rank() >= kMaxStateTerms) throw std::length_error("state-side Pauli vector too large");
          rho.set(code, value);
          return;
        }
        for (unsigned letter = 0; letter < 4; ++letter) {
          const double f = state.factor(q, static_cast<Pauli>(letter));
          if (f == 0.0) continue;
          const unsigned effective = parity ? letter ^ 3u : letter;
          const int next = degree + kLetterDegree[effective];
          if (next > max_degree) continue;
          visit(q - 1, parity ^ (letter == 1 || letter == 2), next,
                code | (static_cast<std::uint64_t>(letter) << (2 * (q - 1))), value * f);
        }
      };
  visit(n, false, 0, 0, 1.0);
  return rho;
}

PropagationResult conjugate_through(const Circuit& circuit, SparseObservable obs, const EngineConfig& config) {
  return Engine(config).conjugate_through(circuit, std::move(obs));
}

ExpectationResult expectation(const Circuit& circuit, unsigned qubit, const ProductState& state,
                              const EngineConfig& config) {
  return Engine(config).expectation(circuit, qubit, state);
}

ExpectationResult expectation_interaction(const Circuit& circuit, unsigned qubit, const ProductState& state,
                                          const EngineConfig& config) {
  return Engine(config).expectation_interaction(circuit, qubit, state);
}

}  // namespace mgzz
