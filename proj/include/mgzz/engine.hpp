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
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mgzz/circuit.hpp"
#include "mgzz/rotation.hpp"
#include "mgzz/sparse_observable.hpp"

namespace mgzz {

enum class Mode { Heisenberg, InteractionPicture };

struct EngineConfig {
  /// Coefficients with |v| < epsilon are dropped after every gate.
  double epsilon = 0.0;
  Mode mode = Mode::Heisenberg;
  /// Interaction picture: gates [0, cut) evolve the state, [cut, N) the
  /// measurement. Chosen automatically when empty.
  std::optional<std::size_t> cut;
  bool parallel = false;
  /// Worker count for parallel mode; 0 means hardware concurrency.
  unsigned threads = 0;
  bool profile = true;
  /// Test hook applied to every rotation table the engine builds.
  RotationCache::Hook table_hook;
};

struct StepRecord {
  std::size_t gate_index = 0;
  std::string gate_kind;
  std::size_t chi = 0;
  double pruned_mass = 0.0;
  double micros = 0.0;
};

/// Pauli rank after every gate. chi_total is the sum of the recorded ranks.
struct RankProfile {
  std::vector<StepRecord> steps;
  std::size_t chi_total = 0;
  std::size_t max_chi = 0;
  double pruned_mass_total = 0.0;

  void record(StepRecord step);
};

struct PropagationResult {
  SparseObservable observable;
  RankProfile profile;
};

struct ExpectationResult {
  double value = 0.0;
  RankProfile profile;
  /// Forward (state-side) profile; empty in Heisenberg mode.
  RankProfile state_profile;
  std::size_t cut = 0;
  double elapsed_seconds = 0.0;
};

/// Keys sharing P's stem whose supports on (first, first+1) run over
/// graded_basis(d), where d is the degree of P's support.
struct FindResult {
  std::vector<PauliKey> keys;
  int degree = 0;
};

FindResult find(const PauliKey& p, unsigned first);

/// Gathers the coefficients of keys (missing entries read as 0), replaces
/// them by block * v and writes them back, erasing exact zeros.
void update(SparseObservable& obs, std::span<const PauliKey> keys, const Eigen::MatrixXd& block);

/// Conjugates obs by exp(i phi G): obs <- e^{-i phi G} obs e^{i phi G}.
void apply_pauli_exponential(SparseObservable& obs, const PauliKey& generator, double phi);

/// Sparse Pauli-basis propagation of matchgate + ZZ circuits.
///
/// A single engine reuses rotation tables across calls; it is not safe to run
/// two propagations on the same engine concurrently.
class Engine {
 public:
  explicit Engine(EngineConfig config = {});

  const EngineConfig& config() const { return config_; }
  const RotationCache& cache() const { return *cache_; }

  /// U^dag M U for the whole circuit, conjugating the last gate first.
  PropagationResult conjugate_through(const Circuit& circuit, SparseObservable obs) const;

  /// <Z_j> on the product state, in the configured mode.
  ExpectationResult expectation(const Circuit& circuit, unsigned qubit, const ProductState& state) const;
  ExpectationResult expectation_heisenberg(const Circuit& circuit, unsigned qubit,
                                           const ProductState& state) const;
  ExpectationResult expectation_interaction(const Circuit& circuit, unsigned qubit,
                                            const ProductState& state) const;

  /// Heisenberg-side backward propagation over gates [first, last).
  RankProfile propagate_backward(const Circuit& circuit, std::size_t first, std::size_t last,
                                 SparseObservable& obs) const;
  /// State-side forward propagation of Tr(P rho) coefficients over [first, last).
  RankProfile propagate_forward(const Circuit& circuit, std::size_t first, std::size_t last,
                                SparseObservable& rho) const;

  /// Cut balancing the span-size staircase estimates of both directions.
  std::size_t default_cut(const Circuit& circuit) const;

 private:
  struct TableOp {
    unsigned first_qubit;
    unsigned second_qubit;
    std::shared_ptr<const RotationBlocks> table;
  };
  struct PauliOp {
    std::uint64_t generator;
    double angle;
  };
  using Op = std::variant<TableOp, PauliOp>;

  std::vector<Op> lower(const Gate& gate, unsigned num_qubits) const;
  void apply_op(const Op& op, SparseObservable& obs, bool forward) const;
  void apply_table(const TableOp& op, SparseObservable& obs, bool forward) const;
  void apply_pauli(const PauliOp& op, SparseObservable& obs, bool forward) const;
  /// Upper bound on |degree change| of one gate, or nullopt when unbounded.
  std::optional<int> degree_shift(const Gate& gate, unsigned num_qubits) const;
  unsigned worker_count() const;

  EngineConfig config_;
  std::shared_ptr<RotationCache> cache_;
};

/// Pauli vector of Tr(P rho_0) restricted to keys of Majorana degree <= max_degree.
SparseObservable product_state_vector(const ProductState& state, int max_degree);

/// Convenience wrappers around a temporary Engine.
PropagationResult conjugate_through(const Circuit& circuit, SparseObservable obs,
                                    const EngineConfig& config = {});
ExpectationResult expectation(const Circuit& circuit, unsigned qubit, const ProductState& state,
                              const EngineConfig& config = {});
ExpectationResult expectation_interaction(const Circuit& circuit, unsigned qubit, const ProductState& state,
                                          const EngineConfig& config = {});

}  // namespace mgzz
