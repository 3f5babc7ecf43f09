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
#include <cstdint>
#include <vector>

#include "mgzz/circuit.hpp"
#include "mgzz/sparse_observable.hpp"

namespace mgzz {

enum class Placement { Random, Layered };

/// Which parity-preserving non-matchgates random_mgzz draws from.
enum class ZZKind {
  /// exp(i phi Z_a Z_b) on a random pair.
  ZZExp,
  /// Adjacent SWAP, CZ and CPhase on any pair, exp(i phi Z_a Z_b) on any pair.
  Mixed,
  /// As Mixed, with SWAP also allowed on distant pairs.
  MixedLongRange,
};

/// Alternating (1,2),(3,4),... and (2,3),(4,5),... layers of random KAK matchgates.
Circuit brickwall_matchgates(unsigned n, unsigned depth, std::uint64_t seed);

/// `gates` gates in total, `zz` of them parity-preserving non-matchgates, the
/// rest random KAK matchgates on random adjacent pairs.
Circuit random_mgzz(unsigned n, std::size_t gates, std::size_t zz, Placement placement, std::uint64_t seed,
                    ZZKind kind = ZZKind::ZZExp);

/// Indices at which the layered placement puts its ZZ gates.
std::vector<std::size_t> layered_positions(std::size_t gates, std::size_t zz);

/// q chains of nearest-neighbour Givens rotations with random angles on
/// qubits [offset+1, offset+n].
Circuit givens_ladder(unsigned n, unsigned q, std::uint64_t seed);
void append_givens_ladder(Circuit& circuit, unsigned offset, unsigned n, unsigned q, std::uint64_t seed);

struct FHParams {
  unsigned n_sites = 2;
  unsigned trotter_steps = 0;
  double hopping = 1.0;
  double onsite = 1.0;
  double dt = 0.1;
  std::vector<unsigned> interaction_sites{1};
  /// Chains in each register's Givens initialisation; 0 skips it.
  unsigned fermions = 1;
  std::uint64_t seed = 0;
};

/// exp(i t (XX + YY) / 2) on (first, first+1), the one-bond hopping step.
NamedGate hopping_gate(unsigned first, double t);

/// Top register on qubits 1..n_sites, bottom on n_sites+1..2 n_sites.
Circuit fermi_hubbard_trotter(const FHParams& params);

/// Occupation the Givens ladders start from: `fermions` leading ones per register.
ProductState fermi_hubbard_reference(const FHParams& params);

/// 2 n_sites (T+1), the per-gate normalisation used for profiles.
std::size_t trotter_gate_count(const FHParams& params);

}  // namespace mgzz
