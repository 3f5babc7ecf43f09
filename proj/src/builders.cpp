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

#include "mgzz/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace mgzz {
namespace {

using Rng = std::mt19937_64;

double angle(Rng& rng) { return std::uniform_real_distribution<double>(-M_PI, M_PI)(rng); }

unsigned pick(Rng& rng, unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); }

NamedGate random_matchgate(unsigned first, Rng& rng) {
  std::vector<double> params(6);
  for (double& p : params) p = angle(rng);
  return {NamedKind::MatchgateKak, {first, first + 1}, std::move(params)};
}

std::pair<unsigned, unsigned> random_pair(unsigned n, Rng& rng) {
  const unsigned a = pick(rng, 1, n);
  unsigned b = pick(rng, 1, n - 1);
  if (b >= a) ++b;
  return {a, b};
}

std::pair<unsigned, unsigned> random_adjacent(unsigned n, Rng& rng) {
  const unsigned j = pick(rng, 1, n - 1);
  return pick(rng, 0, 1) ? std::pair{j, j + 1} : std::pair{j + 1, j};
}

Gate zz_exp(unsigned n, unsigned a, unsigned b, double phi) {
  return PauliExp{PauliKey::identity(n).with(a, Pauli::Z).with(b, Pauli::Z), phi};
}

// Phases kept away from 0 mod 2 pi so every draw classifies as non-matchgate.
double zz_phase(Rng& rng) { return std::uniform_real_distribution<double>(0.2, 2 * M_PI - 0.2)(rng); }

Gate random_zz(unsigned n, ZZKind kind, Rng& rng) {
  if (kind == ZZKind::ZZExp) {
    auto [a, b] = random_pair(n, rng);
    return zz_exp(n, a, b, zz_phase(rng) / 4);
  }
  switch (pick(rng, 0, 3)) {
    case 0: {
      auto [a, b] = kind == ZZKind::MixedLongRange ? random_pair(n, rng) : random_adjacent(n, rng);
      return NamedGate{NamedKind::Swap, {a, b}, {}};
    }
    case 1: {
      auto [a, b] = random_pair(n, rng);
      return NamedGate{NamedKind::CZ, {a, b}, {}};
    }
    case 2: {
      auto [a, b] = random_pair(n, rng);
      return NamedGate{NamedKind::CPhase, {a, b}, {zz_phase(rng)}};
    }
    default: {
      auto [a, b] = random_pair(n, rng);
      return zz_exp(n, a, b, zz_phase(rng) / 4);
    }
  }
}

void check_register(unsigned n) {
  if (n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("register size " + std::to_string(n) + " outside [2, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

Circuit brickwall_matchgates(unsigned n, unsigned depth, std::uint64_t seed) {
  check_register(n);
  Rng rng(seed);
  Circuit c(n);
  for (unsigned layer = 0; layer < depth; ++layer) {
    for (unsigned j = 1 + layer % 2; j + 1 <= n; j += 2) c.append(random_matchgate(j, rng));
  }
  return c;
}

std::vector<std::size_t> layered_positions(std::size_t gates, std::size_t zz) {
  if (zz > gates) throw std::invalid_argument("more ZZ gates than gates");
  std::vector<std::size_t> pos;
  for (std::size_t i = 1; i <= zz; ++i) pos.push_back(i * gates / (zz + 1));
  return pos;
}

Circuit random_mgzz(unsigned n, std::size_t gates, std::size_t zz, Placement placement, std::uint64_t seed,
                    ZZKind kind) {
  check_register(n);
  if (zz > gates) {
    throw std::invalid_argument("m = " + std::to_string(zz) + " exceeds N = " + std::to_string(gates));
  }
  Rng rng(seed);
  std::vector<bool> is_zz(gates, false);
  if (placement == Placement::Layered) {
    for (std::size_t p : layered_positions(gates, zz)) is_zz[p] = true;
  } else {
    std::vector<std::size_t> all(gates);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> chosen;
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), zz, rng);
    for (std::size_t p : chosen) is_zz[p] = true;
  }
  Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    if (is_zz[i]) {
      c.append(random_zz(n, kind, rng));
    } else {
      c.append(random_matchgate(pick(rng, 1, n - 1), rng));
    }
  }
  return c;
}

void append_givens_ladder(Circuit& circuit, unsigned offset, unsigned n, unsigned q, std::uint64_t seed) {
  if (q < 1 || q >= n) {
    throw std::invalid_argument("givens ladder needs 1 <= q < n, got q = " + std::to_string(q));
  }
  if (offset + n > circuit.num_qubits()) throw std::out_of_range("givens ladder outside the register");
  Rng rng(seed);
  for (unsigned chain = 0; chain < q; ++chain) {
    for (unsigned j = 1 + chain; j <= n - q + chain; ++j) {
      circuit.append(NamedGate{NamedKind::Givens, {offset + j, offset + j + 1}, {angle(rng)}});
    }
  }
}

Circuit givens_ladder(unsigned n, unsigned q, std::uint64_t seed) {
  check_register(n);
  Circuit c(n);
  append_givens_ladder(c, 0, n, q, seed);
  return c;
}

ProductState fermi_hubbard_reference(const FHParams& params) {
  if (params.fermions > params.n_sites) throw std::invalid_argument("more fermions than sites");
  std::string reg(params.n_sites, '0');
  std::fill_n(reg.begin(), params.fermions, '1');
  return ProductState::from_bits(reg + reg);
}

NamedGate hopping_gate(unsigned first, double t) {
  return {NamedKind::MatchgateKak, {first, first + 1}, {0, 0, 0, 0, t / 2, t / 2}};
}

Circuit fermi_hubbard_trotter(const FHParams& params) {
  const unsigned p = params.n_sites;
  if (p < 2) throw std::invalid_argument("fermi-hubbard needs at least 2 sites");
  check_register(2 * p);
  for (unsigned s : params.interaction_sites) {
    if (s < 1 || s > p) {
      throw std::out_of_range("interaction site " + std::to_string(s) + " outside [1, " + std::to_string(p) + "]");
    }
  }
  Circuit c(2 * p);
  if (params.fermions > 0) {
    append_givens_ladder(c, 0, p, params.fermions, params.seed);
    append_givens_ladder(c, p, p, params.fermions, params.seed + 1);
  }
  const double hop = params.hopping * params.dt;
  for (unsigned step = 0; step < params.trotter_steps; ++step) {
    for (unsigned offset : {0u, p}) {
      for (unsigned j = 1; j + 1 <= p; j += 2) c.append(hopping_gate(offset + j, hop));
      for (unsigned j = 2; j + 1 <= p; j += 2) c.append(hopping_gate(offset + j, hop));
    }
    for (unsigned s : params.interaction_sites) {
      c.append(NamedGate{NamedKind::CPhase, {s, s + p}, {-params.onsite * params.dt}});
    }
  }
  return c;
}

std::size_t trotter_gate_count(const FHParams& params) {
  return 2 * static_cast<std::size_t>(params.n_sites) * (params.trotter_steps + 1);
}

}  // namespace mgzz
