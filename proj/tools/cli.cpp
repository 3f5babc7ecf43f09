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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mgzz/bounds.hpp"
#include "mgzz/dense_oracle.hpp"
#include "mgzz/engine.hpp"
#include "mgzz/serialization.hpp"

namespace mgzz::cli {
namespace {

using io::Json;

constexpr double kCheckTolerance = 1e-9;

std::map<std::string, std::string> parse_fields(std::string_view body) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view item = body.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
    }
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = end + 1;
  }
  return out;
}

class Fields {
 public:
  Fields(std::string name, std::string_view body) : name_(std::move(name)), fields_(parse_fields(body)) {}

  template <typename T>
  T get(const std::string& key, T fallback) {
    auto it = fields_.find(key);
    if (it == fields_.end()) return fallback;
    std::istringstream in(it->second);
    T value;
    if (!(in >> value) || !in.eof()) {
      throw std::invalid_argument(name_ + ": bad value '" + it->second + "' for " + key);
    }
    fields_.erase(it);
    return value;
  }

  std::string text(const std::string& key, const std::string& fallback) {
    auto it = fields_.find(key);
    if (it == fields_.end()) return fallback;
    std::string v = it->second;
    fields_.erase(it);
    return v;
  }

  void finish() const {
    if (!fields_.empty()) throw std::invalid_argument(name_ + ": unknown field '" + fields_.begin()->first + "'");
  }

 private:
  std::string name_;
  std::map<std::string, std::string> fields_;
};

std::vector<unsigned> parse_sites(const std::string& text) {
  std::vector<unsigned> sites;
  if (text.empty() || text == "none") return sites;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, '+')) sites.push_back(static_cast<unsigned>(std::stoul(item)));
  return sites;
}

ProductState random_pure_state(unsigned n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<BlochVector> qubits;
  for (unsigned q = 0; q < n; ++q) {
    double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    qubits.push_back({x / r, y / r, z / r});
  }
  return ProductState(std::move(qubits));
}

double max_coefficient_gap(const SparseObservable& a, const SparseObservable& b) {
  double gap = 0.0;
  for (const auto& [code, v] : a.terms()) gap = std::max(gap, std::abs(v - b.coefficient(code)));
  for (const auto& [code, v] : b.terms()) gap = std::max(gap, std::abs(v - a.coefficient(code)));
  return gap;
}

// Flips the sign of every non-trivial table so the check harness has something to catch.
void corrupt_table(RotationBlocks& t) {
  if (t.block_diagonal()) {
    t.blocks[2] = -t.blocks[2];
  } else {
    *t.dense = -*t.dense;
  }
}

struct RunOptions {
  std::string circuit;
  std::string builder;
  unsigned qubit = 1;
  std::string state = "zeros";
  double epsilon = 0.0;
  std::string mode = "heisenberg";
  long cut = -1;
  std::string profile;
  std::string out;
  std::uint64_t seed = 0;
  bool parallel = false;
  unsigned threads = 0;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  if (o.circuit.empty() == o.builder.empty()) throw std::invalid_argument("give exactly one of --circuit or --builder");
  const Circuit circuit = o.circuit.empty() ? build_from_spec(o.builder, o.seed) : io::read_circuit(o.circuit);
  EngineConfig config;
  config.epsilon = o.epsilon;
  config.parallel = o.parallel;
  config.threads = o.threads;
  if (o.mode == "heisenberg") {
    config.mode = Mode::Heisenberg;
  } else if (o.mode == "interaction") {
    config.mode = Mode::InteractionPicture;
  } else {
    throw std::invalid_argument("unknown mode '" + o.mode + "'");
  }
  if (o.cut >= 0) config.cut = static_cast<std::size_t>(o.cut);
  const ProductState state = parse_state(o.state, circuit.num_qubits());
  const ExpectationResult result = Engine(config).expectation(circuit, o.qubit, state);
  Json doc = io::result_to_json(result);
  doc["mode"] = o.mode;
  doc["n"] = circuit.num_qubits();
  doc["gates"] = circuit.size();
  doc["zz_gates"] = circuit.zz_count();
  if (!o.profile.empty()) io::write_text(o.profile, io::profile_to_csv(result.profile));
  if (!o.out.empty()) io::write_text(o.out, doc.dump(2) + "\n");
  out << doc.dump(2) << '\n';
  return 0;
}

struct BoundsOptions {
  int n = 0;
  int m = 0;
  double gates = 1;
  std::string structure = "general";
  bool sweep = false;
  int n_min = 4;
  int n_max = 12;
};

double structured_bound(int n, int m, double gates, const std::string& structure) {
  if (m >= bounds::m_critical(n)) return bounds::bound_exponential(n, m, gates);
  return structure == "layered" ? bounds::bound_layered(n, m, gates) : bounds::bound_general(n, m, gates);
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  if (o.structure != "general" && o.structure != "layered") {
    throw std::invalid_argument("structure must be general or layered");
  }
  if (o.sweep) {
    if (o.n_min < 2 || o.n_max < o.n_min) throw std::invalid_argument("need 2 <= n-min <= n-max");
    out << "n,m,N,chi_general,bound,regime\n" << std::setprecision(17);
    for (int n = o.n_min; n <= o.n_max; ++n) {
      for (int m = 0; m <= n - 2; ++m) {
        const auto r = bounds::bound_report(n, m, o.gates);
        out << n << ',' << m << ',' << o.gates << ',' << r.chi_general << ','
            << structured_bound(n, m, o.gates, o.structure) << ',' << bounds::to_string(r.regime) << '\n';
      }
    }
    return 0;
  }
  const auto r = bounds::bound_report(o.n, o.m, o.gates);
  Json doc{{"format", io::kFormatVersion},
           {"n", r.n},
           {"m", r.m},
           {"N", r.gates},
           {"m_c", r.m_c},
           {"regime", bounds::to_string(r.regime)},
           {"structure", o.structure},
           {"chi_general", r.chi_general},
           {"chi_layered", r.chi_layered},
           {"r", r.r},
           {"bound", structured_bound(o.n, o.m, o.gates, o.structure)}};
  if (r.m <= r.m_c) {
    doc["bound_general"] = r.bound_general;
    doc["bound_layered"] = r.bound_layered;
  }
  if (r.m >= r.m_c) doc["bound_exponential"] = r.bound_exponential;
  out << doc.dump(2) << '\n';
  return 0;
}

struct CheckOptions {
  std::string circuit;
  unsigned seeds = 20;
  unsigned n_min = 2;
  unsigned n_max = 6;
  std::size_t gates = 30;
  std::size_t zz_max = 4;
  std::uint64_t seed = 0;
  bool corrupt = false;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  if (o.n_min < 2 || o.n_max < o.n_min || o.n_max > dense::kMaxStatevectorQubits) {
    throw std::invalid_argument("need 2 <= n-min <= n-max <= 14");
  }
  EngineConfig config;
  if (o.corrupt) config.table_hook = corrupt_table;
  const Engine engine(config);
  double worst_value = 0.0, worst_coeff = 0.0;
  std::size_t checked = 0;
  auto check_one = [&](const Circuit& c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const unsigned n = c.num_qubits();
    for (unsigned j = 1; j <= n; ++j) {
      const ProductState state = random_pure_state(n, rng);
      const double got = engine.expectation_heisenberg(c, j, state).value;
      worst_value = std::max(worst_value, std::abs(got - dense::statevector_expectation(c, state, j)));
      if (n <= dense::kMaxUnitaryQubits) {
        const SparseObservable z = SparseObservable::single_z(n, j);
        const auto evolved = engine.conjugate_through(c, z).observable;
        worst_coeff = std::max(worst_coeff, max_coefficient_gap(evolved, dense::pauli_conjugation_decompose(c, z)));
      }
    }
    ++checked;
  };
  if (!o.circuit.empty()) {
    check_one(io::read_circuit(o.circuit), o.seed);
  } else {
    for (unsigned s = 0; s < o.seeds; ++s) {
      const unsigned n = o.n_min + s % (o.n_max - o.n_min + 1);
      const std::size_t zz = std::min<std::size_t>(s % (o.zz_max + 1), o.gates);
      check_one(random_mgzz(n, o.gates, zz, Placement::Random, o.seed + s, ZZKind::MixedLongRange), o.seed + s);
    }
  }
  const double worst = std::max(worst_value, worst_coeff);
  out << "checked " << checked << " circuits; max |value deviation| = " << worst_value
      << "; max |coefficient deviation| = " << worst_coeff << '\n';
  if (worst > kCheckTolerance) {
    out << "FAIL: deviation above " << kCheckTolerance << '\n';
    return 1;
  }
  out << "ok\n";
  return 0;
}

struct ProfileOptions {
  std::vector<unsigned> sites{3, 4, 5};
  unsigned steps_max = 4;
  std::vector<double> epsilons{0.0};
  double hopping = 1.0;
  double onsite = 1.0;
  double dt = 0.1;
  unsigned fermions = 0;
  std::string interaction_sites = "1";
  unsigned qubit = 1;
  unsigned max_qubits = 24;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_profile_fh(const ProfileOptions& o, std::ostream& out, std::ostream& err) {
  std::ostringstream csv;
  csv << "n_sites,T,epsilon,chi_per_gate,time_per_gate,abs_error_vs_eps0\n" << std::setprecision(12);
  for (unsigned sites : o.sites) {
    if (2 * sites > o.max_qubits) {
      err << "skipping n_sites=" << sites << ": " << 2 * sites << " qubits exceeds --max-qubits " << o.max_qubits
          << '\n';
      continue;
    }
    for (unsigned t = 0; t <= o.steps_max; ++t) {
      FHParams p;
      p.n_sites = sites;
      p.trotter_steps = t;
      p.hopping = o.hopping;
      p.onsite = o.onsite;
      p.dt = o.dt;
      p.fermions = o.fermions > 0 ? o.fermions : std::max(1u, sites / 2);
      p.interaction_sites = parse_sites(o.interaction_sites);
      p.seed = o.seed;
      const Circuit c = fermi_hubbard_trotter(p);
      const ProductState state = fermi_hubbard_reference(p);
      const double norm = static_cast<double>(trotter_gate_count(p));
      const double reference = Engine().expectation(c, o.qubit, state).value;
      for (double eps : o.epsilons) {
        EngineConfig config;
        config.epsilon = eps;
        const ExpectationResult r = Engine(config).expectation(c, o.qubit, state);
        csv << sites << ',' << t << ',' << eps << ',' << r.profile.chi_total / norm << ','
            << r.elapsed_seconds / norm << ',';
        if (eps > 0) csv << std::abs(r.value - reference);
        csv << '\n';
      }
    }
  }
  if (!o.out.empty()) io::write_text(o.out, csv.str());
  out << csv.str();
  return 0;
}

}  // namespace

ProductState parse_state(std::string_view spec, unsigned num_qubits) {
  if (spec == "zeros") return ProductState::zeros(num_qubits);
  if (spec.rfind("bits:", 0) == 0) {
    ProductState s = ProductState::from_bits(spec.substr(5));
    if (s.num_qubits() != num_qubits) {
      throw std::invalid_argument("state has " + std::to_string(s.num_qubits()) + " bits, circuit has " +
                                  std::to_string(num_qubits) + " qubits");
    }
    return s;
  }
  if (spec.rfind("bloch:", 0) == 0) {
    Json doc;
    try {
      doc = Json::parse(spec.substr(6));
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("bloch state: ") + e.what());
    }
    if (!doc.is_array() || doc.size() != num_qubits) {
      throw std::invalid_argument("bloch state needs one [x,y,z] per qubit");
    }
    std::vector<BlochVector> qubits;
    for (const Json& r : doc) {
      const auto v = r.get<std::vector<double>>();
      if (v.size() != 3) throw std::invalid_argument("bloch vectors have three components");
      qubits.push_back({v[0], v[1], v[2]});
    }
    return ProductState(std::move(qubits));
  }
  throw std::invalid_argument("unknown state spec '" + std::string(spec) + "'");
}

FHParams parse_fh_spec(std::string_view body, std::uint64_t seed) {
  Fields f("fh", body);
  FHParams p;
  p.n_sites = f.get<unsigned>("n_sites", 2);
  p.trotter_steps = f.get<unsigned>("T", 0);
  p.hopping = f.get<double>("J", 1.0);
  p.onsite = f.get<double>("U", 1.0);
  p.dt = f.get<double>("dt", 0.1);
  p.fermions = f.get<unsigned>("q", 1);
  p.interaction_sites = parse_sites(f.text("sites", "1"));
  p.seed = seed;
  f.finish();
  return p;
}

Circuit build_from_spec(std::string_view spec, std::uint64_t seed) {
  const std::size_t colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (name == "fh") return fermi_hubbard_trotter(parse_fh_spec(body, seed));
  Fields f(name, body);
  Circuit c;
  if (name == "brickwall") {
    const auto n = f.get<unsigned>("n", 4);
    const auto depth = f.get<unsigned>("depth", 4);
    c = brickwall_matchgates(n, depth, seed);
  } else if (name == "random") {
    const auto n = f.get<unsigned>("n", 4);
    const auto gates = f.get<std::size_t>("N", 20);
    const auto zz = f.get<std::size_t>("m", 1);
    const std::string placement = f.text("placement", "random");
    const std::string kind = f.text("kind", "zz");
    if (placement != "random" && placement != "layered") throw std::invalid_argument("placement: random|layered");
    ZZKind k = ZZKind::ZZExp;
    if (kind == "mixed") {
      k = ZZKind::Mixed;
    } else if (kind == "long_range") {
      k = ZZKind::MixedLongRange;
    } else if (kind != "zz") {
      throw std::invalid_argument("kind: zz|mixed|long_range");
    }
    c = random_mgzz(n, gates, zz, placement == "layered" ? Placement::Layered : Placement::Random, seed, k);
  } else if (name == "givens") {
    const auto n = f.get<unsigned>("n", 4);
    const auto q = f.get<unsigned>("q", 1);
    c = givens_ladder(n, q, seed);
  } else {
    throw std::invalid_argument("unknown builder '" + name + "' (fh, brickwall, random, givens)");
  }
  f.finish();
  return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse Pauli-basis simulator for matchgate + ZZ circuits", "mgzz"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Evaluate <Z_j> for one circuit");
  auto* src_file = run_cmd->add_option("--circuit", run.circuit, "Circuit JSON file");
  auto* src_builder = run_cmd->add_option("--builder", run.builder, "Builder spec, e.g. fh:n_sites=5,T=3,sites=1");
  src_file->excludes(src_builder);
  run_cmd->add_option("--qubit", run.qubit, "Measured qubit (1-based)");
  run_cmd->add_option("--state", run.state, "zeros | bits:0110 | bloch:[[x,y,z],...]");
  run_cmd->add_option("--epsilon", run.epsilon, "Pruning threshold")->check(CLI::NonNegativeNumber);
  run_cmd->add_option("--mode", run.mode, "heisenberg | interaction");
  run_cmd->add_option("--cut", run.cut, "Interaction-picture cut (gate index)");
  run_cmd->add_option("--profile", run.profile, "Write the rank profile CSV here");
  run_cmd->add_option("--out", run.out, "Write the result JSON here");
  run_cmd->add_option("--seed", run.seed, "Builder seed");
  run_cmd->add_flag("--parallel", run.parallel, "Split each gate's key groups over threads");
  run_cmd->add_option("--threads", run.threads, "Worker count for --parallel");

  BoundsOptions bnd;
  auto* bounds_cmd = app.add_subcommand("bounds", "Report cost bounds, or sweep them as CSV");
  bounds_cmd->add_option("--n", bnd.n, "Qubits");
  bounds_cmd->add_option("--m", bnd.m, "ZZ gates");
  bounds_cmd->add_option("--gates", bnd.gates, "Total gate count N");
  bounds_cmd->add_option("--structure", bnd.structure, "general | layered");
  bounds_cmd->add_flag("--sweep", bnd.sweep, "Emit CSV over n in [n-min, n-max], m in [0, n-2]");
  bounds_cmd->add_option("--n-min", bnd.n_min);
  bounds_cmd->add_option("--n-max", bnd.n_max);

  CheckOptions chk;
  auto* check_cmd = app.add_subcommand("check", "Cross-check the engine against the dense oracles");
  check_cmd->add_option("--circuit", chk.circuit, "Check this circuit instead of random ones");
  check_cmd->add_option("--seeds", chk.seeds, "Random circuits to check");
  check_cmd->add_option("--n-min", chk.n_min);
  check_cmd->add_option("--n-max", chk.n_max);
  check_cmd->add_option("--gates", chk.gates, "Gates per random circuit");
  check_cmd->add_option("--zz", chk.zz_max, "Largest ZZ count");
  check_cmd->add_option("--seed", chk.seed, "First seed");
  check_cmd->add_flag("--corrupt-table", chk.corrupt)->group("");

  ProfileOptions prof;
  auto* prof_cmd = app.add_subcommand("profile-fh", "Rank and time per gate for Fermi-Hubbard Trotter circuits");
  prof_cmd->add_option("--sites", prof.sites, "Site counts")->delimiter(',');
  prof_cmd->add_option("--steps", prof.steps_max, "Largest Trotter step count");
  prof_cmd->add_option("--epsilons", prof.epsilons, "Pruning thresholds")->delimiter(',');
  prof_cmd->add_option("--hopping", prof.hopping);
  prof_cmd->add_option("--onsite", prof.onsite);
  prof_cmd->add_option("--dt", prof.dt);
  prof_cmd->add_option("--fermions", prof.fermions, "Fermions per register; 0 picks n_sites/2");
  prof_cmd->add_option("--interaction-sites", prof.interaction_sites, "Sites joined by '+', e.g. 1+3");
  prof_cmd->add_option("--qubit", prof.qubit);
  prof_cmd->add_option("--max-qubits", prof.max_qubits, "Skip larger instances");
  prof_cmd->add_option("--seed", prof.seed);
  prof_cmd->add_option("--out", prof.out, "Write the CSV here");

  std::string build_spec, build_out;
  std::uint64_t build_seed = 0;
  auto* build_cmd = app.add_subcommand("build", "Emit a generated circuit as JSON");
  build_cmd->add_option("--builder", build_spec, "Builder spec")->required();
  build_cmd->add_option("--seed", build_seed);
  build_cmd->add_option("--out", build_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    if (*bounds_cmd) return cmd_bounds(bnd, out);
    if (*check_cmd) return cmd_check(chk, out);
    if (*prof_cmd) return cmd_profile_fh(prof, out, err);
    if (*build_cmd) {
      const std::string doc = io::circuit_to_json(build_from_spec(build_spec, build_seed)).dump(2) + "\n";
      if (!build_out.empty()) io::write_text(build_out, doc);
      out << doc;
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace mgzz::cli
