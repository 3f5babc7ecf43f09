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

#include "mgzz/serialization.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace mgzz::io {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const std::vector<std::pair<std::string, NamedKind>> kNamed = {
    {"swap", NamedKind::Swap}, {"cz", NamedKind::CZ}, {"cphase", NamedKind::CPhase},
    {"givens", NamedKind::Givens}, {"rz", NamedKind::Rz}, {"ry", NamedKind::Ry},
    {"matchgate_kak", NamedKind::MatchgateKak},
};

bool takes_theta(NamedKind k) {
  return k == NamedKind::CPhase || k == NamedKind::Givens || k == NamedKind::Rz || k == NamedKind::Ry;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

Gate parse_gate(const Json& record) {
  const std::string name = record.at("gate").get<std::string>();
  if (name == "pauli_exp") {
    PauliKey key = PauliKey::from_string(record.at("pauli").get<std::string>());
    return PauliExp{key, record.at("phi").get<double>()};
  }
  const auto qubits = record.at("qubits").get<std::vector<unsigned>>();
  if (name == "nn_unitary") {
    if (qubits.size() != 2 || qubits[1] != qubits[0] + 1) {
      throw std::invalid_argument("nn_unitary needs qubits [j, j+1]");
    }
    const Json& rows = record.at("matrix");
    if (!rows.is_array() || rows.size() != 4) throw std::invalid_argument("nn_unitary matrix must have 4 rows");
    Matrix4c m;
    for (int i = 0; i < 4; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 4) {
        throw std::invalid_argument("nn_unitary matrix row " + std::to_string(i) + " must have 4 entries");
      }
      for (int j = 0; j < 4; ++j) {
        const auto pair = rows[i][j].get<std::vector<double>>();
        if (pair.size() != 2) throw std::invalid_argument("matrix entries are [re, im] pairs");
        m(i, j) = {pair[0], pair[1]};
      }
    }
    return NNUnitary{m, qubits[0]};
  }
  for (const auto& [label, kind] : kNamed) {
    if (label != name) continue;
    NamedGate g{kind, qubits, {}};
    if (kind == NamedKind::MatchgateKak) {
      g.params = record.at("params").get<std::vector<double>>();
    } else if (takes_theta(kind)) {
      g.params = {record.at("theta").get<double>()};
    }
    return g;
  }
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

}  // namespace

Json gate_to_json(const Gate& gate) {
  return std::visit(Overloaded{
                        [](const NNUnitary& u) {
                          Json rows = Json::array();
                          for (int i = 0; i < 4; ++i) {
                            Json row = Json::array();
                            for (int j = 0; j < 4; ++j) row.push_back({u.matrix(i, j).real(), u.matrix(i, j).imag()});
                            rows.push_back(row);
                          }
                          return Json{{"gate", "nn_unitary"}, {"qubits", {u.first, u.first + 1}}, {"matrix", rows}};
                        },
                        [](const PauliExp& e) {
                          return Json{{"gate", "pauli_exp"}, {"pauli", e.generator.str()}, {"phi", e.angle}};
                        },
                        [](const NamedGate& g) {
                          Json out{{"gate", to_string(g.kind)}, {"qubits", g.targets}};
                          if (g.kind == NamedKind::MatchgateKak) {
                            out["params"] = g.params;
                          } else if (takes_theta(g.kind)) {
                            out["theta"] = g.params.at(0);
                          }
                          return out;
                        },
                    },
                    gate);
}

Gate gate_from_json(const Json& record, unsigned num_qubits) {
  Gate g;
  try {
    g = parse_gate(record);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed gate record: ") + e.what());
  }
  validate_gate(g, num_qubits);
  return g;
}

Json circuit_to_json(const Circuit& circuit) {
  Json gates = Json::array();
  for (const Gate& g : circuit.gates()) gates.push_back(gate_to_json(g));
  return {{"format", kFormatVersion}, {"n", circuit.num_qubits()}, {"gates", gates}};
}

Circuit circuit_from_json(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("circuit document must be a JSON object");
  const int format = doc.value("format", kFormatVersion);
  if (format != kFormatVersion) throw std::invalid_argument("unsupported circuit format " + std::to_string(format));
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw std::invalid_argument("circuit needs a positive integer field 'n'");
  }
  Circuit circuit(doc["n"].get<unsigned>());
  const Json& gates = doc.value("gates", Json::array());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    try {
      circuit.append(gate_from_json(gates[i], circuit.num_qubits()));
    } catch (const std::exception& e) {
      throw std::invalid_argument("gate " + std::to_string(i) + ": " + e.what());
    }
  }
  return circuit;
}

Circuit read_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return circuit_from_json(doc);
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string observable_to_text(const SparseObservable& obs) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& [key, v] : obs.sorted_terms()) os << key.str() << ' ' << v << '\n';
  return os.str();
}

SparseObservable observable_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<SparseObservable> obs;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string pauli;
    double v = 0.0;
    if (!(fields >> pauli)) continue;
    if (!(fields >> v)) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing coefficient");
    const PauliKey key = PauliKey::from_string(pauli);
    if (!obs) obs.emplace(key.num_qubits());
    if (key.num_qubits() != obs->num_qubits()) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": inconsistent qubit count");
    }
    obs->add(key, v);
  }
  if (!obs) throw std::invalid_argument("observable text has no terms");
  return *obs;
}

Json observable_to_json(const SparseObservable& obs) {
  Json out = Json::array();
  for (const auto& [key, v] : obs.sorted_terms()) out.push_back({{"p", key.str()}, {"v", v}});
  return out;
}

SparseObservable observable_from_json(const Json& doc) {
  if (!doc.is_array() || doc.empty()) throw std::invalid_argument("observable JSON must be a non-empty array");
  std::optional<SparseObservable> obs;
  for (const Json& term : doc) {
    const PauliKey key = PauliKey::from_string(term.at("p").get<std::string>());
    if (!obs) obs.emplace(key.num_qubits());
    if (key.num_qubits() != obs->num_qubits()) throw std::invalid_argument("inconsistent qubit count");
    obs->add(key, term.at("v").get<double>());
  }
  return *obs;
}

std::string profile_to_csv(const RankProfile& profile) {
  std::ostringstream os;
  os << "step,gate_kind,chi,pruned_mass,micros\n";
  for (const StepRecord& s : profile.steps) {
    os << s.gate_index << ',' << s.gate_kind << ',' << s.chi << ',' << format_double(s.pruned_mass) << ','
       << std::fixed << std::setprecision(3) << s.micros << std::defaultfloat << '\n';
  }
  return os.str();
}

Json result_to_json(const ExpectationResult& result) {
  return {
      {"format", kFormatVersion},
      {"value", result.value},
      {"chi_total", result.profile.chi_total},
      {"max_chi", result.profile.max_chi},
      {"pruned_mass_total", result.profile.pruned_mass_total},
      {"state_chi_total", result.state_profile.chi_total},
      {"cut", result.cut},
      {"elapsed", result.elapsed_seconds},
  };
}

}  // namespace mgzz::io
