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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "mgzz/bounds.hpp"
#include "mgzz/builders.hpp"
#include "mgzz/dense_oracle.hpp"
#include "mgzz/engine.hpp"
#include "mgzz/rotation.hpp"
#include "mgzz/serialization.hpp"

namespace py = pybind11;
using namespace mgzz;

namespace {

py::dict terms_dict(const SparseObservable& obs) {
  py::dict out;
  for (const auto& [key, v] : obs.sorted_terms()) out[py::str(key.str())] = v;
  return out;
}

SparseObservable observable_from_dict(const std::map<std::string, double>& terms) {
  if (terms.empty()) throw std::invalid_argument("observable needs at least one term");
  std::optional<SparseObservable> obs;
  for (const auto& [text, v] : terms) {
    const PauliKey key = PauliKey::from_string(text);
    if (!obs) obs.emplace(key.num_qubits());
    if (key.num_qubits() != obs->num_qubits()) throw std::invalid_argument("inconsistent qubit count");
    obs->add(key, v);
  }
  return *obs;
}

py::dict profile_dict(const RankProfile& p) {
  py::list steps;
  for (const StepRecord& s : p.steps) {
    steps.append(py::dict(py::arg("gate_index") = s.gate_index, py::arg("gate_kind") = s.gate_kind,
                          py::arg("chi") = s.chi, py::arg("pruned_mass") = s.pruned_mass,
                          py::arg("micros") = s.micros));
  }
  return py::dict(py::arg("chi_total") = p.chi_total, py::arg("max_chi") = p.max_chi,
                  py::arg("pruned_mass_total") = p.pruned_mass_total, py::arg("steps") = steps);
}

EngineConfig make_config(double epsilon, const std::string& mode, std::optional<std::size_t> cut, bool parallel,
                         unsigned threads) {
  EngineConfig cfg;
  cfg.epsilon = epsilon;
  if (mode == "heisenberg") {
    cfg.mode = Mode::Heisenberg;
  } else if (mode == "interaction") {
    cfg.mode = Mode::InteractionPicture;
  } else {
    throw std::invalid_argument("mode must be 'heisenberg' or 'interaction'");
  }
  cfg.cut = cut;
  cfg.parallel = parallel;
  cfg.threads = threads;
  return cfg;
}

ProductState state_from_python(const py::object& spec, unsigned n) {
  if (spec.is_none()) return ProductState::zeros(n);
  if (py::isinstance<ProductState>(spec)) return spec.cast<ProductState>();
  if (py::isinstance<py::str>(spec)) return ProductState::from_bits(spec.cast<std::string>());
  std::vector<BlochVector> qubits;
  for (const auto& v : spec.cast<std::vector<std::array<double, 3>>>()) qubits.push_back({v[0], v[1], v[2]});
  return ProductState(std::move(qubits));
}

Circuit& append(Circuit& c, Gate g) {
  c.append(std::move(g));
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse Pauli-basis simulation of matchgate circuits with a few parity-preserving non-matchgates";

  py::class_<PauliKey>(m, "PauliKey")
      .def(py::init(&PauliKey::from_string), py::arg("text"))
      .def_property_readonly("num_qubits", &PauliKey::num_qubits)
      .def_property_readonly("code", &PauliKey::code)
      .def_property_readonly("weight", &PauliKey::weight)
      .def_property_readonly("majorana_degree", [](const PauliKey& k) { return majorana_degree(k); })
      .def("commutes", [](const PauliKey& a, const PauliKey& b) { return commutes(a, b); })
      .def("__mul__",
           [](const PauliKey& a, const PauliKey& b) {
             const PhasedPauli p = multiply(a, b);
             return py::make_tuple(p.phase_exp, p.key);
           })
      .def("__str__", &PauliKey::str)
      .def("__repr__", [](const PauliKey& k) { return "PauliKey('" + k.str() + "')"; })
      .def("__eq__", [](const PauliKey& a, const PauliKey& b) { return a == b; })
      .def("__hash__", [](const PauliKey& k) { return std::hash<std::uint64_t>{}(k.code()); });

  py::class_<ProductState>(m, "ProductState")
      .def(py::init([](const std::vector<std::array<double, 3>>& bloch) {
             return state_from_python(py::cast(bloch), static_cast<unsigned>(bloch.size()));
           }),
           py::arg("bloch"))
      .def_static("zeros", &ProductState::zeros, py::arg("num_qubits"))
      .def_static("from_bits", &ProductState::from_bits, py::arg("bits"))
      .def_property_readonly("num_qubits", &ProductState::num_qubits)
      .def("bloch", [](const ProductState& s) {
        std::vector<std::array<double, 3>> out;
        for (const BlochVector& b : s.qubits()) out.push_back({b.x, b.y, b.z});
        return out;
      });

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<unsigned>(), py::arg("num_qubits"))
      .def_property_readonly("num_qubits", &Circuit::num_qubits)
      .def_property_readonly("zz_count", &Circuit::zz_count)
      .def("__len__", &Circuit::size)
      .def("swap", [](Circuit& c, unsigned a, unsigned b) -> Circuit& {
        return append(c, NamedGate{NamedKind::Swap, {a, b}, {}});
      }, py::return_value_policy::reference_internal)
      .def("cz", [](Circuit& c, unsigned a, unsigned b) -> Circuit& {
        return append(c, NamedGate{NamedKind::CZ, {a, b}, {}});
      }, py::return_value_policy::reference_internal)
      .def("cphase", [](Circuit& c, unsigned a, unsigned b, double theta) -> Circuit& {
        return append(c, NamedGate{NamedKind::CPhase, {a, b}, {theta}});
      }, py::return_value_policy::reference_internal)
      .def("givens", [](Circuit& c, unsigned j, double theta) -> Circuit& {
        return append(c, NamedGate{NamedKind::Givens, {j, j + 1}, {theta}});
      }, py::return_value_policy::reference_internal)
      .def("rz", [](Circuit& c, unsigned q, double theta) -> Circuit& {
        return append(c, NamedGate{NamedKind::Rz, {q}, {theta}});
      }, py::return_value_policy::reference_internal)
      .def("ry", [](Circuit& c, unsigned q, double theta) -> Circuit& {
        return append(c, NamedGate{NamedKind::Ry, {q}, {theta}});
      }, py::return_value_policy::reference_internal)
      .def("matchgate", [](Circuit& c, unsigned j, const std::vector<double>& params) -> Circuit& {
        return append(c, NamedGate{NamedKind::MatchgateKak, {j, j + 1}, params});
      }, py::arg("first"), py::arg("params"), py::return_value_policy::reference_internal)
      .def("pauli_exp", [](Circuit& c, const std::string& pauli, double phi) -> Circuit& {
        return append(c, PauliExp{PauliKey::from_string(pauli), phi});
      }, py::arg("pauli"), py::arg("phi"), py::return_value_policy::reference_internal)
      .def("unitary", [](Circuit& c, unsigned j, const Matrix4c& u) -> Circuit& {
        return append(c, NNUnitary{u, j});
      }, py::arg("first"), py::arg("matrix"), py::return_value_policy::reference_internal)
      .def("to_json", [](const Circuit& c) { return io::circuit_to_json(c).dump(); })
      .def_static("from_json", [](const std::string& text) { return io::circuit_from_json(io::Json::parse(text)); });

  m.def(
      "expectation",
      [](const Circuit& c, unsigned qubit, const py::object& state, double epsilon, const std::string& mode,
         std::optional<std::size_t> cut, bool parallel, unsigned threads) {
        const ProductState s = state_from_python(state, c.num_qubits());
        ExpectationResult r;
        {
          py::gil_scoped_release release;
          r = Engine(make_config(epsilon, mode, cut, parallel, threads)).expectation(c, qubit, s);
        }
        return py::dict(py::arg("value") = r.value, py::arg("cut") = r.cut,
                        py::arg("elapsed") = r.elapsed_seconds, py::arg("profile") = profile_dict(r.profile),
                        py::arg("state_profile") = profile_dict(r.state_profile));
      },
      py::arg("circuit"), py::arg("qubit"), py::arg("state") = py::none(), py::arg("epsilon") = 0.0,
      py::arg("mode") = "heisenberg", py::arg("cut") = py::none(), py::arg("parallel") = false,
      py::arg("threads") = 0u, "<Z_qubit> after the circuit on a product state.");

  m.def(
      "conjugate",
      [](const Circuit& c, const std::map<std::string, double>& observable, double epsilon) {
        EngineConfig cfg;
        cfg.epsilon = epsilon;
        const PropagationResult r = conjugate_through(c, observable_from_dict(observable), cfg);
        return py::make_tuple(terms_dict(r.observable), profile_dict(r.profile));
      },
      py::arg("circuit"), py::arg("observable"), py::arg("epsilon") = 0.0,
      "U^dag M U as a {pauli: coefficient} dict, plus the rank profile.");

  m.def("rotation_table", [](const Matrix4c& u) { return rotations(u).full(); }, py::arg("matrix"),
        "16x16 orthogonal action of a two-qubit unitary on the graded Pauli basis.");

  m.def("brickwall", &brickwall_matchgates, py::arg("n"), py::arg("depth"), py::arg("seed") = 0);
  m.def(
      "random_circuit",
      [](unsigned n, std::size_t gates, std::size_t zz, const std::string& placement, std::uint64_t seed,
         const std::string& kind) {
        if (placement != "random" && placement != "layered") throw std::invalid_argument("placement: random|layered");
        ZZKind k = ZZKind::ZZExp;
        if (kind == "mixed") {
          k = ZZKind::Mixed;
        } else if (kind == "long_range") {
          k = ZZKind::MixedLongRange;
        } else if (kind != "zz") {
          throw std::invalid_argument("kind: zz|mixed|long_range");
        }
        return random_mgzz(n, gates, zz, placement == "layered" ? Placement::Layered : Placement::Random, seed, k);
      },
      py::arg("n"), py::arg("gates"), py::arg("zz"), py::arg("placement") = "random", py::arg("seed") = 0,
      py::arg("kind") = "zz");
  m.def("givens_ladder", &givens_ladder, py::arg("n"), py::arg("chains"), py::arg("seed") = 0);
  m.def(
      "fermi_hubbard",
      [](unsigned sites, unsigned steps, double hopping, double onsite, double dt,
         const std::vector<unsigned>& interaction_sites, unsigned fermions, std::uint64_t seed) {
        FHParams p{sites, steps, hopping, onsite, dt, interaction_sites, fermions, seed};
        return py::make_tuple(fermi_hubbard_trotter(p), fermi_hubbard_reference(p), trotter_gate_count(p));
      },
      py::arg("sites"), py::arg("steps"), py::arg("hopping") = 1.0, py::arg("onsite") = 1.0, py::arg("dt") = 0.1,
      py::arg("interaction_sites") = std::vector<unsigned>{1}, py::arg("fermions") = 1u, py::arg("seed") = 0,
      "(circuit, reference state, normalising gate count) for a Trotterised Fermi-Hubbard chain.");

  py::module_ dense = m.def_submodule("dense", "Exact statevector reference");
  dense.def(
      "expectation",
      [](const Circuit& c, unsigned qubit, const py::object& state) {
        return dense::statevector_expectation(c, state_from_python(state, c.num_qubits()), qubit);
      },
      py::arg("circuit"), py::arg("qubit"), py::arg("state") = py::none());
  dense.def(
      "conjugate",
      [](const Circuit& c, const std::map<std::string, double>& observable) {
        return terms_dict(dense::pauli_conjugation_decompose(c, observable_from_dict(observable)));
      },
      py::arg("circuit"), py::arg("observable"));

  py::module_ b = m.def_submodule("bounds", "Closed-form cost estimates");
  b.def("m_critical", &bounds::m_critical, py::arg("n"));
  b.def("chi_general", &bounds::chi_general, py::arg("n"), py::arg("m"), py::arg("gates"));
  b.def("chi_layered", &bounds::chi_layered, py::arg("n"), py::arg("m"), py::arg("gates"));
  b.def("bound_general", &bounds::bound_general, py::arg("n"), py::arg("m"), py::arg("gates"));
  b.def("bound_layered", &bounds::bound_layered, py::arg("n"), py::arg("m"), py::arg("gates"));
  b.def("bound_exponential", &bounds::bound_exponential, py::arg("n"), py::arg("m"), py::arg("gates"));
  b.def("normal_cdf", &bounds::normal_cdf, py::arg("alpha"));
  b.def("predict_spans", &bounds::predict_spans, py::arg("d"), py::arg("k"), py::arg("overlap"));
}
