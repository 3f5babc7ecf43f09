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

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mgzz/circuit.hpp"
#include "mgzz/engine.hpp"
#include "mgzz/sparse_observable.hpp"

namespace mgzz::io {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::json;

Json gate_to_json(const Gate& gate);
Gate gate_from_json(const Json& record, unsigned num_qubits);

/// {"format": 1, "n": n, "gates": [...]}.
Json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& doc);
Circuit read_circuit(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// One "PAULI coefficient" pair per line, sorted by key; '#' starts a comment.
std::string observable_to_text(const SparseObservable& obs);
SparseObservable observable_from_text(std::string_view text);
/// [{"p": "ZIX", "v": 0.5}, ...].
Json observable_to_json(const SparseObservable& obs);
SparseObservable observable_from_json(const Json& doc);

/// Columns step, gate_kind, chi, pruned_mass, micros.
std::string profile_to_csv(const RankProfile& profile);
Json result_to_json(const ExpectationResult& result);

}  // namespace mgzz::io
