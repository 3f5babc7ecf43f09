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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mgzz/builders.hpp"
#include "mgzz/circuit.hpp"
#include "mgzz/sparse_observable.hpp"

namespace mgzz::cli {

/// Runs one command; args exclude the program name. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "zeros", "bits:0110" or "bloch:[[x,y,z],...]".
ProductState parse_state(std::string_view spec, unsigned num_qubits);

/// "fh:n_sites=5,T=3,sites=1+2", "brickwall:n=6,depth=8",
/// "random:n=6,N=40,m=2,placement=layered,kind=mixed" or "givens:n=6,q=2".
Circuit build_from_spec(std::string_view spec, std::uint64_t seed);

FHParams parse_fh_spec(std::string_view body, std::uint64_t seed);

}  // namespace mgzz::cli
