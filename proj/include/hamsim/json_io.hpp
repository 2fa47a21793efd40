// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encoding shared by the CLI. Complex numbers are [re, im] pairs and
// matrices are row-major nested arrays. A Hamiltonian is either
//   {"matrix": [[[re, im], ...], ...]}
// or
//   {"pauli": {"a": r, "m": [r, r, r], "n": [r, r, r], "h": [[r, r, r], ...]}}

#pragma once

#include <string>

#include <json.hpp>

#include "hamsim/protocol.hpp"
#include "hamsim/trotter.hpp"

namespace hamsim::json_io {

using json = nlohmann::json;

CMat matrix_from_json(const json& j, const std::string& where);
json matrix_to_json(const CMat& m);

Vec3 vec3_from_json(const json& j, const std::string& where);
json vec_to_json(const Eigen::VectorXd& v);

/// Accepts either schema; the matrix form must be 4x4 and Hermitian.
PauliHamiltonian hamiltonian_from_json(const json& j, const std::string& where);
json hamiltonian_to_json(const PauliHamiltonian& p);

json canonical_form_to_json(const CanonicalForm& c);

json protocol_to_json(const SimulationProtocol& p);
SimulationProtocol protocol_from_json(const json& j);

json trotter_to_json(const TrotterReport& r);

/// Deterministic serialization: sorted keys, doubles printed with 17
/// significant digits, non-finite doubles as null.
std::string dump(const json& j);

}  // namespace hamsim::json_io
