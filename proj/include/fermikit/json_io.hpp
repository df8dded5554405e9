// Copyright 2026 The Fermikit Authors
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

#ifndef FERMIKIT_JSON_IO_HPP
#define FERMIKIT_JSON_IO_HPP

#include <json.hpp>

#include "fermikit/parity.hpp"
#include "fermikit/phase.hpp"
#include "fermikit/states.hpp"
#include "fermikit/superop.hpp"

namespace fermikit {

using Json = nlohmann::json;

/// Rounds to 12 significant digits; all numeric output goes through this so
/// reports are byte-stable and compact.
double round12(double value);

// Operator JSON: {"modes":[...], "re":[[...]], "im":[[...]]}. A "density"
// flag marks density matrices (triggers invariant validation on read via
// read_density); SuperOps mirror the format with "super": true and an
// optional "modes_out" when the map changes ModeSet.

Json to_json(const Operator& op);
Json to_json(const Operator& op, bool density);
Operator operator_from_json(const Json& j);
DensityMatrix density_from_json(const Json& j, double tol);

Json to_json(const SuperOp& op);
SuperOp superop_from_json(const Json& j);

Json to_json(const StateVector& v);
StateVector statevector_from_json(const Json& j);

Json to_json(const SignTable& table);

/// True if the JSON value carries the corresponding flag / layout.
bool json_is_density(const Json& j);
bool json_is_super(const Json& j);
bool json_is_vector(const Json& j);

}  // namespace fermikit

#endif
