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

#ifndef FERMIKIT_CHECK_HPP
#define FERMIKIT_CHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fermikit {

// Named invariant suites executing the identities behind every module:
//   car     canonical anticommutation relations, exact
//   phi     basis transformation Phi, f kernels, fermionic basis products
//   tensor  fermionic tensor product, embeddings, associativity
//   lambda  Lambda map, pairwise factorization, special partitions
//   ptrace  fermionic partial trace against both independent oracles
//   parity  commutation structure, parity preservation, sectors
//   tps     tensor product structure of the locally physical subalgebra
//   prodext self-adjointness/positivity of product extensions
//   maps    products/embeddings of maps, channels, locality

struct CheckOptions {
    std::size_t max_modes = 4;
    std::uint64_t seed = 7;
    std::size_t trials = 50;
    double tol = 1e-10;
};

struct InvariantResult {
    std::string name;
    bool pass = true;
    double max_residual = 0.0;
    std::size_t cases = 0;
    std::string counterexample;  // empty unless failed
};

struct SuiteReport {
    std::string suite;
    std::vector<InvariantResult> invariants;

    bool pass() const;
    double max_residual() const;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const CheckOptions& options);
std::vector<SuiteReport> run_all_suites(const CheckOptions& options);

nlohmann::json report_to_json(const std::vector<SuiteReport>& reports, const CheckOptions& options);

}  // namespace fermikit

#endif
