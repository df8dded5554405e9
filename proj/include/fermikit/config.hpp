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

#ifndef FERMIKIT_CONFIG_HPP
#define FERMIKIT_CONFIG_HPP

#include <cstddef>

namespace fermikit {

// Process-wide knobs. Set them once at startup; exceeding a cap is a hard
// error (DomainError), never a silent truncation.

/// Maximum number of modes in a ModeSet (dense 2^n matrices). Default 16.
std::size_t max_modes();
void set_max_modes(std::size_t n);

/// Maximum number of modes for superoperator-level work (dense 4^n
/// matrices). Default 7, enforced separately from the operator-level cap.
std::size_t max_map_modes();
void set_max_map_modes(std::size_t n);

/// Default entrywise absolute tolerance for numeric equality (1e-10).
double tolerance();
void set_tolerance(double tol);

}  // namespace fermikit

#endif
