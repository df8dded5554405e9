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

#ifndef FERMIKIT_ERRORS_HPP
#define FERMIKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fermikit {

/// Base class of all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mode labels or mode sets outside the expected domain (wrong subset,
/// duplicate labels, cap exceeded, pattern on the wrong ModeSet).
struct DomainError : Error {
    using Error::Error;
};

/// Parts overlap, are empty, or do not cover the partitioned set.
struct PartitionError : Error {
    using Error::Error;
};

/// Matrix dimensions incompatible with the tagged ModeSet.
struct ShapeError : Error {
    using Error::Error;
};

/// Parity sector assignment inconsistent with the partition.
struct SectorError : Error {
    using Error::Error;
};

/// Input claimed to be a density matrix but violates its invariants.
struct StateError : Error {
    using Error::Error;
};

/// Operand violates a precondition (non-Hermitian, zero operator, ...).
struct InputError : Error {
    using Error::Error;
};

}  // namespace fermikit

#endif
