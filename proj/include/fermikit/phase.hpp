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

#ifndef FERMIKIT_PHASE_HPP
#define FERMIKIT_PHASE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fermikit/modes.hpp"

namespace fermikit {

/// Exact sign, +1 or -1. Never a float.
struct Sign {
    int value = +1;

    static constexpr Sign from_parity(unsigned parity_bit) {
        return Sign{(parity_bit & 1u) ? -1 : +1};
    }
    constexpr Sign operator*(Sign other) const { return Sign{value * other.value}; }
    friend constexpr bool operator==(Sign, Sign) = default;
};

// The four +-1 phase-factor kernels. All of them are computed with integer
// bit arithmetic over occupation patterns; positions are counted inside the
// partitioned set in increasing label order.
//
//   f_Y[nu,nu']      = (-1)^{sum_{i in Y} nu'_i sum_{k in Y, i<k} (nu_k + nu'_k)}
//   h_xi[nu,nu']     = cross-block part of the same double sum
//   l_ordxi[nu,nu']  = (-1)^{sum over pairs i in X_r, k in X_s, s<r, i<k of
//                      (nu_i+nu'_i)(nu_k+nu'_k)}
//   u_ordxi[nu]      = same pair set, with nu_i nu_k
//
// Mode subsets of a partition are identified by the block of each position;
// empty sums give +1 (empty ModeSet, single-block partitions).

Sign phase_f(const ModeSet& y, const OccPattern& nu, const OccPattern& nu_prime);
Sign phase_h(const Partition& xi, const OccPattern& nu, const OccPattern& nu_prime);
Sign phase_l(const OrderedPartition& xi, const OccPattern& nu, const OccPattern& nu_prime);
Sign phase_u(const OrderedPartition& xi, const OccPattern& nu);

/// f on packed pattern bits (bit layout of pattern_index), n = |Y|.
Sign phase_f_bits(std::size_t n, std::uint32_t nu, std::uint32_t nu_prime);

/// Rank of each position of the ground set within an ordered partition:
/// rank[p] = 1 + tuple index of the part containing the p-th smallest label.
/// For an unordered Partition the same array serves as a block id.
std::vector<unsigned> position_ranks(const Partition& xi);
std::vector<unsigned> position_ranks(const OrderedPartition& xi);

Sign phase_h_bits(const std::vector<unsigned>& block, std::uint32_t nu, std::uint32_t nu_prime);
Sign phase_l_bits(const std::vector<unsigned>& rank, std::uint32_t nu, std::uint32_t nu_prime);
Sign phase_u_bits(const std::vector<unsigned>& rank, std::uint32_t nu);

enum class TableKind { f, h, l, u };

/// A fully evaluated sign table in the lexicographic index order of module
/// modes: a 2^n x 2^n matrix for f/h/l, a length-2^n row for u.
struct SignTable {
    TableKind kind;
    std::string argument;     // textual ModeSet / (Ordered)Partition
    std::size_t dim = 1;      // 2^n
    std::vector<int> entries; // dim*dim for f/h/l, dim for u; each +-1

    bool is_row() const { return kind == TableKind::u; }
    int at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }

    /// Rows of space-separated "+"/"-" glyphs.
    std::string to_glyphs() const;

    /// Comma-separated integer rows.
    std::string to_csv() const;
};

SignTable emit_table_f(const ModeSet& y);
SignTable emit_table_h(const Partition& xi);
SignTable emit_table_l(const OrderedPartition& xi);
SignTable emit_table_u(const OrderedPartition& xi);

}  // namespace fermikit

#endif
