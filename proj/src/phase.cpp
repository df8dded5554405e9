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

#include "fermikit/phase.hpp"

#include <sstream>

namespace fermikit {

namespace {

inline unsigned bit_at(std::uint32_t bits, std::size_t n, std::size_t p) {
    return (bits >> (n - 1 - p)) & 1u;
}

void require_same_domain(const ModeSet& y, const OccPattern& nu, const OccPattern& nup) {
    if (nu.domain() != y || nup.domain() != y) {
        throw DomainError("patterns must live on " + y.to_string());
    }
}

template <typename P>
std::vector<unsigned> ranks_of(const P& xi) {
    const ModeSet& y = xi.ground_set();
    std::vector<unsigned> rank(y.size(), 0);
    for (std::size_t k = 0; k < xi.size(); ++k) {
        for (ModeLabel i : xi.part(k)) {
            rank[y.position(i)] = static_cast<unsigned>(k + 1);
        }
    }
    return rank;
}

}  // namespace

Sign phase_f_bits(std::size_t n, std::uint32_t nu, std::uint32_t nup) {
    // Walk positions from the largest label down, keeping the running parity
    // of sum_{k>p} (nu_k + nu'_k).
    unsigned acc = 0;
    unsigned suffix = 0;
    for (std::size_t p = n; p-- > 0;) {
        acc ^= bit_at(nup, n, p) & suffix;
        suffix ^= bit_at(nu, n, p) ^ bit_at(nup, n, p);
    }
    return Sign::from_parity(acc);
}

Sign phase_h_bits(const std::vector<unsigned>& block, std::uint32_t nu, std::uint32_t nup) {
    const std::size_t n = block.size();
    unsigned acc = 0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (block[p] == block[q]) continue;
            acc ^= bit_at(nup, n, p) & (bit_at(nu, n, q) ^ bit_at(nup, n, q));
        }
    }
    return Sign::from_parity(acc);
}

Sign phase_l_bits(const std::vector<unsigned>& rank, std::uint32_t nu, std::uint32_t nup) {
    const std::size_t n = rank.size();
    unsigned acc = 0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (rank[p] <= rank[q]) continue;  // counts pairs with the later part first
            acc ^= (bit_at(nu, n, p) ^ bit_at(nup, n, p)) & (bit_at(nu, n, q) ^ bit_at(nup, n, q));
        }
    }
    return Sign::from_parity(acc);
}

Sign phase_u_bits(const std::vector<unsigned>& rank, std::uint32_t nu) {
    const std::size_t n = rank.size();
    unsigned acc = 0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (rank[p] <= rank[q]) continue;
            acc ^= bit_at(nu, n, p) & bit_at(nu, n, q);
        }
    }
    return Sign::from_parity(acc);
}

std::vector<unsigned> position_ranks(const Partition& xi) { return ranks_of(xi); }
std::vector<unsigned> position_ranks(const OrderedPartition& xi) { return ranks_of(xi); }

Sign phase_f(const ModeSet& y, const OccPattern& nu, const OccPattern& nup) {
    require_same_domain(y, nu, nup);
    return phase_f_bits(y.size(), nu.index_bits(), nup.index_bits());
}

Sign phase_h(const Partition& xi, const OccPattern& nu, const OccPattern& nup) {
    if (!validate_partition(nu.domain(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + nu.domain().to_string());
    }
    require_same_domain(xi.ground_set(), nu, nup);
    return phase_h_bits(position_ranks(xi), nu.index_bits(), nup.index_bits());
}

Sign phase_l(const OrderedPartition& xi, const OccPattern& nu, const OccPattern& nup) {
    if (!validate_partition(nu.domain(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + nu.domain().to_string());
    }
    require_same_domain(xi.ground_set(), nu, nup);
    return phase_l_bits(position_ranks(xi), nu.index_bits(), nup.index_bits());
}

Sign phase_u(const OrderedPartition& xi, const OccPattern& nu) {
    if (!validate_partition(nu.domain(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + nu.domain().to_string());
    }
    return phase_u_bits(position_ranks(xi), nu.index_bits());
}

namespace {

SignTable matrix_table(TableKind kind, std::string argument, std::size_t n,
                       const std::vector<unsigned>& rank_or_block) {
    SignTable table{kind, std::move(argument), std::size_t{1} << n, {}};
    table.entries.resize(table.dim * table.dim);
    for (std::size_t r = 0; r < table.dim; ++r) {
        for (std::size_t c = 0; c < table.dim; ++c) {
            Sign s{+1};
            auto nu = static_cast<std::uint32_t>(r);
            auto nup = static_cast<std::uint32_t>(c);
            switch (kind) {
                case TableKind::f: s = phase_f_bits(n, nu, nup); break;
                case TableKind::h: s = phase_h_bits(rank_or_block, nu, nup); break;
                case TableKind::l: s = phase_l_bits(rank_or_block, nu, nup); break;
                case TableKind::u: break;
            }
            table.entries[r * table.dim + c] = s.value;
        }
    }
    return table;
}

}  // namespace

SignTable emit_table_f(const ModeSet& y) {
    return matrix_table(TableKind::f, y.to_string(), y.size(), {});
}

SignTable emit_table_h(const Partition& xi) {
    return matrix_table(TableKind::h, xi.to_string(), xi.ground_set().size(), position_ranks(xi));
}

SignTable emit_table_l(const OrderedPartition& xi) {
    return matrix_table(TableKind::l, xi.to_string(), xi.ground_set().size(), position_ranks(xi));
}

SignTable emit_table_u(const OrderedPartition& xi) {
    const std::size_t n = xi.ground_set().size();
    SignTable table{TableKind::u, xi.to_string(), std::size_t{1} << n, {}};
    auto rank = position_ranks(xi);
    table.entries.resize(table.dim);
    for (std::size_t r = 0; r < table.dim; ++r) {
        table.entries[r] = phase_u_bits(rank, static_cast<std::uint32_t>(r)).value;
    }
    return table;
}

std::string SignTable::to_glyphs() const {
    std::ostringstream out;
    const std::size_t rows = is_row() ? 1 : dim;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (c) out << ' ';
            out << (entries[r * dim + c] > 0 ? '+' : '-');
        }
        out << '\n';
    }
    return out.str();
}

std::string SignTable::to_csv() const {
    std::ostringstream out;
    const std::size_t rows = is_row() ? 1 : dim;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (c) out << ',';
            out << entries[r * dim + c];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace fermikit
