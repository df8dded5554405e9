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

#include <doctest.h>

#include <random>

#include "fermikit/modes.hpp"

using namespace fermikit;

TEST_CASE("pattern_index follows the lexicographic convention") {
    // Smallest mode label is the most significant bit.
    const ModeSet y12{1, 2};
    CHECK(pattern_index(y12, OccPattern::parse(y12, "10")) == 2);

    const ModeSet y25{2, 5};
    OccPattern nu = OccPattern::parse(y25, "01");  // nu_2 = 0, nu_5 = 1
    CHECK(nu.bit(2) == 0);
    CHECK(nu.bit(5) == 1);
    CHECK(pattern_index(y25, nu) == 1);

    const ModeSet empty{};
    CHECK(pattern_index(empty, index_pattern(empty, 0)) == 0);
    CHECK(empty.dim() == 1);
}

TEST_CASE("index_pattern round-trips") {
    // Exhaustive up to 6 modes, randomized (non-contiguous labels) above.
    for (std::size_t n = 0; n <= 6; ++n) {
        const ModeSet y = n == 0 ? ModeSet{} : ModeSet::range(1, static_cast<ModeLabel>(n));
        for (std::size_t k = 0; k < y.dim(); ++k) {
            CHECK(pattern_index(y, index_pattern(y, k)) == k);
        }
    }
    std::mt19937_64 gen(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<ModeLabel> labels;
        for (ModeLabel i = 1; i <= 24; ++i) {
            if (gen() % 3 == 0 && labels.size() < 10) labels.push_back(i);
        }
        if (labels.empty()) labels.push_back(1);
        const ModeSet y(labels);
        const std::size_t k = gen() % y.dim();
        CHECK(pattern_index(y, index_pattern(y, k)) == k);
    }
}

TEST_CASE("restrict agrees with the defining examples") {
    const ModeSet y{1, 2, 3};
    const OccPattern nu = OccPattern::parse(y, "011");
    CHECK(restrict_pattern(nu, ModeSet{1, 3}).to_string() == "01");
    CHECK(restrict_pattern(nu, y) == nu);
    CHECK(restrict_pattern(nu, ModeSet{}).domain().empty());
    CHECK_THROWS_AS(restrict_pattern(nu, ModeSet{4}), DomainError);
}

TEST_CASE("restriction is transitive") {
    std::mt19937_64 gen(5);
    for (int t = 0; t < 100; ++t) {
        const ModeSet y{1, 2, 4, 7, 9};
        std::vector<ModeLabel> mid_labels, inner_labels;
        for (ModeLabel i : y) {
            if (gen() % 2) mid_labels.push_back(i);
        }
        const ModeSet mid(mid_labels);
        for (ModeLabel i : mid) {
            if (gen() % 2) inner_labels.push_back(i);
        }
        const ModeSet inner(inner_labels);
        const OccPattern nu = index_pattern(y, gen() % y.dim());
        CHECK(restrict_pattern(restrict_pattern(nu, mid), inner) == restrict_pattern(nu, inner));
    }
}

TEST_CASE("validate_partition") {
    const ModeSet y{1, 2, 3};
    CHECK(validate_partition(y, Partition{ModeSet{1, 3}, ModeSet{2}}));
    CHECK_FALSE(validate_partition(y, Partition{ModeSet{1}, ModeSet{2}}));
    CHECK_THROWS_AS(Partition(std::vector<ModeSet>{ModeSet{1, 2}, ModeSet{2}}), PartitionError);
    CHECK_THROWS_AS(Partition(std::vector<ModeSet>{ModeSet{1}, ModeSet{}}), PartitionError);
}

TEST_CASE("mode set invariants and parsing") {
    CHECK(ModeSet::parse("{1,3,4}") == ModeSet{1, 3, 4});
    CHECK(ModeSet::parse("{ }").empty());
    CHECK(ModeSet::parse("{2, 5, 9}").to_string() == "{2,5,9}");
    CHECK_THROWS_AS(ModeSet::parse("{0}"), DomainError);
    CHECK_THROWS_AS(ModeSet({1, 1}), DomainError);
    CHECK_THROWS_AS(ModeSet::range(1, 17), DomainError);  // default cap is 16

    const Partition xi = Partition::parse("{2}|{1,3}");
    CHECK(xi.part(0) == ModeSet{1, 3});  // canonical order by smallest label
    CHECK(xi.to_string() == "{1,3}|{2}");

    const OrderedPartition ord = OrderedPartition::parse("{2}|{1,3}");
    CHECK(ord.part(0) == ModeSet{2});  // tuple order preserved
    CHECK(ord.unordered() == xi);
}

TEST_CASE("scatter and restrict bits are inverse on positions") {
    const ModeSet y{1, 2, 5, 8};
    const ModeSet x{2, 8};
    const auto pos = positions_in(y, x);
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        CHECK(restrict_bits(scatter_bits(bits, y.size(), pos), y.size(), pos) == bits);
    }
}
