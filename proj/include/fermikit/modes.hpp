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

#ifndef FERMIKIT_MODES_HPP
#define FERMIKIT_MODES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "fermikit/errors.hpp"

namespace fermikit {

/// Global Jordan-Wigner position of a mode, 1-based. The global ordering of
/// modes is the numeric ordering of labels.
using ModeLabel = std::uint32_t;

/// A subsystem Y: strictly increasing labels, possibly empty, possibly
/// non-contiguous ({2,5,9} is legal). Value type, compared by content.
class ModeSet {
  public:
    ModeSet() = default;
    explicit ModeSet(std::vector<ModeLabel> labels);
    ModeSet(std::initializer_list<ModeLabel> labels);

    /// Contiguous set {first, first+1, ..., last}.
    static ModeSet range(ModeLabel first, ModeLabel last);

    /// Parses "{1,3,4}" (whitespace tolerated, "{}" is the empty set).
    static ModeSet parse(std::string_view text);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    /// 2^|Y|, the dimension of the occupation space.
    std::size_t dim() const { return std::size_t{1} << labels_.size(); }

    bool contains(ModeLabel i) const;
    bool contains_all(const ModeSet& other) const;
    bool disjoint_from(const ModeSet& other) const;

    /// Index of label i within this set, counted from the smallest label.
    std::size_t position(ModeLabel i) const;
    ModeLabel label_at(std::size_t pos) const { return labels_.at(pos); }

    ModeSet set_union(const ModeSet& other) const;
    ModeSet set_difference(const ModeSet& other) const;

    const std::vector<ModeLabel>& labels() const { return labels_; }
    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

    std::string to_string() const;

    friend bool operator==(const ModeSet&, const ModeSet&) = default;

  private:
    std::vector<ModeLabel> labels_;
};

/// Occupation bit-pattern nu: Y -> {0,1}. Stored packed so that the smallest
/// mode label is the most significant bit; the packed value therefore equals
/// pattern_index(nu) directly.
class OccPattern {
  public:
    OccPattern(ModeSet domain, std::uint32_t index_bits);

    /// Parses a bitstring like "011", read in increasing-label order.
    static OccPattern parse(const ModeSet& domain, std::string_view bits);

    const ModeSet& domain() const { return domain_; }
    std::uint32_t index_bits() const { return bits_; }

    /// Occupation of mode i (DomainError if i is not in the domain).
    int bit(ModeLabel i) const;
    int bit_at_position(std::size_t pos) const;

    /// Number of occupied modes.
    unsigned weight() const;

    std::string to_string() const;

    friend bool operator==(const OccPattern&, const OccPattern&) = default;

  private:
    ModeSet domain_;
    std::uint32_t bits_ = 0;
};

/// Row/column index of nu in the lexicographic ordering of patterns on Y
/// (smallest label = most significant bit). DomainError if nu lives on a
/// different ModeSet.
std::size_t pattern_index(const ModeSet& y, const OccPattern& nu);

/// Inverse of pattern_index.
OccPattern index_pattern(const ModeSet& y, std::size_t index);

/// Restriction nu|_X for X a subset of nu's domain.
OccPattern restrict_pattern(const OccPattern& nu, const ModeSet& x);

/// Unordered partition xi of some ModeSet: disjoint nonempty parts. Parts
/// are stored sorted by smallest label, so equal partitions compare equal.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<ModeSet> parts);
    Partition(std::initializer_list<ModeSet> parts);

    /// Parses "{1,3}|{2}".
    static Partition parse(std::string_view text);

    std::size_t size() const { return parts_.size(); }
    const std::vector<ModeSet>& parts() const { return parts_; }
    const ModeSet& part(std::size_t k) const { return parts_.at(k); }

    /// Union of the parts.
    const ModeSet& ground_set() const { return ground_; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<ModeSet> parts_;
    ModeSet ground_;
};

/// Ordered partition: same invariants, but the tuple order is semantically
/// significant (it is the order of the factors in ordered products).
class OrderedPartition {
  public:
    OrderedPartition() = default;
    explicit OrderedPartition(std::vector<ModeSet> parts);
    OrderedPartition(std::initializer_list<ModeSet> parts);

    /// Parses "{2}|{1,3}"; tuple order = textual order.
    static OrderedPartition parse(std::string_view text);

    std::size_t size() const { return parts_.size(); }
    const std::vector<ModeSet>& parts() const { return parts_; }
    const ModeSet& part(std::size_t k) const { return parts_.at(k); }
    const ModeSet& ground_set() const { return ground_; }

    /// Forgets the ordering.
    Partition unordered() const;

    std::string to_string() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

  private:
    std::vector<ModeSet> parts_;
    ModeSet ground_;
};

/// True iff the parts are nonempty, pairwise disjoint, and their union is y.
bool validate_partition(const ModeSet& y, const Partition& xi);
bool validate_partition(const ModeSet& y, const OrderedPartition& xi);

/// Positions (within y) of the labels of x; x must be a subset of y.
std::vector<std::size_t> positions_in(const ModeSet& y, const ModeSet& x);

/// Extracts the bits of y-pattern bits at the given positions, packed in
/// position order (first listed position = most significant bit).
std::uint32_t restrict_bits(std::uint32_t bits, std::size_t n_y,
                            const std::vector<std::size_t>& positions);

/// Scatters an x-pattern into a y-pattern (all other positions zero).
std::uint32_t scatter_bits(std::uint32_t bits_x, std::size_t n_y,
                           const std::vector<std::size_t>& positions);

}  // namespace fermikit

#endif
