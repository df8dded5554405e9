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

#include "fermikit/modes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <sstream>

#include "fermikit/config.hpp"

namespace fermikit {

namespace {

std::atomic<std::size_t> g_max_modes{16};
std::atomic<std::size_t> g_max_map_modes{7};
std::atomic<double> g_tolerance{1e-10};

void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

ModeLabel parse_label(std::string_view& s) {
    skip_ws(s);
    ModeLabel value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data()) {
        throw DomainError("expected a mode label in '" + std::string(s) + "'");
    }
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return value;
}

std::vector<ModeSet> parse_parts(std::string_view text) {
    std::vector<ModeSet> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        std::string_view piece = text.substr(start, bar == std::string_view::npos ? bar : bar - start);
        parts.push_back(ModeSet::parse(piece));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return parts;
}

}  // namespace

std::size_t max_modes() { return g_max_modes.load(); }
void set_max_modes(std::size_t n) { g_max_modes.store(n); }
std::size_t max_map_modes() { return g_max_map_modes.load(); }
void set_max_map_modes(std::size_t n) { g_max_map_modes.store(n); }
double tolerance() { return g_tolerance.load(); }
void set_tolerance(double tol) { g_tolerance.store(tol); }

ModeSet::ModeSet(std::vector<ModeLabel> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (labels_[k] < 1) throw DomainError("mode labels are 1-based");
        if (k > 0 && labels_[k] == labels_[k - 1]) {
            throw DomainError("duplicate mode label " + std::to_string(labels_[k]));
        }
    }
    if (labels_.size() > max_modes()) {
        throw DomainError("mode set of size " + std::to_string(labels_.size()) +
                          " exceeds the cap of " + std::to_string(max_modes()));
    }
}

ModeSet::ModeSet(std::initializer_list<ModeLabel> labels)
    : ModeSet(std::vector<ModeLabel>(labels)) {}

ModeSet ModeSet::range(ModeLabel first, ModeLabel last) {
    std::vector<ModeLabel> labels;
    for (ModeLabel i = first; i <= last; ++i) labels.push_back(i);
    return ModeSet(std::move(labels));
}

ModeSet ModeSet::parse(std::string_view text) {
    skip_ws(text);
    if (text.empty() || text.front() != '{') {
        throw DomainError("mode set must start with '{': '" + std::string(text) + "'");
    }
    text.remove_prefix(1);
    std::vector<ModeLabel> labels;
    skip_ws(text);
    if (!text.empty() && text.front() == '}') {
        text.remove_prefix(1);
    } else {
        while (true) {
            labels.push_back(parse_label(text));
            skip_ws(text);
            if (text.empty()) throw DomainError("unterminated mode set");
            char c = text.front();
            text.remove_prefix(1);
            if (c == '}') break;
            if (c != ',') throw DomainError("expected ',' or '}' in mode set");
        }
    }
    skip_ws(text);
    if (!text.empty()) throw DomainError("trailing characters after mode set");
    return ModeSet(std::move(labels));
}

bool ModeSet::contains(ModeLabel i) const {
    return std::binary_search(labels_.begin(), labels_.end(), i);
}

bool ModeSet::contains_all(const ModeSet& other) const {
    return std::includes(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end());
}

bool ModeSet::disjoint_from(const ModeSet& other) const {
    std::size_t a = 0, b = 0;
    while (a < labels_.size() && b < other.labels_.size()) {
        if (labels_[a] == other.labels_[b]) return false;
        if (labels_[a] < other.labels_[b]) ++a; else ++b;
    }
    return true;
}

std::size_t ModeSet::position(ModeLabel i) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), i);
    if (it == labels_.end() || *it != i) {
        throw DomainError("mode " + std::to_string(i) + " not in " + to_string());
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

ModeSet ModeSet::set_union(const ModeSet& other) const {
    std::vector<ModeLabel> merged;
    std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                   std::back_inserter(merged));
    return ModeSet(std::move(merged));
}

ModeSet ModeSet::set_difference(const ModeSet& other) const {
    std::vector<ModeLabel> rest;
    std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                        std::back_inserter(rest));
    return ModeSet(std::move(rest));
}

std::string ModeSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (k) out << ',';
        out << labels_[k];
    }
    out << '}';
    return out.str();
}

OccPattern::OccPattern(ModeSet domain, std::uint32_t index_bits)
    : domain_(std::move(domain)), bits_(index_bits) {
    if (domain_.size() < 32 && bits_ >= (std::uint32_t{1} << domain_.size())) {
        throw DomainError("pattern bits out of range for " + domain_.to_string());
    }
}

OccPattern OccPattern::parse(const ModeSet& domain, std::string_view bits) {
    if (bits.size() != domain.size()) {
        throw DomainError("bitstring length does not match " + domain.to_string());
    }
    std::uint32_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw DomainError("bitstring must be over {0,1}");
        value = (value << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return OccPattern(domain, value);
}

int OccPattern::bit(ModeLabel i) const { return bit_at_position(domain_.position(i)); }

int OccPattern::bit_at_position(std::size_t pos) const {
    return static_cast<int>((bits_ >> (domain_.size() - 1 - pos)) & 1u);
}

unsigned OccPattern::weight() const { return static_cast<unsigned>(std::popcount(bits_)); }

std::string OccPattern::to_string() const {
    std::string out(domain_.size(), '0');
    for (std::size_t p = 0; p < domain_.size(); ++p) {
        out[p] = static_cast<char>('0' + bit_at_position(p));
    }
    return out;
}

std::size_t pattern_index(const ModeSet& y, const OccPattern& nu) {
    if (nu.domain() != y) {
        throw DomainError("pattern on " + nu.domain().to_string() + ", expected " + y.to_string());
    }
    return nu.index_bits();
}

OccPattern index_pattern(const ModeSet& y, std::size_t index) {
    if (index >= y.dim()) {
        throw DomainError("index " + std::to_string(index) + " out of range for " + y.to_string());
    }
    return OccPattern(y, static_cast<std::uint32_t>(index));
}

OccPattern restrict_pattern(const OccPattern& nu, const ModeSet& x) {
    if (!nu.domain().contains_all(x)) {
        throw DomainError(x.to_string() + " is not a subset of " + nu.domain().to_string());
    }
    std::uint32_t bits = 0;
    for (ModeLabel i : x) {
        bits = (bits << 1) | static_cast<std::uint32_t>(nu.bit(i));
    }
    return OccPattern(x, bits);
}

namespace {

std::pair<std::vector<ModeSet>, ModeSet> checked_parts(std::vector<ModeSet> parts, const char* kind) {
    ModeSet ground;
    std::size_t total = 0;
    for (const auto& part : parts) {
        if (part.empty()) throw PartitionError(std::string(kind) + " parts must be nonempty");
        total += part.size();
        ground = ground.set_union(part);
    }
    if (ground.size() != total) throw PartitionError(std::string(kind) + " parts must be disjoint");
    return {std::move(parts), std::move(ground)};
}

}  // namespace

Partition::Partition(std::vector<ModeSet> parts) {
    auto [checked, ground] = checked_parts(std::move(parts), "partition");
    std::sort(checked.begin(), checked.end(), [](const ModeSet& a, const ModeSet& b) {
        return a.label_at(0) < b.label_at(0);
    });
    parts_ = std::move(checked);
    ground_ = std::move(ground);
}

Partition::Partition(std::initializer_list<ModeSet> parts)
    : Partition(std::vector<ModeSet>(parts)) {}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out << '|';
        out << parts_[k].to_string();
    }
    return out.str();
}

OrderedPartition::OrderedPartition(std::vector<ModeSet> parts) {
    auto [checked, ground] = checked_parts(std::move(parts), "ordered partition");
    parts_ = std::move(checked);
    ground_ = std::move(ground);
}

OrderedPartition::OrderedPartition(std::initializer_list<ModeSet> parts)
    : OrderedPartition(std::vector<ModeSet>(parts)) {}

OrderedPartition OrderedPartition::parse(std::string_view text) {
    return OrderedPartition(parse_parts(text));
}

Partition OrderedPartition::unordered() const { return Partition(parts_); }

std::string OrderedPartition::to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out << '|';
        out << parts_[k].to_string();
    }
    return out.str();
}

bool validate_partition(const ModeSet& y, const Partition& xi) {
    return xi.ground_set() == y;
}

bool validate_partition(const ModeSet& y, const OrderedPartition& xi) {
    return xi.ground_set() == y;
}

std::vector<std::size_t> positions_in(const ModeSet& y, const ModeSet& x) {
    std::vector<std::size_t> out;
    out.reserve(x.size());
    for (ModeLabel i : x) out.push_back(y.position(i));
    return out;
}

std::uint32_t restrict_bits(std::uint32_t bits, std::size_t n_y,
                            const std::vector<std::size_t>& positions) {
    std::uint32_t out = 0;
    for (std::size_t p : positions) {
        out = (out << 1) | ((bits >> (n_y - 1 - p)) & 1u);
    }
    return out;
}

std::uint32_t scatter_bits(std::uint32_t bits_x, std::size_t n_y,
                           const std::vector<std::size_t>& positions) {
    std::uint32_t out = 0;
    std::size_t n_x = positions.size();
    for (std::size_t k = 0; k < n_x; ++k) {
        std::uint32_t b = (bits_x >> (n_x - 1 - k)) & 1u;
        out |= b << (n_y - 1 - positions[k]);
    }
    return out;
}

}  // namespace fermikit
