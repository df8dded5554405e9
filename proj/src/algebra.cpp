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

#include "fermikit/algebra.hpp"

#include <bit>
#include <vector>

namespace fermikit {

Operator::Operator(ModeSet modes, Eigen::MatrixXcd entries)
    : modes_(std::move(modes)), mat_(std::move(entries)) {
    const auto d = static_cast<Eigen::Index>(modes_.dim());
    if (mat_.rows() != d || mat_.cols() != d) {
        throw ShapeError("matrix shape " + std::to_string(mat_.rows()) + "x" +
                         std::to_string(mat_.cols()) + " does not match 2^" +
                         std::to_string(modes_.size()) + " for " + modes_.to_string());
    }
}

Operator Operator::zero(const ModeSet& modes) {
    const auto d = static_cast<Eigen::Index>(modes.dim());
    return Operator(modes, Eigen::MatrixXcd::Zero(d, d));
}

Operator Operator::identity(const ModeSet& modes) {
    const auto d = static_cast<Eigen::Index>(modes.dim());
    return Operator(modes, Eigen::MatrixXcd::Identity(d, d));
}

Complex Operator::scalar() const {
    if (!modes_.empty()) {
        throw DomainError("scalar extraction requires the empty ModeSet, got " + modes_.to_string());
    }
    return mat_(0, 0);
}

double Operator::max_abs_diff(const Operator& other) const {
    if (modes_ != other.modes_) {
        throw ShapeError("operators on " + modes_.to_string() + " and " + other.modes_.to_string());
    }
    return (mat_ - other.mat_).cwiseAbs().maxCoeff();
}

bool Operator::approx_equal(const Operator& other, double tol) const {
    return max_abs_diff(other) <= tol;
}

Operator Operator::operator+(const Operator& other) const {
    if (modes_ != other.modes_) throw ShapeError("operator sum across different ModeSets");
    return Operator(modes_, mat_ + other.mat_);
}

Operator Operator::operator-(const Operator& other) const {
    if (modes_ != other.modes_) throw ShapeError("operator difference across different ModeSets");
    return Operator(modes_, mat_ - other.mat_);
}

Operator Operator::operator*(const Operator& other) const {
    if (modes_ != other.modes_) throw ShapeError("operator product across different ModeSets");
    return Operator(modes_, mat_ * other.mat_);
}

Complex hs_inner(const Operator& a, const Operator& b) {
    if (a.modes() != b.modes()) {
        throw ShapeError("hs_inner across " + a.modes().to_string() + " and " + b.modes().to_string());
    }
    return (a.matrix().conjugate().cwiseProduct(b.matrix())).sum();
}

double hs_norm(const Operator& a) { return std::sqrt(std::abs(hs_inner(a, a))); }

Operator elementary(const ModeSet& y, const OccPattern& nu, const OccPattern& nup, Basis basis) {
    const std::size_t r = pattern_index(y, nu);
    const std::size_t c = pattern_index(y, nup);
    Operator e = Operator::zero(y);
    Complex value = 1.0;
    if (basis == Basis::fermionic) {
        value = static_cast<double>(phase_f(y, nu, nup).value);
    }
    e.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
    return e;
}

Operator jw_ladder(ModeLabel i, const ModeSet& y, LadderKind which) {
    const std::size_t pos = y.position(i);  // DomainError if i not in y
    const std::size_t n = y.size();
    Eigen::Matrix2cd base = Eigen::Matrix2cd::Zero();
    switch (which) {
        case LadderKind::create: base(1, 0) = 1.0; break;
        case LadderKind::annihilate: base(0, 1) = 1.0; break;
        case LadderKind::number: base(1, 1) = 1.0; break;
        case LadderKind::hole: base(0, 0) = 1.0; break;
        case LadderKind::phase_op: base(0, 0) = 1.0; base(1, 1) = -1.0; break;
        case LadderKind::identity: base(0, 0) = 1.0; base(1, 1) = 1.0; break;
    }

    // Bits of the positions strictly before pos (smaller labels, higher bits).
    const std::uint32_t prefix_mask =
        pos == 0 ? 0u : ((std::uint32_t{1} << pos) - 1u) << (n - pos);
    const std::uint32_t own_bit = std::uint32_t{1} << (n - 1 - pos);

    Operator out = Operator::zero(y);
    for (int b_row = 0; b_row < 2; ++b_row) {
        for (int b_col = 0; b_col < 2; ++b_col) {
            const Complex c = base(b_row, b_col);
            if (c == Complex{0.0}) continue;
            const bool odd = ((b_row + b_col) & 1) != 0;
            for (std::uint32_t rest = 0; rest < (std::uint32_t{1} << n); ++rest) {
                if ((rest & own_bit) != 0) continue;  // enumerate patterns of the other modes
                const std::uint32_t row = rest | (b_row ? own_bit : 0u);
                const std::uint32_t col = rest | (b_col ? own_bit : 0u);
                double sign = 1.0;
                if (odd && (std::popcount(rest & prefix_mask) & 1)) sign = -1.0;
                out.matrix()(row, col) += sign * c;
            }
        }
    }
    return out;
}

namespace {

/// Entrywise multiplication by a +-1 table given per (row,col) bits.
template <typename SignFn>
Operator entrywise_signs(const Operator& a, SignFn&& sign_of) {
    Operator out = a;
    const auto d = static_cast<Eigen::Index>(a.dim());
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            if (sign_of(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)) < 0) {
                out.matrix()(r, c) = -out.matrix()(r, c);
            }
        }
    }
    return out;
}

std::vector<ModeSet> operand_mode_sets(std::span<const Operator> operands) {
    std::vector<ModeSet> sets;
    sets.reserve(operands.size());
    for (const Operator& op : operands) sets.push_back(op.modes());
    return sets;
}

}  // namespace

Operator phi(const Operator& a, Direction) {
    const std::size_t n = a.modes().size();
    return entrywise_signs(a, [n](std::uint32_t r, std::uint32_t c) {
        return phase_f_bits(n, r, c).value;
    });
}

Operator psi_map(const Partition& xi, const Operator& a, Direction) {
    if (!validate_partition(a.modes(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + a.modes().to_string());
    }
    const auto block = position_ranks(xi);
    return entrywise_signs(a, [&block](std::uint32_t r, std::uint32_t c) {
        return phase_h_bits(block, r, c).value;
    });
}

Operator lambda_map(const OrderedPartition& xi, const Operator& a, Direction) {
    if (!validate_partition(a.modes(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + a.modes().to_string());
    }
    const auto rank = position_ranks(xi);
    return entrywise_signs(a, [&rank](std::uint32_t r, std::uint32_t c) {
        return phase_l_bits(rank, r, c).value;
    });
}

Operator tensor_standard(std::span<const Operator> operands) {
    ModeSet y;
    std::size_t total = 0;
    for (const Operator& op : operands) {
        total += op.modes().size();
        y = y.set_union(op.modes());
    }
    if (y.size() != total) throw PartitionError("tensor operands must live on disjoint ModeSets");

    const std::size_t n = y.size();
    std::vector<std::vector<std::size_t>> pos;
    pos.reserve(operands.size());
    for (const Operator& op : operands) pos.push_back(positions_in(y, op.modes()));

    Operator out = Operator::zero(y);
    const auto d = static_cast<Eigen::Index>(y.dim());
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            Complex value = 1.0;
            for (std::size_t k = 0; k < operands.size() && value != Complex{0.0}; ++k) {
                const std::uint32_t rk = restrict_bits(static_cast<std::uint32_t>(r), n, pos[k]);
                const std::uint32_t ck = restrict_bits(static_cast<std::uint32_t>(c), n, pos[k]);
                value *= operands[k].matrix()(rk, ck);
            }
            out.matrix()(r, c) = value;
        }
    }
    return out;
}

Operator tensor_fermionic(std::span<const Operator> operands) {
    Operator plain = tensor_standard(operands);
    std::vector<ModeSet> parts;
    for (const ModeSet& s : operand_mode_sets(operands)) {
        if (!s.empty()) parts.push_back(s);  // scalar factors carry no phases
    }
    if (parts.empty()) return plain;
    Partition xi(std::move(parts));
    const auto block = position_ranks(xi);
    return entrywise_signs(plain, [&block](std::uint32_t r, std::uint32_t c) {
        return phase_h_bits(block, r, c).value;
    });
}

Operator embed(const ModeSet& y, const Operator& a) {
    if (!y.contains_all(a.modes())) {
        throw DomainError(a.modes().to_string() + " is not a subset of " + y.to_string());
    }
    const ModeSet rest = y.set_difference(a.modes());
    if (rest.empty()) return a;
    if (a.modes().empty()) return a.matrix()(0, 0) * Operator::identity(y);
    const Operator padding = Operator::identity(rest);
    const Operator ops[] = {a, padding};
    return tensor_fermionic(std::span<const Operator>(ops, 2));
}

Operator ordered_product(std::span<const Operator> operands) {
    ModeSet y;
    std::size_t total = 0;
    for (const Operator& op : operands) {
        total += op.modes().size();
        y = y.set_union(op.modes());
    }
    if (y.size() != total) throw PartitionError("ordered product operands must be disjoint");
    Operator out = Operator::identity(y);
    for (const Operator& op : operands) out = out * embed(y, op);
    return out;
}

Operator tensor_standard(std::initializer_list<Operator> operands) {
    return tensor_standard(std::span<const Operator>(operands.begin(), operands.size()));
}
Operator tensor_fermionic(std::initializer_list<Operator> operands) {
    return tensor_fermionic(std::span<const Operator>(operands.begin(), operands.size()));
}
Operator ordered_product(std::initializer_list<Operator> operands) {
    return ordered_product(std::span<const Operator>(operands.begin(), operands.size()));
}

Operator partial_trace(const Operator& a, const ModeSet& x) {
    const ModeSet& y = a.modes();
    if (!y.contains_all(x)) {
        throw DomainError(x.to_string() + " is not a subset of " + y.to_string());
    }
    const ModeSet rest = y.set_difference(x);
    const std::size_t n = y.size();
    const std::size_t n_x = x.size();
    const auto pos_x = positions_in(y, x);
    const auto pos_rest = positions_in(y, rest);

    Operator out = Operator::zero(x);
    const std::uint32_t d_x = std::uint32_t{1} << n_x;
    const std::uint32_t d_rest = std::uint32_t{1} << rest.size();
    for (std::uint32_t alpha = 0; alpha < d_x; ++alpha) {
        const std::uint32_t alpha_scattered = scatter_bits(alpha, n, pos_x);
        for (std::uint32_t beta = 0; beta < d_x; ++beta) {
            const std::uint32_t beta_scattered = scatter_bits(beta, n, pos_x);
            Complex sum = 0.0;
            for (std::uint32_t gamma = 0; gamma < d_rest; ++gamma) {
                const std::uint32_t shared = scatter_bits(gamma, n, pos_rest);
                const std::uint32_t row = alpha_scattered | shared;
                const std::uint32_t col = beta_scattered | shared;
                const double f_y = phase_f_bits(n, row, col).value;
                sum += f_y * a.matrix()(row, col);
            }
            const double f_x = phase_f_bits(n_x, alpha, beta).value;
            out.matrix()(alpha, beta) = f_x * sum;
        }
    }
    return out;
}

}  // namespace fermikit
