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

#include "fermikit/parity.hpp"

#include <Eigen/Eigenvalues>
#include <bit>

namespace fermikit {

namespace {

inline unsigned weight_parity(std::uint32_t bits) {
    return static_cast<unsigned>(std::popcount(bits)) & 1u;
}

int require_sign(int sign) {
    if (sign != +1 && sign != -1) throw SectorError("parity sign must be +1 or -1");
    return sign;
}

/// Per-part masks over the positions of the ground set.
std::vector<std::uint32_t> part_masks(const Partition& xi) {
    const ModeSet& y = xi.ground_set();
    const std::size_t n = y.size();
    std::vector<std::uint32_t> masks(xi.size(), 0);
    for (std::size_t k = 0; k < xi.size(); ++k) {
        for (ModeLabel i : xi.part(k)) {
            masks[k] |= std::uint32_t{1} << (n - 1 - y.position(i));
        }
    }
    return masks;
}

}  // namespace

StateVector::StateVector(ModeSet m, Eigen::VectorXcd amps)
    : modes(std::move(m)), amplitudes(std::move(amps)) {
    if (amplitudes.size() != static_cast<Eigen::Index>(modes.dim())) {
        throw ShapeError("state vector length does not match 2^" + std::to_string(modes.size()));
    }
}

Operator parity_operator(const ModeSet& y) {
    Operator t = Operator::zero(y);
    for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
        t.matrix()(nu, nu) = weight_parity(nu) ? -1.0 : 1.0;
    }
    return t;
}

Operator parity_projector(const ModeSet& y, int sign) {
    require_sign(sign);
    Operator p = Operator::identity(y);
    Operator t = parity_operator(y);
    return 0.5 * (p + static_cast<double>(sign) * t);
}

ParityClass operator_parity(const Operator& a, double tol) {
    const auto d = static_cast<Eigen::Index>(a.dim());
    double even_violation = 0.0;   // largest entry in an odd-transition cell
    double odd_violation = 0.0;    // largest entry in an even-transition cell
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const double mag = std::abs(a.matrix()(r, c));
            if (weight_parity(static_cast<std::uint32_t>(r) ^ static_cast<std::uint32_t>(c))) {
                even_violation = std::max(even_violation, mag);
            } else {
                odd_violation = std::max(odd_violation, mag);
            }
        }
    }
    if (even_violation <= tol) return ParityClass::even;
    if (odd_violation <= tol) return ParityClass::odd;
    return ParityClass::mixed;
}

Operator parity_part(const Operator& a, int sign) {
    require_sign(sign);
    Operator out = a;
    const auto d = static_cast<Eigen::Index>(a.dim());
    const unsigned keep = sign > 0 ? 0u : 1u;
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            if (weight_parity(static_cast<std::uint32_t>(r) ^ static_cast<std::uint32_t>(c)) != keep) {
                out.matrix()(r, c) = 0.0;
            }
        }
    }
    return out;
}

VectorParity vector_parity(const StateVector& v, double tol) {
    double on_even = 0.0, on_odd = 0.0;
    for (Eigen::Index k = 0; k < v.amplitudes.size(); ++k) {
        const double mag = std::abs(v.amplitudes(k));
        if (weight_parity(static_cast<std::uint32_t>(k))) {
            on_odd = std::max(on_odd, mag);
        } else {
            on_even = std::max(on_even, mag);
        }
    }
    if (on_odd <= tol) return VectorParity::plus;
    if (on_even <= tol) return VectorParity::minus;
    return VectorParity::mixed;
}

ParitySector::ParitySector(Partition xi, std::vector<int> signs)
    : xi_(std::move(xi)), signs_(std::move(signs)) {
    if (signs_.size() != xi_.size()) {
        throw SectorError("sector has " + std::to_string(signs_.size()) + " signs for " +
                          std::to_string(xi_.size()) + " parts");
    }
    for (int s : signs_) require_sign(s);
}

ParitySector ParitySector::parse(const Partition& xi, std::string_view text) {
    std::vector<int> signs;
    std::size_t k = 0;
    while (k < text.size()) {
        if (text[k] == '+') {
            signs.push_back(+1);
            ++k;
        } else if (text[k] == '-') {
            signs.push_back(-1);
            ++k;
        } else if (text.substr(k).starts_with("\xe2\x88\x92")) {  // unicode minus
            signs.push_back(-1);
            k += 3;
        } else {
            throw SectorError("sector syntax is over '+'/'-', got '" + std::string(text) + "'");
        }
    }
    return ParitySector(xi, std::move(signs));
}

std::vector<ParitySector> ParitySector::all(const Partition& xi) {
    std::vector<ParitySector> sectors;
    const std::size_t count = std::size_t{1} << xi.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<int> signs(xi.size());
        for (std::size_t k = 0; k < xi.size(); ++k) {
            signs[k] = (mask >> (xi.size() - 1 - k)) & 1 ? -1 : +1;
        }
        sectors.emplace_back(xi, std::move(signs));
    }
    return sectors;
}

ParitySector ParitySector::all_even(const Partition& xi) {
    return ParitySector(xi, std::vector<int>(xi.size(), +1));
}

std::string ParitySector::to_string() const {
    std::string out;
    for (int s : signs_) out += (s > 0 ? '+' : '-');
    return out;
}

Operator local_parity_projector(const Partition& xi, const ParitySector& eps) {
    if (eps.partition() != xi) throw SectorError("sector defined over a different partition");
    const ModeSet& y = xi.ground_set();
    const auto masks = part_masks(xi);
    Operator p = Operator::zero(y);
    for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
        bool keep = true;
        for (std::size_t k = 0; k < masks.size() && keep; ++k) {
            const int parity = weight_parity(nu & masks[k]) ? -1 : +1;
            keep = parity == eps.sign(k);
        }
        if (keep) p.matrix()(nu, nu) = 1.0;
    }
    return p;
}

SuperOp local_parity_projector_map(const Partition& xi, const ParitySector& eps) {
    if (eps.partition() != xi) throw SectorError("sector defined over a different partition");
    const ModeSet& y = xi.ground_set();
    const auto masks = part_masks(xi);
    const auto d = static_cast<Eigen::Index>(y.dim());
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const auto transition = static_cast<std::uint32_t>(r) ^ static_cast<std::uint32_t>(c);
            bool keep = true;
            for (std::size_t k = 0; k < masks.size() && keep; ++k) {
                const int parity = weight_parity(transition & masks[k]) ? -1 : +1;
                keep = parity == eps.sign(k);
            }
            if (keep) mat(r * d + c, r * d + c) = 1.0;
        }
    }
    return SuperOp(y, std::move(mat));
}

std::vector<std::pair<ParitySector, Operator>> sector_decomposition(const Operator& a,
                                                                    const Partition& xi,
                                                                    double tol) {
    if (!validate_partition(a.modes(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + a.modes().to_string());
    }
    std::vector<std::pair<ParitySector, Operator>> blocks;
    for (const ParitySector& eps : ParitySector::all(xi)) {
        Operator block = local_parity_projector_map(xi, eps).apply(a);
        if (block.max_abs() > tol) blocks.emplace_back(eps, std::move(block));
    }
    return blocks;
}

Operator tps_unitary(const OrderedPartition& xi) {
    const ModeSet& y = xi.ground_set();
    const auto rank = position_ranks(xi);
    Operator u = Operator::zero(y);
    for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
        u.matrix()(nu, nu) = static_cast<double>(phase_u_bits(rank, nu).value);
    }
    return u;
}

StateVector tps_join(const OrderedPartition& xi, std::span<const StateVector> factors) {
    if (factors.size() != xi.size()) throw PartitionError("one factor per part expected");
    const ModeSet& y = xi.ground_set();
    const std::size_t n = y.size();
    std::vector<std::vector<std::size_t>> pos;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].modes != xi.part(k)) {
            throw DomainError("factor " + std::to_string(k) + " lives on " +
                              factors[k].modes.to_string() + ", expected " + xi.part(k).to_string());
        }
        pos.push_back(positions_in(y, xi.part(k)));
    }
    const auto rank = position_ranks(xi);
    Eigen::VectorXcd joint(static_cast<Eigen::Index>(y.dim()));
    for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
        Complex amp = 1.0;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            amp *= factors[k].amplitudes(restrict_bits(nu, n, pos[k]));
        }
        joint(nu) = static_cast<double>(phase_u_bits(rank, nu).value) * amp;
    }
    return StateVector(y, std::move(joint));
}

ProductExtensionReport product_extension_classify(std::span<const Operator> operands, double tol) {
    ProductExtensionReport report;
    report.operands_all_psd = true;
    for (const Operator& a : operands) {
        if (!a.is_hermitian(tol)) throw InputError("product-extension operands must be Hermitian");
        if (a.max_abs() <= tol) throw InputError("product-extension operands must be nonzero");
        switch (operator_parity(a, tol)) {
            case ParityClass::even: ++report.m_even; break;
            case ParityClass::odd: ++report.m_odd; break;
            case ParityClass::mixed: ++report.m_mixed; break;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            0.5 * (a.matrix() + a.matrix().adjoint()));
        if (es.eigenvalues().minCoeff() < -tol) report.operands_all_psd = false;
    }

    const Operator product = ordered_product(operands);
    report.max_nonhermiticity = (product.matrix() - product.matrix().adjoint()).cwiseAbs().maxCoeff();
    report.self_adjoint = report.max_nonhermiticity <= tol;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (product.matrix() + product.matrix().adjoint()));
    report.min_eigenvalue = es.eigenvalues().minCoeff();
    report.psd = report.self_adjoint && report.min_eigenvalue >= -tol;

    const int m_minus_mod4 = report.m_odd % 4;
    report.predicted_self_adjoint =
        (report.m_mixed == 0 && (m_minus_mod4 == 0 || m_minus_mod4 == 1)) ||
        (report.m_mixed == 1 && m_minus_mod4 == 0);
    if (report.operands_all_psd) {
        report.predicted_psd = report.m_mixed <= 1;
    }

    // The closed-form predicates and the direct matrix checks must agree;
    // a mismatch means a broken kernel, not a property of the input.
    if (report.self_adjoint != report.predicted_self_adjoint) {
        throw Error("product-extension self-adjointness predicate disagrees with the matrix check");
    }
    if (report.predicted_psd.has_value() && report.psd != *report.predicted_psd) {
        throw Error("product-extension positivity predicate disagrees with the matrix check");
    }
    return report;
}

ProductExtensionReport product_extension_classify(std::initializer_list<Operator> operands,
                                                  double tol) {
    return product_extension_classify(std::span<const Operator>(operands.begin(), operands.size()),
                                      tol);
}

}  // namespace fermikit
