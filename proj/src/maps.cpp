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

#include "fermikit/maps.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <bit>

namespace fermikit {

namespace {

inline unsigned weight_parity(std::uint32_t bits) {
    return static_cast<unsigned>(std::popcount(bits)) & 1u;
}

struct TensorLayout {
    ModeSet y_in;
    ModeSet y_out;
    std::vector<std::vector<std::size_t>> pos_in;   // per operand, positions in y_in
    std::vector<std::vector<std::size_t>> pos_out;  // per operand, positions in y_out
    std::vector<unsigned> rank_in;                  // per position of y_in, 1-based operand rank
    std::vector<unsigned> rank_out;
};

TensorLayout make_layout(std::span<const SuperOp> operands) {
    TensorLayout layout;
    std::size_t total_in = 0, total_out = 0;
    for (const SuperOp& op : operands) {
        total_in += op.in_modes().size();
        total_out += op.out_modes().size();
        layout.y_in = layout.y_in.set_union(op.in_modes());
        layout.y_out = layout.y_out.set_union(op.out_modes());
    }
    if (layout.y_in.size() != total_in || layout.y_out.size() != total_out) {
        throw PartitionError("map product operands must live on disjoint ModeSets");
    }
    layout.rank_in.assign(layout.y_in.size(), 0);
    layout.rank_out.assign(layout.y_out.size(), 0);
    for (std::size_t k = 0; k < operands.size(); ++k) {
        layout.pos_in.push_back(positions_in(layout.y_in, operands[k].in_modes()));
        layout.pos_out.push_back(positions_in(layout.y_out, operands[k].out_modes()));
        for (std::size_t p : layout.pos_in.back()) layout.rank_in[p] = static_cast<unsigned>(k + 1);
        for (std::size_t p : layout.pos_out.back()) layout.rank_out[p] = static_cast<unsigned>(k + 1);
    }
    return layout;
}

}  // namespace

SuperOp map_tensor(MapProductKind kind, std::span<const SuperOp> operands) {
    const TensorLayout layout = make_layout(operands);
    const std::size_t n_in = layout.y_in.size();
    const std::size_t n_out = layout.y_out.size();
    const std::uint32_t d_in = std::uint32_t{1} << n_in;
    const std::uint32_t d_out = std::uint32_t{1} << n_out;

    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d_out) * d_out,
                                                  static_cast<Eigen::Index>(d_in) * d_in);
    std::vector<std::size_t> n_in_k(operands.size()), n_out_k(operands.size());
    for (std::size_t k = 0; k < operands.size(); ++k) {
        n_in_k[k] = operands[k].in_modes().size();
        n_out_k[k] = operands[k].out_modes().size();
    }

    for (std::uint32_t rho = 0; rho < d_out; ++rho) {
        for (std::uint32_t sigma = 0; sigma < d_out; ++sigma) {
            const Eigen::Index row = static_cast<Eigen::Index>(rho) * d_out + sigma;
            int out_sign = phase_f_bits(n_out, rho, sigma).value;
            if (kind == MapProductKind::ordered) {
                out_sign *= phase_l_bits(layout.rank_out, rho, sigma).value;
            }
            for (std::uint32_t mu = 0; mu < d_in; ++mu) {
                for (std::uint32_t mup = 0; mup < d_in; ++mup) {
                    Complex value = 1.0;
                    int sign = out_sign * phase_f_bits(n_in, mu, mup).value;
                    if (kind == MapProductKind::ordered) {
                        sign *= phase_l_bits(layout.rank_in, mu, mup).value;
                    }
                    for (std::size_t k = 0; k < operands.size() && value != Complex{0.0}; ++k) {
                        const std::uint32_t rk = restrict_bits(rho, n_out, layout.pos_out[k]);
                        const std::uint32_t sk = restrict_bits(sigma, n_out, layout.pos_out[k]);
                        const std::uint32_t mk = restrict_bits(mu, n_in, layout.pos_in[k]);
                        const std::uint32_t mpk = restrict_bits(mup, n_in, layout.pos_in[k]);
                        const std::uint32_t dok = std::uint32_t{1} << n_out_k[k];
                        const std::uint32_t dik = std::uint32_t{1} << n_in_k[k];
                        value *= operands[k].matrix()(rk * dok + sk, mk * dik + mpk);
                        sign *= phase_f_bits(n_out_k[k], rk, sk).value *
                                phase_f_bits(n_in_k[k], mk, mpk).value;
                    }
                    if (value != Complex{0.0}) {
                        mat(row, static_cast<Eigen::Index>(mu) * d_in + mup) =
                            static_cast<double>(sign) * value;
                    }
                }
            }
        }
    }
    return SuperOp(layout.y_in, layout.y_out, std::move(mat));
}

SuperOp map_tensor(MapProductKind kind, std::initializer_list<SuperOp> operands) {
    return map_tensor(kind, std::span<const SuperOp>(operands.begin(), operands.size()));
}

SuperOp map_embed(MapProductKind kind, const ModeSet& y, const SuperOp& omega) {
    if (!y.contains_all(omega.in_modes())) {
        throw DomainError(omega.in_modes().to_string() + " is not a subset of " + y.to_string());
    }
    const ModeSet rest = y.set_difference(omega.in_modes());
    if (!omega.out_modes().disjoint_from(rest)) {
        throw DomainError("output modes collide with the identity padding");
    }
    if (rest.empty()) return omega;
    const SuperOp ops[] = {omega, SuperOp::identity(rest)};
    return map_tensor(kind, std::span<const SuperOp>(ops, 2));
}

namespace {

/// Diagonal of the parity superoperator Theta: entry at (nu,nu') is the
/// transition parity sign.
double theta_sign(std::uint32_t nu, std::uint32_t nup) {
    return weight_parity(nu ^ nup) ? -1.0 : 1.0;
}

}  // namespace

ParityClass map_parity(const SuperOp& omega, double tol) {
    const auto d_in = static_cast<std::uint32_t>(omega.in_modes().dim());
    const auto d_out = static_cast<std::uint32_t>(omega.out_modes().dim());
    double even_violation = 0.0, odd_violation = 0.0;
    for (std::uint32_t r = 0; r < d_out * d_out; ++r) {
        const double t_out = theta_sign(r / d_out, r % d_out);
        for (std::uint32_t c = 0; c < d_in * d_in; ++c) {
            const double t_in = theta_sign(c / d_in, c % d_in);
            const Complex entry = omega.matrix()(r, c);
            const double diff = std::abs(t_out * entry - entry * t_in);
            const double sum = std::abs(t_out * entry + entry * t_in);
            even_violation = std::max(even_violation, diff);
            odd_violation = std::max(odd_violation, sum);
        }
    }
    if (even_violation <= tol) return ParityClass::even;
    if (odd_violation <= tol) return ParityClass::odd;
    return ParityClass::mixed;
}

SuperOp map_parity_part(const SuperOp& omega, int sign) {
    if (sign != +1 && sign != -1) throw SectorError("map parity sign must be +1 or -1");
    const auto d_in = static_cast<std::uint32_t>(omega.in_modes().dim());
    const auto d_out = static_cast<std::uint32_t>(omega.out_modes().dim());
    SuperOp out = omega;
    for (std::uint32_t r = 0; r < d_out * d_out; ++r) {
        const double t_out = theta_sign(r / d_out, r % d_out);
        for (std::uint32_t c = 0; c < d_in * d_in; ++c) {
            const double t_in = theta_sign(c / d_in, c % d_in);
            // Entries with t_out == t_in form the even part, the rest the odd part.
            const bool keep = (t_out == t_in) == (sign > 0);
            if (!keep) out.matrix()(r, c) = 0.0;
        }
    }
    return out;
}

bool is_physical_map(const SuperOp& omega, double tol) {
    if (map_parity(omega, tol) != ParityClass::even) return false;
    const auto d_in = static_cast<std::uint32_t>(omega.in_modes().dim());
    for (std::uint32_t c = 0; c < d_in * d_in; ++c) {
        if (weight_parity((c / d_in) ^ (c % d_in)) == 0) continue;  // even column
        if (omega.matrix().col(c).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

ChoiMatrix choi(const SuperOp& omega) {
    const auto d_in = static_cast<Eigen::Index>(omega.in_modes().dim());
    const auto d_out = static_cast<Eigen::Index>(omega.out_modes().dim());
    ChoiMatrix result;
    result.matrix.resize(d_in * d_out, d_in * d_out);
    for (Eigen::Index mu = 0; mu < d_in; ++mu) {
        for (Eigen::Index mup = 0; mup < d_in; ++mup) {
            for (Eigen::Index m = 0; m < d_out; ++m) {
                for (Eigen::Index mp = 0; mp < d_out; ++mp) {
                    result.matrix(mu * d_out + m, mup * d_out + mp) =
                        omega.matrix()(m * d_out + mp, mu * d_in + mup);
                }
            }
        }
    }
    result.hermiticity_residual =
        (result.matrix - result.matrix.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (result.matrix + result.matrix.adjoint()), Eigen::EigenvaluesOnly);
    result.min_eigenvalue = es.eigenvalues().minCoeff();
    return result;
}

TpcpReport tpcp_report(const SuperOp& omega, double tol) {
    TpcpReport report;
    const ChoiMatrix c = choi(omega);
    report.min_choi_eigenvalue = c.min_eigenvalue;
    report.choi_hermiticity_residual = c.hermiticity_residual;
    report.completely_positive =
        c.hermiticity_residual <= tol && c.min_eigenvalue >= -tol;

    const auto d_in = static_cast<Eigen::Index>(omega.in_modes().dim());
    const auto d_out = static_cast<Eigen::Index>(omega.out_modes().dim());
    double worst = 0.0;
    for (Eigen::Index mu = 0; mu < d_in; ++mu) {
        for (Eigen::Index mup = 0; mup < d_in; ++mup) {
            Complex tr = 0.0;
            for (Eigen::Index m = 0; m < d_out; ++m) {
                tr += omega.matrix()(m * d_out + m, mu * d_in + mup);
            }
            const Complex expected = mu == mup ? Complex{1.0} : Complex{0.0};
            worst = std::max(worst, std::abs(tr - expected));
        }
    }
    report.max_trace_residual = worst;
    report.trace_preserving = worst <= tol;
    return report;
}

bool is_tpcp(const SuperOp& omega, double tol) { return tpcp_report(omega, tol).tpcp(); }

SuperOp partial_trace_map(const ModeSet& y, const ModeSet& x) {
    return SuperOp::from_action(y, x, [&x](const Operator& a) { return partial_trace(a, x); });
}

namespace {

/// Even transition pairs (a,b) over n modes, in lexicographic (a,b) order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> even_pairs(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    const std::uint32_t d = std::uint32_t{1} << n;
    for (std::uint32_t a = 0; a < d; ++a) {
        for (std::uint32_t b = 0; b < d; ++b) {
            if (weight_parity(a ^ b) == 0) pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

struct SectorIndexing {
    std::vector<std::uint32_t> masks;           // per part, bits over Y positions
    std::vector<std::vector<std::size_t>> pos;  // per part, positions in Y
};

SectorIndexing sector_indexing(const ModeSet& y, const std::vector<ModeSet>& parts) {
    SectorIndexing idx;
    for (const ModeSet& part : parts) {
        idx.pos.push_back(positions_in(y, part));
        std::uint32_t mask = 0;
        for (std::size_t p : idx.pos.back()) mask |= std::uint32_t{1} << (y.size() - 1 - p);
        idx.masks.push_back(mask);
    }
    return idx;
}

/// Number of locally-odd parts of the transition nu ^ nu'.
std::size_t odd_part_count(const SectorIndexing& idx, std::uint32_t transition) {
    std::size_t count = 0;
    for (std::uint32_t mask : idx.masks) count += weight_parity(transition & mask);
    return count;
}

/// Builds the physical superoperator on `part` whose even-sector action in
/// the fermionic basis is W (odd rows and columns zero).
SuperOp physical_from_even_block(const ModeSet& part, const Eigen::MatrixXcd& w,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& ep) {
    const std::size_t n = part.size();
    const auto d = static_cast<Eigen::Index>(part.dim());
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (std::size_t r = 0; r < ep.size(); ++r) {
        const double f_r = phase_f_bits(n, ep[r].first, ep[r].second).value;
        for (std::size_t c = 0; c < ep.size(); ++c) {
            const double f_c = phase_f_bits(n, ep[c].first, ep[c].second).value;
            mat(static_cast<Eigen::Index>(ep[r].first) * d + ep[r].second,
                static_cast<Eigen::Index>(ep[c].first) * d + ep[c].second) =
                f_r * w(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * f_c;
        }
    }
    return SuperOp(part, std::move(mat));
}

LocalityCertificate locality_test(const SuperOp& omega, const std::vector<ModeSet>& parts,
                                  bool identity_on_complement, double threshold) {
    if (!omega.is_endomorphism()) {
        throw DomainError("locality is defined for maps of a mode subset to itself");
    }
    const ModeSet& y = omega.in_modes();
    ModeSet covered;
    for (const ModeSet& part : parts) covered = covered.set_union(part);
    if (!y.contains_all(covered)) throw DomainError("locality target not within the map's modes");

    std::vector<ModeSet> all_parts = parts;
    if (identity_on_complement) {
        // X-local: the complement carries the identity map, which acts as a
        // free factor; it is not fitted.
        const ModeSet rest = y.set_difference(covered);
        if (!rest.empty()) all_parts.push_back(rest);
    } else if (covered != y) {
        throw PartitionError("xi-locality requires a partition of the map's modes");
    }

    const std::size_t n = y.size();
    const std::uint32_t d = std::uint32_t{1} << n;
    const SectorIndexing idx = sector_indexing(y, all_parts);
    const std::size_t n_fit = parts.size();  // parts carrying fitted physical maps

    // Scale factors of the Lambda-twisted fermionic basis E' = Lambda(E~):
    // in these coordinates the reconstruction is an exact Kronecker product
    // on the all-even sector.
    std::vector<unsigned> rank(n, 0);
    for (std::size_t k = 0; k < all_parts.size(); ++k) {
        for (std::size_t p : idx.pos[k]) rank[p] = static_cast<unsigned>(k + 1);
    }
    auto coordinate_sign = [&](std::uint32_t nu, std::uint32_t nup) {
        return phase_f_bits(n, nu, nup).value * phase_l_bits(rank, nu, nup).value;
    };

    // Enumerate the all-even sector as a product of per-part even pairs.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> part_pairs;
    std::vector<std::size_t> radix;
    for (const ModeSet& part : all_parts) {
        part_pairs.push_back(even_pairs(part.size()));
        radix.push_back(part_pairs.back().size());
    }
    std::size_t sector_size = 1;
    for (std::size_t r : radix) sector_size *= r;

    auto compose_index = [&](const std::vector<std::size_t>& digits) {
        std::uint32_t nu = 0, nup = 0;
        for (std::size_t k = 0; k < all_parts.size(); ++k) {
            const auto [a, b] = part_pairs[k][digits[k]];
            nu |= scatter_bits(a, n, idx.pos[k]);
            nup |= scatter_bits(b, n, idx.pos[k]);
        }
        return std::pair<std::uint32_t, std::uint32_t>{nu, nup};
    };
    auto digits_of = [&](std::size_t flat) {
        std::vector<std::size_t> digits(all_parts.size());
        for (std::size_t k = all_parts.size(); k-- > 0;) {
            digits[k] = flat % radix[k];
            flat /= radix[k];
        }
        return digits;
    };

    // The all-even compression in the twisted coordinates.
    Eigen::MatrixXcd compressed(static_cast<Eigen::Index>(sector_size),
                                static_cast<Eigen::Index>(sector_size));
    for (std::size_t rr = 0; rr < sector_size; ++rr) {
        const auto [rnu, rnup] = compose_index(digits_of(rr));
        const double s_r = coordinate_sign(rnu, rnup);
        for (std::size_t cc = 0; cc < sector_size; ++cc) {
            const auto [cnu, cnup] = compose_index(digits_of(cc));
            const double s_c = coordinate_sign(cnu, cnup);
            compressed(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc)) =
                s_r * omega.matrix()(static_cast<Eigen::Index>(rnu) * d + rnup,
                                     static_cast<Eigen::Index>(cnu) * d + cnup) * s_c;
        }
    }

    // Recover the per-part blocks: a closed-form block average when only one
    // factor is unknown, sequential nearest-Kronecker SVD splits otherwise.
    LocalityCertificate cert;
    std::vector<Eigen::MatrixXcd> blocks;
    if (n_fit == 1) {
        const std::size_t d1 = radix[0];
        const std::size_t d_rest = sector_size / d1;
        Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d1),
                                                    static_cast<Eigen::Index>(d1));
        for (std::size_t i = 0; i < d1; ++i) {
            for (std::size_t j = 0; j < d1; ++j) {
                Complex sum = 0.0;
                for (std::size_t g = 0; g < d_rest; ++g) {
                    sum += compressed(static_cast<Eigen::Index>(i * d_rest + g),
                                      static_cast<Eigen::Index>(j * d_rest + g));
                }
                w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    sum / static_cast<double>(d_rest);
            }
        }
        blocks.push_back(std::move(w));
    } else {
        Eigen::MatrixXcd current = compressed;
        std::vector<std::size_t> remaining(radix.begin(), radix.begin() + n_fit);
        for (std::size_t k = 0; k + 1 < n_fit; ++k) {
            const std::size_t d1 = remaining[0];
            std::size_t d_rest = 1;
            for (std::size_t j = 1; j < remaining.size(); ++j) d_rest *= remaining[j];
            // Rearrange so that rows enumerate the (i,j) block index of the
            // split-off factor and columns the rest; the best Kronecker fit
            // is the dominant singular pair.
            Eigen::MatrixXcd rearranged(static_cast<Eigen::Index>(d1 * d1),
                                        static_cast<Eigen::Index>(d_rest * d_rest));
            for (std::size_t i = 0; i < d1; ++i) {
                for (std::size_t j = 0; j < d1; ++j) {
                    for (std::size_t g = 0; g < d_rest; ++g) {
                        for (std::size_t gp = 0; gp < d_rest; ++gp) {
                            rearranged(static_cast<Eigen::Index>(i * d1 + j),
                                       static_cast<Eigen::Index>(g * d_rest + gp)) =
                                current(static_cast<Eigen::Index>(i * d_rest + g),
                                        static_cast<Eigen::Index>(j * d_rest + gp));
                        }
                    }
                }
            }
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rearranged,
                                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
            Eigen::VectorXcd u = svd.matrixU().col(0);
            Eigen::VectorXcd v = svd.matrixV().col(0).conjugate() * svd.singularValues()(0);
            // Fix the phase so the leading entry of the factor is positive real.
            Eigen::Index lead = 0;
            u.cwiseAbs().maxCoeff(&lead);
            const Complex u_lead = u(lead);
            if (std::abs(u_lead) > 0) {
                const Complex phase = u_lead / std::abs(u_lead);
                u /= phase;
                v *= phase;
            }
            blocks.push_back(unvec_rowmajor(u, static_cast<Eigen::Index>(d1),
                                            static_cast<Eigen::Index>(d1)));
            current = unvec_rowmajor(v, static_cast<Eigen::Index>(d_rest),
                                     static_cast<Eigen::Index>(d_rest));
            remaining.erase(remaining.begin());
        }
        blocks.push_back(std::move(current));
    }

    for (std::size_t k = 0; k < n_fit; ++k) {
        cert.recovered.push_back(physical_from_even_block(parts[k], blocks[k], part_pairs[k]));
    }

    // Reconstruction: composition of ordered embeddings of the recovered
    // physical maps (the complement, if any, keeps the identity).
    SuperOp reconstruction = SuperOp::identity(y);
    for (const SuperOp& part_map : cert.recovered) {
        reconstruction = map_embed(MapProductKind::ordered, y, part_map).compose(reconstruction);
    }

    // Xi may act freely exactly on the globally even sectors with >= 2
    // locally odd parts, and must produce globally even output there.
    const Eigen::MatrixXcd xi = omega.matrix() - reconstruction.matrix();
    double residual = 0.0;
    for (std::uint32_t r = 0; r < d * d; ++r) {
        const bool row_even = weight_parity((r / d) ^ (r % d)) == 0;
        for (std::uint32_t c = 0; c < d * d; ++c) {
            const std::uint32_t transition = (c / d) ^ (c % d);
            const std::size_t odd_parts = odd_part_count(idx, transition);
            const bool col_free = odd_parts >= 2 && weight_parity(transition) == 0;
            if (col_free && row_even) continue;
            residual = std::max(residual, std::abs(xi(r, c)));
        }
    }
    cert.residual = residual;
    cert.local = residual <= threshold;
    return cert;
}

}  // namespace

LocalityCertificate is_local_map(const SuperOp& omega, const ModeSet& x, double threshold) {
    return locality_test(omega, {x}, /*identity_on_complement=*/true, threshold);
}

LocalityCertificate is_local_map(const SuperOp& omega, const Partition& xi, double threshold) {
    return locality_test(omega, xi.parts(), /*identity_on_complement=*/false, threshold);
}

}  // namespace fermikit
