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

#include "fermikit/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "fermikit/random.hpp"

namespace fermikit {

namespace {

void validate_state(const Operator& op, double tol) {
    if (!op.is_hermitian(tol)) throw StateError("density matrix must be Hermitian");
    if (std::abs(op.trace() - Complex{1.0}) > tol) throw StateError("density matrix must have unit trace");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (op.matrix() + op.matrix().adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw StateError("density matrix must be positive semidefinite");
    }
}

/// Marginals on the parts of xi, in canonical (smallest-label) part order.
std::vector<Operator> marginals_of(const Operator& rho, const Partition& xi) {
    std::vector<Operator> out;
    out.reserve(xi.size());
    for (const ModeSet& part : xi.parts()) out.push_back(partial_trace(rho, part));
    return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Operator op, double tol) : op_(std::move(op)) {
    validate_state(op_, tol);
}

DensityMatrix DensityMatrix::pure(const StateVector& psi, double tol) {
    Eigen::VectorXcd v = psi.amplitudes.normalized();
    return DensityMatrix(Operator(psi.modes, v * v.adjoint()), tol);
}

DensityMatrix DensityMatrix::maximally_mixed(const ModeSet& modes) {
    const double d = static_cast<double>(modes.dim());
    return DensityMatrix(Complex{1.0 / d} * Operator::identity(modes), 1e-12);
}

DensityMatrix reduce_state(const DensityMatrix& rho, const ModeSet& x, double tol) {
    Operator reduced = partial_trace(rho.op(), x);
    // Trace preservation and positivity are theorems; re-validating guards
    // against numerical drift on large inputs.
    return DensityMatrix(std::move(reduced), std::max(tol, 1e-9));
}

CoeffMatrix coeffs(const DensityMatrix& rho, Basis basis) {
    if (basis == Basis::standard) {
        return CoeffMatrix{rho.modes(), basis, rho.op().matrix()};
    }
    return CoeffMatrix{rho.modes(), basis, phi(rho.op()).matrix()};
}

CorrelationReport classify_correlation(const DensityMatrix& rho, const Partition& xi,
                                       CorrelationMode mode, double tol) {
    if (!validate_partition(rho.modes(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + rho.modes().to_string());
    }
    CorrelationReport report;
    report.physical = operator_parity(rho.op(), tol) == ParityClass::even;

    const std::vector<Operator> marginals = marginals_of(rho.op(), xi);
    const Operator reconstruction = ordered_product(marginals);
    report.reconstruction_hermitian = reconstruction.is_hermitian(tol);
    report.max_residual_product = rho.op().max_abs_diff(reconstruction);

    if (mode == CorrelationMode::no_ssr) {
        report.max_residual_uncorrelated = report.max_residual_product;
        report.uncorrelated = report.max_residual_uncorrelated <= tol;
        report.product_physical = std::nullopt;
        return report;
    }

    const Operator projected =
        local_parity_projector_map(xi, ParitySector::all_even(xi)).apply(rho.op());
    report.max_residual_uncorrelated = projected.max_abs_diff(reconstruction);
    report.uncorrelated = report.physical && report.max_residual_uncorrelated <= tol;
    report.product_physical = report.physical && report.max_residual_product <= tol;
    return report;
}

namespace {

/// Lawson-Hanson nonnegative least squares: min |A w - b| with w >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, std::size_t max_iter) {
    const Eigen::Index k = a.cols();
    Eigen::VectorXd w = Eigen::VectorXd::Zero(k);
    std::vector<bool> passive(static_cast<std::size_t>(k), false);
    Eigen::VectorXd gradient = a.transpose() * (b - a * w);

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        Eigen::Index best = -1;
        double best_grad = 1e-12;
        for (Eigen::Index j = 0; j < k; ++j) {
            if (!passive[static_cast<std::size_t>(j)] && gradient(j) > best_grad) {
                best_grad = gradient(j);
                best = j;
            }
        }
        if (best < 0) break;
        passive[static_cast<std::size_t>(best)] = true;

        std::size_t inner_guard = 2 * static_cast<std::size_t>(k) + 4;
        while (inner_guard-- > 0) {
            std::vector<Eigen::Index> idx;
            for (Eigen::Index j = 0; j < k; ++j) {
                if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
            }
            Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
            for (std::size_t j = 0; j < idx.size(); ++j) sub.col(static_cast<Eigen::Index>(j)) = a.col(idx[j]);
            Eigen::VectorXd z = sub.colPivHouseholderQr().solve(b);

            double alpha = 1.0;
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const double zj = z(static_cast<Eigen::Index>(j));
                if (zj <= 0) {
                    const double wj = w(idx[j]);
                    alpha = std::min(alpha, wj / (wj - zj));
                }
            }
            if (alpha >= 1.0) {
                w.setZero();
                for (std::size_t j = 0; j < idx.size(); ++j) w(idx[j]) = z(static_cast<Eigen::Index>(j));
                break;
            }
            for (std::size_t j = 0; j < idx.size(); ++j) {
                w(idx[j]) += alpha * (z(static_cast<Eigen::Index>(j)) - w(idx[j]));
            }
            for (Eigen::Index j = 0; j < k; ++j) {
                if (passive[static_cast<std::size_t>(j)] && w(j) <= 1e-14) {
                    passive[static_cast<std::size_t>(j)] = false;
                    w(j) = 0.0;
                }
            }
        }
        gradient = a.transpose() * (b - a * w);
    }
    return w;
}

}  // namespace

SeparabilityCertificate separability_certificate(const DensityMatrix& rho, const Partition& xi,
                                                 std::size_t max_terms, std::size_t trials,
                                                 std::uint64_t seed, double tol) {
    if (!validate_partition(rho.modes(), xi)) {
        throw PartitionError(xi.to_string() + " does not partition " + rho.modes().to_string());
    }
    const ModeSet& y = rho.modes();
    Rng rng(seed);

    // Candidate pool of product physical states, each kept as its per-part
    // factors. Derived candidates first: the product of the state's own
    // marginals, and every occupation product state (these certify product
    // states and diagonal mixtures exactly); random even products fill the
    // rest of the pool.
    std::vector<std::vector<Operator>> candidates;
    auto push_candidate = [&](std::vector<Operator> factors) {
        Operator joint = ordered_product(factors);
        if (!joint.is_hermitian(1e-9)) return;  // unusable as a state
        candidates.push_back(std::move(factors));
    };

    push_candidate(marginals_of(rho.op(), xi));
    for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
        std::vector<Operator> factors;
        for (const ModeSet& part : xi.parts()) {
            const auto pos = positions_in(y, part);
            const std::uint32_t local = restrict_bits(nu, y.size(), pos);
            Operator proj = Operator::zero(part);
            proj.matrix()(local, local) = 1.0;
            factors.push_back(std::move(proj));
        }
        push_candidate(std::move(factors));
    }
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Operator> factors;
        for (const ModeSet& part : xi.parts()) {
            factors.push_back(rng.density_on(part, /*even=*/true));
        }
        push_candidate(std::move(factors));
    }

    // Stack real and imaginary parts; one extra row enforces sum(w) = 1.
    const auto d = static_cast<Eigen::Index>(y.dim());
    const Eigen::Index rows = 2 * d * d + 1;
    const double weight_scale = 8.0;  // emphasis on the convexity constraint
    Eigen::MatrixXd a(rows, static_cast<Eigen::Index>(candidates.size()));
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        const Operator joint = ordered_product(candidates[j]);
        Eigen::Index r = 0;
        for (Eigen::Index row = 0; row < d; ++row) {
            for (Eigen::Index col = 0; col < d; ++col) {
                a(r++, static_cast<Eigen::Index>(j)) = joint.matrix()(row, col).real();
                a(r++, static_cast<Eigen::Index>(j)) = joint.matrix()(row, col).imag();
            }
        }
        a(r, static_cast<Eigen::Index>(j)) = weight_scale;
    }
    Eigen::VectorXd b(rows);
    {
        Eigen::Index r = 0;
        for (Eigen::Index row = 0; row < d; ++row) {
            for (Eigen::Index col = 0; col < d; ++col) {
                b(r++) = rho.op().matrix()(row, col).real();
                b(r++) = rho.op().matrix()(row, col).imag();
            }
        }
        b(r) = weight_scale;
    }

    const Eigen::VectorXd w = nnls(a, b, 4 * candidates.size() + 32);

    SeparabilityCertificate cert;
    Operator mix = Operator::zero(y);
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        const double wj = w(static_cast<Eigen::Index>(j));
        if (wj <= 1e-12) continue;
        cert.weights.push_back(wj);
        cert.factors.push_back(candidates[j]);
        mix = mix + Complex{wj} * ordered_product(candidates[j]);
    }
    cert.residual = mix.max_abs_diff(rho.op());
    double weight_sum = 0.0;
    for (double wj : cert.weights) weight_sum += wj;
    cert.found = cert.residual <= tol && std::abs(weight_sum - 1.0) <= 1e-8 &&
                 cert.weights.size() <= max_terms && !cert.weights.empty();
    return cert;
}

}  // namespace fermikit
