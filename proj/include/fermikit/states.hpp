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

#ifndef FERMIKIT_STATES_HPP
#define FERMIKIT_STATES_HPP

#include <cstdint>
#include <optional>

#include "fermikit/parity.hpp"

namespace fermikit {

/// A density matrix: Hermitian, PSD, unit trace (all within tolerance,
/// checked at construction).
class DensityMatrix {
  public:
    explicit DensityMatrix(Operator op, double tol);

    const Operator& op() const { return op_; }
    const ModeSet& modes() const { return op_.modes(); }

    static DensityMatrix pure(const StateVector& psi, double tol);
    static DensityMatrix maximally_mixed(const ModeSet& modes);

  private:
    Operator op_;
};

/// Reduced state on X via the fermionic partial trace; the output satisfies
/// the DensityMatrix invariants again.
DensityMatrix reduce_state(const DensityMatrix& rho, const ModeSet& x, double tol);

/// Expansion coefficients of the state in the standard or fermionic basis.
/// The standard matrix is the density matrix itself; the fermionic matrix
/// differs entrywise by the f phases. The eigenvalues of the standard
/// coefficient matrix are the state's spectrum.
struct CoeffMatrix {
    ModeSet modes;
    Basis basis;
    Eigen::MatrixXcd entries;
};

CoeffMatrix coeffs(const DensityMatrix& rho, Basis basis);

enum class CorrelationMode { no_ssr, ssr };

struct CorrelationReport {
    bool uncorrelated = false;
    std::optional<bool> product_physical;  // n/a without superselection
    bool physical = false;
    double max_residual_uncorrelated = 0.0;  // |rho (or its all-even part) - product of marginals|
    double max_residual_product = 0.0;       // |rho - product of marginals|
    bool reconstruction_hermitian = false;   // Hermiticity of the marginal product, reported
                                             // separately (the product itself need not be a state
                                             // without superselection)
};

/// Correlation/productness classifier. Marginals are reassembled with the
/// ordered product, parts ordered by smallest mode label. In ssr mode the
/// uncorrelated/product_physical verdicts are memberships of the respective
/// physical state sets, so both include the physicality requirement.
CorrelationReport classify_correlation(const DensityMatrix& rho, const Partition& xi,
                                       CorrelationMode mode, double tol);

/// A sampling-based membership certificate for xi-separability: an explicit
/// convex decomposition into at most max_terms product physical states, if
/// randomized search finds one. This is not a decision procedure; a missing
/// certificate proves nothing.
struct SeparabilityCertificate {
    bool found = false;
    double residual = 0.0;
    std::vector<double> weights;
    std::vector<std::vector<Operator>> factors;  // per term, per part marginals
};

SeparabilityCertificate separability_certificate(const DensityMatrix& rho, const Partition& xi,
                                                 std::size_t max_terms, std::size_t trials,
                                                 std::uint64_t seed, double tol);

}  // namespace fermikit

#endif
