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

#ifndef FERMIKIT_PARITY_HPP
#define FERMIKIT_PARITY_HPP

#include <optional>
#include <vector>

#include "fermikit/algebra.hpp"
#include "fermikit/superop.hpp"

namespace fermikit {

/// State vector on the occupation space of a mode subset.
struct StateVector {
    ModeSet modes;
    Eigen::VectorXcd amplitudes;

    StateVector(ModeSet m, Eigen::VectorXcd amps);
    std::size_t dim() const { return modes.dim(); }
};

/// Fermion number parity operator T_Y: diagonal, entry (-1)^{sum nu_i}.
Operator parity_operator(const ModeSet& y);

/// Projector (I +- T_Y)/2 onto the even/odd-particle-number subspace.
Operator parity_projector(const ModeSet& y, int sign);

enum class ParityClass { even, odd, mixed };

/// Classifies A by Theta(A) = T A T^-1 within tolerance. The zero operator
/// classifies as even.
ParityClass operator_parity(const Operator& a, double tol);

/// Even/odd part of A (the Pi^+- projection).
Operator parity_part(const Operator& a, int sign);

enum class VectorParity { plus, minus, mixed };

/// +-1 if the vector is supported entirely on patterns of that particle
/// number parity; mixed otherwise.
VectorParity vector_parity(const StateVector& v, double tol);

/// Local parity multi-index epsilon: xi -> {+1,-1}, aligned with the
/// canonical part order of the partition.
class ParitySector {
  public:
    ParitySector(Partition xi, std::vector<int> signs);

    /// Parses "++-" (or unicode minus) against xi's canonical part order.
    static ParitySector parse(const Partition& xi, std::string_view text);

    const Partition& partition() const { return xi_; }
    const std::vector<int>& signs() const { return signs_; }
    int sign(std::size_t part_index) const { return signs_.at(part_index); }

    /// All 2^|xi| sectors in lexicographic order (+ before -).
    static std::vector<ParitySector> all(const Partition& xi);

    /// The all-even sector.
    static ParitySector all_even(const Partition& xi);

    std::string to_string() const;

  private:
    Partition xi_;
    std::vector<int> signs_;
};

/// Vector-level local parity projector: prod_X embed(P_X^{eps_X}), a
/// diagonal Operator.
Operator local_parity_projector(const Partition& xi, const ParitySector& eps);

/// Operator-level local parity projector Pi_xi^eps as a superoperator,
/// diagonal in the vectorized basis: keeps the matrix entries (nu,nu') whose
/// local transition parity matches eps in every part.
SuperOp local_parity_projector_map(const Partition& xi, const ParitySector& eps);

/// Sector decomposition of an operator: the nonzero Pi_xi^eps projections,
/// zero blocks (max entry <= tol) omitted.
std::vector<std::pair<ParitySector, Operator>> sector_decomposition(const Operator& a,
                                                                    const Partition& xi,
                                                                    double tol);

/// Diagonal unitary U_xivec with entries phase_u; conjugation by it turns
/// the plain interleaved tensor product into the ordered product on locally
/// even operands.
Operator tps_unitary(const OrderedPartition& xi);

/// Joint state vector of locally parity-pure factors: U_xivec (tensor of
/// the factors), the tensor product structure on the physical subspace.
StateVector tps_join(const OrderedPartition& xi, std::span<const StateVector> factors);

struct ProductExtensionReport {
    int m_even = 0;
    int m_odd = 0;
    int m_mixed = 0;
    bool self_adjoint = false;          // direct matrix check of the product
    bool psd = false;                   // direct eigenvalue check
    bool predicted_self_adjoint = false;
    std::optional<bool> predicted_psd;  // set when every operand is PSD
    bool operands_all_psd = false;
    double max_nonhermiticity = 0.0;
    double min_eigenvalue = 0.0;
};

/// Classifies the ordered product of Hermitian operands: parity counts
/// (m+, m-, m0), direct self-adjointness/PSD checks, and the closed-form
/// predicates. Throws InputError for non-Hermitian or zero operands, and
/// Error if the matrix checks disagree with the predicates beyond tolerance.
ProductExtensionReport product_extension_classify(std::span<const Operator> operands, double tol);
ProductExtensionReport product_extension_classify(std::initializer_list<Operator> operands,
                                                  double tol);

}  // namespace fermikit

#endif
