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

#ifndef FERMIKIT_ALGEBRA_HPP
#define FERMIKIT_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>

#include "fermikit/modes.hpp"
#include "fermikit/phase.hpp"

namespace fermikit {

using Complex = std::complex<double>;

/// A concrete operator on the occupation space of a mode subset: a complex
/// 2^|Y| x 2^|Y| coefficient matrix in the computational basis, tagged with
/// its ModeSet. Row/column index = pattern_index of nu/nu'. Whether the
/// coefficients are read in the standard or the fermionic basis is a
/// property of the constructor/conversion that produced them, not a tag on
/// the type.
class Operator {
  public:
    Operator(ModeSet modes, Eigen::MatrixXcd entries);

    static Operator zero(const ModeSet& modes);
    static Operator identity(const ModeSet& modes);

    const ModeSet& modes() const { return modes_; }
    const Eigen::MatrixXcd& matrix() const { return mat_; }
    Eigen::MatrixXcd& matrix() { return mat_; }
    std::size_t dim() const { return modes_.dim(); }

    Operator dagger() const { return Operator(modes_, mat_.adjoint()); }
    Complex trace() const { return mat_.trace(); }

    /// The 1x1 entry of an operator on the empty ModeSet.
    Complex scalar() const;

    double max_abs() const { return mat_.size() ? mat_.cwiseAbs().maxCoeff() : 0.0; }
    double max_abs_diff(const Operator& other) const;
    bool approx_equal(const Operator& other, double tol) const;
    bool is_hermitian(double tol) const { return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol; }

    Operator operator+(const Operator& other) const;
    Operator operator-(const Operator& other) const;
    Operator operator*(const Operator& other) const;
    friend Operator operator*(Complex c, const Operator& a) { return Operator(a.modes_, c * a.mat_); }

  private:
    ModeSet modes_;
    Eigen::MatrixXcd mat_;
};

/// Hilbert-Schmidt inner product <A,B> = Tr(A^dagger B). ShapeError on
/// mismatched ModeSets.
Complex hs_inner(const Operator& a, const Operator& b);
double hs_norm(const Operator& a);

enum class Basis { standard, fermionic };

/// Matrix unit E_Y^{nu,nu'} (standard) or its phase-adjusted counterpart
/// E~ = f_Y[nu,nu'] E (fermionic).
Operator elementary(const ModeSet& y, const OccPattern& nu, const OccPattern& nu_prime, Basis basis);

enum class LadderKind { create, annihilate, number, hole, phase_op, identity };

/// Jordan-Wigner representation of a single-mode operator on mode i inside
/// Y: phase strings p_k on the modes k < i for the parity-odd selections,
/// plain identity padding otherwise. Built directly from the phase-string
/// form, independently of phase_f (cross-checked in the test suites).
Operator jw_ladder(ModeLabel i, const ModeSet& y, LadderKind which);

enum class Direction { forward, inverse };

/// Phi_Y: entrywise multiplication by the f table. Forward and inverse
/// coincide numerically (f^2 = 1); both directions are exposed for clarity.
Operator phi(const Operator& a, Direction direction = Direction::forward);

/// Psi_xi: entrywise multiplication by the h table.
Operator psi_map(const Partition& xi, const Operator& a, Direction direction = Direction::forward);

/// Lambda_xivec: entrywise multiplication by the l table; an involution.
Operator lambda_map(const OrderedPartition& xi, const Operator& a,
                    Direction direction = Direction::forward);

/// Plain tensor product with rows/columns re-sorted into the canonical index
/// order of the union ModeSet (operand mode labels interleave).
Operator tensor_standard(std::span<const Operator> operands);

/// Fermionic tensor product: entrywise phase_h of the induced partition
/// times tensor_standard. The partition is derived from the operands' mode
/// sets; PartitionError on overlap.
Operator tensor_fermionic(std::span<const Operator> operands);

/// Fermionic canonical embedding of A into Y: A (x)~ I_{Y\X}.
Operator embed(const ModeSet& y, const Operator& a);

/// Ordered product of embeddings, in operand order: prod_k embed(Y, A_k)
/// with Y the union of the operand mode sets.
Operator ordered_product(std::span<const Operator> operands);

// Convenience overloads for brace-initialized operand lists.
Operator tensor_standard(std::initializer_list<Operator> operands);
Operator tensor_fermionic(std::initializer_list<Operator> operands);
Operator ordered_product(std::initializer_list<Operator> operands);

/// Fermionic partial trace down to X: the standard-basis matrix of the
/// reduction, with the f phase corrections. Trace- and parity-preserving.
Operator partial_trace(const Operator& a, const ModeSet& x);

}  // namespace fermikit

#endif
