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

#ifndef FERMIKIT_SUPEROP_HPP
#define FERMIKIT_SUPEROP_HPP

#include <functional>

#include "fermikit/algebra.hpp"

namespace fermikit {

/// vec(A) with index = row_index * 2^|Y| + col_index (row-major over
/// (row, col) basis pairs). This convention is fixed once; any alternative
/// must convert at the boundary.
Eigen::VectorXcd vec_rowmajor(const Eigen::MatrixXcd& a);
Eigen::MatrixXcd unvec_rowmajor(const Eigen::VectorXcd& v, Eigen::Index rows, Eigen::Index cols);

/// A linear map between operator algebras of mode subsets, stored as its
/// matrix on vectorized operators. The common case maps a subset to itself
/// (a 4^|Y| x 4^|Y| matrix); trace-like maps have a smaller target subset.
class SuperOp {
  public:
    SuperOp(ModeSet in_modes, ModeSet out_modes, Eigen::MatrixXcd matrix);
    SuperOp(ModeSet modes, Eigen::MatrixXcd matrix);  // endomorphism

    static SuperOp identity(const ModeSet& modes);
    static SuperOp zero(const ModeSet& in_modes, const ModeSet& out_modes);

    /// Builds the matrix column by column from the action on matrix units.
    static SuperOp from_action(const ModeSet& in_modes, const ModeSet& out_modes,
                               const std::function<Operator(const Operator&)>& action);

    /// A |-> U A U^dagger.
    static SuperOp conjugation(const Operator& u);
    /// A |-> L A.
    static SuperOp left_multiplication(const Operator& l);
    /// A |-> A R.
    static SuperOp right_multiplication(const Operator& r);
    /// Tr: A_Y -> A_{}, a 1 x 4^|Y| matrix.
    static SuperOp trace_map(const ModeSet& y);

    const ModeSet& in_modes() const { return in_; }
    const ModeSet& out_modes() const { return out_; }
    bool is_endomorphism() const { return in_ == out_; }
    const Eigen::MatrixXcd& matrix() const { return mat_; }
    Eigen::MatrixXcd& matrix() { return mat_; }

    Operator apply(const Operator& a) const;

    /// this after inner.
    SuperOp compose(const SuperOp& inner) const;

    /// Hilbert-Schmidt adjoint (matrix adjoint, in/out swapped).
    SuperOp adjoint() const;

    SuperOp operator+(const SuperOp& other) const;
    SuperOp operator-(const SuperOp& other) const;
    friend SuperOp operator*(Complex c, const SuperOp& s) { return SuperOp(s.in_, s.out_, c * s.mat_); }

    double max_abs() const { return mat_.size() ? mat_.cwiseAbs().maxCoeff() : 0.0; }
    double max_abs_diff(const SuperOp& other) const;
    bool approx_equal(const SuperOp& other, double tol) const;

  private:
    ModeSet in_;
    ModeSet out_;
    Eigen::MatrixXcd mat_;
};

}  // namespace fermikit

#endif
