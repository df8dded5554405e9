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

#ifndef FERMIKIT_MAPS_HPP
#define FERMIKIT_MAPS_HPP

#include <optional>

#include "fermikit/parity.hpp"
#include "fermikit/superop.hpp"

namespace fermikit {

enum class MapProductKind { fermionic, ordered };

/// Fermionic tensor product of maps of disjoint mode subsets.
///
/// fermionic: Psi_xi (tensor of Phi-conjugated factors) Psi_xi^-1, acting
/// blockwise on fermionic xi-elementary tensors.
/// ordered:   the Lambda_xivec conjugation of the fermionic kind, acting
/// blockwise on xivec-elementary products in operand order.
SuperOp map_tensor(MapProductKind kind, std::span<const SuperOp> operands);
SuperOp map_tensor(MapProductKind kind, std::initializer_list<SuperOp> operands);

/// Embeds a map into the algebra of y with the identity map on the
/// complement of its home modes.
SuperOp map_embed(MapProductKind kind, const ModeSet& y, const SuperOp& omega);

/// Fermionic map parity: compares Theta o Omega against +-(Omega o Theta).
ParityClass map_parity(const SuperOp& omega, double tol);

/// Even/odd part of a map (the level-III projectors).
SuperOp map_parity_part(const SuperOp& omega, int sign);

/// An even map that annihilates odd operators.
bool is_physical_map(const SuperOp& omega, double tol);

/// Choi matrix: block (nu,nu') equals Omega(E^{nu,nu'}); the full matrix is
/// (d_in*d_out) x (d_in*d_out). Omega is CP iff this is PSD.
struct ChoiMatrix {
    Eigen::MatrixXcd matrix;
    double hermiticity_residual = 0.0;
    double min_eigenvalue = 0.0;
};

ChoiMatrix choi(const SuperOp& omega);

struct TpcpReport {
    bool completely_positive = false;
    bool trace_preserving = false;
    double min_choi_eigenvalue = 0.0;
    double choi_hermiticity_residual = 0.0;
    double max_trace_residual = 0.0;

    bool tpcp() const { return completely_positive && trace_preserving; }
};

TpcpReport tpcp_report(const SuperOp& omega, double tol);
bool is_tpcp(const SuperOp& omega, double tol);

/// The fermionic partial trace Y -> X as a superoperator.
SuperOp partial_trace_map(const ModeSet& y, const ModeSet& x);

/// Locality certificate: the recovered local physical map(s), the
/// least-squares residual outside the freedom the definition allows, and
/// the verdict at the given threshold.
struct LocalityCertificate {
    bool local = false;
    double residual = 0.0;
    std::vector<SuperOp> recovered;  // one physical map per part (one for a ModeSet target)
};

/// X-local test: Omega = (embedded physical Omega_X) + Xi with Xi physical
/// and vanishing on the {X, Y\X}-locally physical subalgebra. Solved by
/// linear least squares on the all-even compression; residual threshold
/// 1e-8 by default (looser than entrywise tolerance since it composes a
/// solve).
LocalityCertificate is_local_map(const SuperOp& omega, const ModeSet& x, double threshold = 1e-8);

/// xi-local test: the embedded part is an ordered product of per-part
/// physical maps, fitted by sequential nearest-Kronecker-product splits.
LocalityCertificate is_local_map(const SuperOp& omega, const Partition& xi,
                                 double threshold = 1e-8);

}  // namespace fermikit

#endif
