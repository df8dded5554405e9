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

#include "fermikit/check.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "fermikit/json_io.hpp"
#include "fermikit/maps.hpp"
#include "fermikit/random.hpp"
#include "fermikit/states.hpp"

namespace fermikit {

namespace {

class Recorder {
  public:
    explicit Recorder(std::string suite) : report_{std::move(suite), {}} {}

    void observe(const std::string& name, double residual, double tol, const std::string& note) {
        InvariantResult& inv = slot(name);
        inv.cases += 1;
        inv.max_residual = std::max(inv.max_residual, residual);
        if (residual > tol && inv.pass) {
            inv.pass = false;
            inv.counterexample = note;
        }
    }

    void expect(const std::string& name, bool ok, const std::string& note) {
        observe(name, ok ? 0.0 : 1.0, 0.5, note);
    }

    SuiteReport take() {
        for (const std::string& name : order_) report_.invariants.push_back(slots_.at(name));
        return std::move(report_);
    }

  private:
    InvariantResult& slot(const std::string& name) {
        auto it = slots_.find(name);
        if (it == slots_.end()) {
            order_.push_back(name);
            it = slots_.emplace(name, InvariantResult{name, true, 0.0, 0, {}}).first;
        }
        return it->second;
    }

    SuiteReport report_;
    std::vector<std::string> order_;
    std::map<std::string, InvariantResult> slots_;
};

// ---------------------------------------------------------------------------
// Independent reference routes used by the suites (deliberately avoiding the
// code paths they check).

/// Plain partial index contraction, no phase factors.
Operator standard_partial_trace(const Operator& a, const ModeSet& x) {
    const ModeSet& y = a.modes();
    const ModeSet rest = y.set_difference(x);
    const auto pos_x = positions_in(y, x);
    const auto pos_rest = positions_in(y, rest);
    const std::size_t n = y.size();
    Operator out = Operator::zero(x);
    for (std::uint32_t alpha = 0; alpha < x.dim(); ++alpha) {
        for (std::uint32_t beta = 0; beta < x.dim(); ++beta) {
            Complex sum = 0.0;
            for (std::uint32_t gamma = 0; gamma < rest.dim(); ++gamma) {
                const std::uint32_t shared = scatter_bits(gamma, n, pos_rest);
                sum += a.matrix()(scatter_bits(alpha, n, pos_x) | shared,
                                  scatter_bits(beta, n, pos_x) | shared);
            }
            out.matrix()(alpha, beta) = sum;
        }
    }
    return out;
}

/// Reduction through the defining adjoint relation: the coefficients of the
/// reduced operator against the fermionic basis are the pairings of the
/// input with the embedded fermionic basis elements.
Operator adjoint_definition_reduction(const Operator& a, const ModeSet& x) {
    Operator out = Operator::zero(x);
    for (std::uint32_t mu = 0; mu < x.dim(); ++mu) {
        for (std::uint32_t mup = 0; mup < x.dim(); ++mup) {
            const Operator unit = elementary(x, index_pattern(x, mu), index_pattern(x, mup),
                                             Basis::fermionic);
            const Complex coeff = hs_inner(embed(a.modes(), unit), a);
            out = out + coeff * unit;
        }
    }
    return out;
}

std::vector<ModeSet> subset_lattice(const ModeSet& y) {
    std::vector<ModeSet> subsets;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << y.size()); ++mask) {
        std::vector<ModeLabel> labels;
        for (std::size_t p = 0; p < y.size(); ++p) {
            if (mask & (std::uint32_t{1} << p)) labels.push_back(y.label_at(p));
        }
        subsets.emplace_back(std::move(labels));
    }
    return subsets;
}

/// All partitions of y (restricted growth strings).
std::vector<Partition> all_partitions(const ModeSet& y) {
    std::vector<Partition> result;
    const std::size_t n = y.size();
    if (n == 0) return result;
    std::vector<std::size_t> assign(n, 0);
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t k, std::size_t blocks) {
        if (k == n) {
            std::vector<std::vector<ModeLabel>> groups(blocks);
            for (std::size_t p = 0; p < n; ++p) groups[assign[p]].push_back(y.label_at(p));
            std::vector<ModeSet> parts;
            for (auto& g : groups) parts.emplace_back(std::move(g));
            result.emplace_back(std::move(parts));
            return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
            assign[k] = b;
            grow(k + 1, std::max(blocks, b + 1));
        }
    };
    grow(0, 0);
    return result;
}

std::vector<OrderedPartition> all_orderings(const Partition& xi) {
    std::vector<ModeSet> parts = xi.parts();
    std::sort(parts.begin(), parts.end(),
              [](const ModeSet& a, const ModeSet& b) { return a.label_at(0) < b.label_at(0); });
    std::vector<OrderedPartition> result;
    do {
        result.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end(),
                                   [](const ModeSet& a, const ModeSet& b) {
                                       return a.label_at(0) < b.label_at(0);
                                   }));
    return result;
}

/// A random partition of y into 2..max_parts parts.
Partition random_partition(Rng& rng, const ModeSet& y, std::size_t max_parts) {
    const std::size_t want = 2 + rng.index(std::max<std::size_t>(1, max_parts - 1));
    while (true) {
        std::vector<std::vector<ModeLabel>> groups(std::min(want, y.size()));
        for (ModeLabel i : y) groups[rng.index(groups.size())].push_back(i);
        std::vector<ModeSet> parts;
        for (auto& g : groups) {
            if (!g.empty()) parts.emplace_back(std::move(g));
        }
        if (parts.size() >= 2 || y.size() < 2) return Partition(std::move(parts));
    }
}

OrderedPartition shuffled(Rng& rng, const Partition& xi) {
    std::vector<ModeSet> parts = xi.parts();
    for (std::size_t k = parts.size(); k > 1; --k) std::swap(parts[k - 1], parts[rng.index(k)]);
    return OrderedPartition(std::move(parts));
}

std::string describe(const ModeSet& y, const std::string& extra) {
    return "Y=" + y.to_string() + (extra.empty() ? "" : ", " + extra);
}

// ---------------------------------------------------------------------------

SuiteReport suite_car(const CheckOptions& opt) {
    Recorder rec("car");
    const std::size_t top = std::min<std::size_t>(opt.max_modes, 5);
    std::vector<ModeSet> sets;
    for (std::size_t n = 1; n <= top; ++n) sets.push_back(ModeSet::range(1, static_cast<ModeLabel>(n)));
    sets.push_back(ModeSet{2, 5, 9});
    for (const ModeSet& y : sets) {
        for (ModeLabel i : y) {
            for (ModeLabel j : y) {
                const Operator ai = jw_ladder(i, y, LadderKind::annihilate);
                const Operator aj = jw_ladder(j, y, LadderKind::annihilate);
                const Operator ci = jw_ladder(i, y, LadderKind::create);
                const Operator cj = jw_ladder(j, y, LadderKind::create);
                const Operator expected =
                    i == j ? Operator::identity(y) : Operator::zero(y);
                const std::string note = describe(y, "i=" + std::to_string(i) + ", j=" + std::to_string(j));
                rec.observe("{a_i, a_j} = 0", (ai * aj + aj * ai).max_abs(), 0.0, note);
                rec.observe("{a_i+, a_j+} = 0", (ci * cj + cj * ci).max_abs(), 0.0, note);
                rec.observe("{a_i, a_j+} = delta_ij I",
                            (ai * cj + cj * ai).max_abs_diff(expected), 0.0, note);
            }
        }
    }
    return rec.take();
}

SuiteReport suite_phi(const CheckOptions& opt) {
    Recorder rec("phi");
    Rng rng(opt.seed);

    for (std::size_t n = 0; n <= std::min<std::size_t>(opt.max_modes, 6); ++n) {
        const ModeSet y = n == 0 ? ModeSet{} : ModeSet::range(1, static_cast<ModeLabel>(n));
        for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
            rec.observe("f diagonal is +1",
                        phase_f_bits(n, nu, nu).value == 1 ? 0.0 : 1.0, 0.0,
                        describe(y, "nu=" + std::to_string(nu)));
        }
    }

    // Grouped form: f factorizes as the cross-block kernel times the
    // restricted f factors, for every partition.
    for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_modes, 5); ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        for (const Partition& xi : all_partitions(y)) {
            std::vector<std::vector<std::size_t>> pos;
            for (const ModeSet& part : xi.parts()) pos.push_back(positions_in(y, part));
            const auto block = position_ranks(xi);
            for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
                for (std::uint32_t nup = 0; nup < y.dim(); ++nup) {
                    int grouped = phase_h_bits(block, nu, nup).value;
                    for (std::size_t k = 0; k < xi.size(); ++k) {
                        grouped *= phase_f_bits(xi.part(k).size(),
                                                restrict_bits(nu, n, pos[k]),
                                                restrict_bits(nup, n, pos[k]))
                                       .value;
                    }
                    rec.observe("f grouped form over partitions",
                                grouped == phase_f_bits(n, nu, nup).value ? 0.0 : 1.0, 0.0,
                                describe(y, "xi=" + xi.to_string()));
                }
            }
        }
    }

    // Phi is unitary for the Hilbert-Schmidt inner product.
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = 1 + rng.index(opt.max_modes);
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const Operator a = rng.operator_on(y);
        const Operator b = rng.operator_on(y);
        rec.observe("<Phi(A),Phi(B)> = <A,B>",
                    std::abs(hs_inner(phi(a), phi(b)) - hs_inner(a, b)), opt.tol, describe(y, ""));
    }

    // Phi o Gamma = Gamma~, exhaustively over modes and the four units.
    for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_modes, 5); ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const LadderKind kinds[] = {LadderKind::create, LadderKind::annihilate, LadderKind::number,
                                    LadderKind::hole};
        for (ModeLabel i : y) {
            for (LadderKind kind : kinds) {
                Eigen::Matrix2cd unit = Eigen::Matrix2cd::Zero();
                switch (kind) {
                    case LadderKind::create: unit(1, 0) = 1.0; break;
                    case LadderKind::annihilate: unit(0, 1) = 1.0; break;
                    case LadderKind::number: unit(1, 1) = 1.0; break;
                    default: unit(0, 0) = 1.0; break;
                }
                const Operator single(ModeSet{i}, unit);
                const ModeSet rest = y.set_difference(ModeSet{i});
                const Operator standard_embedding =
                    rest.empty() ? single : tensor_standard({single, Operator::identity(rest)});
                rec.observe("Phi o Gamma = Gamma~",
                            phi(standard_embedding).max_abs_diff(jw_ladder(i, y, kind)), 0.0,
                            describe(y, "i=" + std::to_string(i)));
            }
        }
    }

    // Product of fermionic basis elements, exhaustive for small Y.
    for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_modes, 3); ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
            for (std::uint32_t nup = 0; nup < y.dim(); ++nup) {
                const Operator left = elementary(y, index_pattern(y, nu), index_pattern(y, nup),
                                                 Basis::fermionic);
                for (std::uint32_t mu = 0; mu < y.dim(); ++mu) {
                    for (std::uint32_t mup = 0; mup < y.dim(); ++mup) {
                        const Operator right = elementary(y, index_pattern(y, mu),
                                                          index_pattern(y, mup), Basis::fermionic);
                        Operator expected = Operator::zero(y);
                        if (nup == mu) {
                            unsigned acc = 0;
                            unsigned suffix = 0;
                            for (std::size_t p = n; p-- > 0;) {
                                const unsigned mu_p = (mu >> (n - 1 - p)) & 1u;
                                const unsigned mup_p = (mup >> (n - 1 - p)) & 1u;
                                acc ^= (mu_p ^ mup_p) & suffix;
                                suffix ^= ((nu >> (n - 1 - p)) ^ (nup >> (n - 1 - p))) & 1u;
                            }
                            const double sign = acc ? -1.0 : 1.0;
                            expected = Complex{sign} *
                                       elementary(y, index_pattern(y, nu), index_pattern(y, mup),
                                                  Basis::fermionic);
                        }
                        rec.observe("fermionic basis product rule",
                                    (left * right).max_abs_diff(expected), 0.0, describe(y, ""));
                    }
                }
            }
        }
    }

    return rec.take();
}

SuiteReport suite_tensor(const CheckOptions& opt) {
    Recorder rec("tensor");
    Rng rng(opt.seed + 1);

    // Defining relation on fermionic basis elements, small exhaustive.
    for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_modes, 4); ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        for (const Partition& xi : all_partitions(y)) {
            if (xi.size() < 2) continue;
            std::vector<std::vector<std::size_t>> pos;
            for (const ModeSet& part : xi.parts()) pos.push_back(positions_in(y, part));
            for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
                for (std::uint32_t nup = 0; nup < y.dim(); ++nup) {
                    std::vector<Operator> factors;
                    for (std::size_t k = 0; k < xi.size(); ++k) {
                        const ModeSet& part = xi.part(k);
                        factors.push_back(elementary(
                            part, index_pattern(part, restrict_bits(nu, n, pos[k])),
                            index_pattern(part, restrict_bits(nup, n, pos[k])), Basis::fermionic));
                    }
                    const Operator joint =
                        elementary(y, index_pattern(y, nu), index_pattern(y, nup), Basis::fermionic);
                    rec.observe("E~_Y = fermionic tensor of E~_X",
                                tensor_fermionic(factors).max_abs_diff(joint), 0.0,
                                describe(y, "xi=" + xi.to_string()));
                }
            }
        }
    }

    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = 2 + rng.index(std::max<std::size_t>(1, opt.max_modes - 1));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const Partition xi = random_partition(rng, y, 3);

        std::vector<Operator> a_ops, b_ops;
        for (const ModeSet& part : xi.parts()) {
            a_ops.push_back(rng.operator_on(part));
            b_ops.push_back(rng.operator_on(part));
        }

        Complex product = 1.0;
        for (std::size_t k = 0; k < xi.size(); ++k) product *= hs_inner(a_ops[k], b_ops[k]);
        rec.observe("HS product rule for fermionic tensors",
                    std::abs(hs_inner(tensor_fermionic(a_ops), tensor_fermionic(b_ops)) - product),
                    opt.tol, describe(y, "xi=" + xi.to_string()));

        // Psi is unitary.
        const Operator a = rng.operator_on(y);
        const Operator b = rng.operator_on(y);
        rec.observe("<Psi(A),Psi(B)> = <A,B>",
                    std::abs(hs_inner(psi_map(xi, a), psi_map(xi, b)) - hs_inner(a, b)), opt.tol,
                    describe(y, "xi=" + xi.to_string()));

        // Embedding homomorphism and daggers.
        const ModeSet& x = xi.part(rng.index(xi.size()));
        const Operator p = rng.operator_on(x);
        const Operator q = rng.operator_on(x);
        rec.observe("embed(A)embed(B) = embed(AB)",
                    (embed(y, p) * embed(y, q)).max_abs_diff(embed(y, p * q)), opt.tol,
                    describe(y, "X=" + x.to_string()));
        rec.observe("embed(A+) = embed(A)+",
                    embed(y, p.dagger()).max_abs_diff(embed(y, p).dagger()), opt.tol,
                    describe(y, "X=" + x.to_string()));

        // Nesting of embeddings through a random intermediate subset.
        ModeSet mid = x;
        for (ModeLabel i : y.set_difference(x)) {
            if (rng.uniform() < 0.5) mid = mid.set_union(ModeSet{i});
        }
        rec.observe("embed nesting",
                    embed(y, embed(mid, p)).max_abs_diff(embed(y, p)), opt.tol,
                    describe(y, "X=" + x.to_string() + ", mid=" + mid.to_string()));

        // Unitary equivalence with the plain embedding.
        const ModeSet rest = y.set_difference(x);
        const Operator u = tps_unitary(OrderedPartition{x, rest});
        const Operator plain = rest.empty() ? p : tensor_standard({p, Operator::identity(rest)});
        rec.observe("embed = U (A x I) U+",
                    embed(y, p).max_abs_diff(Operator(y, u.matrix() * plain.matrix() *
                                                             u.matrix().adjoint())),
                    opt.tol, describe(y, "X=" + x.to_string()));
    }

    // Associativity under partition merging, randomized three-level nesting.
    // The inner joints are fermionic tensors for the fermionic product and
    // ordered products for the ordered one; the merged ordering is the
    // concatenation of the inner orderings.
    for (std::size_t t = 0; t < opt.trials / 2 + 1; ++t) {
        const std::size_t n = std::max<std::size_t>(3, std::min<std::size_t>(opt.max_modes, 5));
        const ModeSet z = ModeSet::range(1, static_cast<ModeLabel>(n));
        const Partition upsilon = random_partition(rng, z, 2);
        std::vector<Operator> fermionic_joints;
        std::vector<Operator> ordered_joints;
        std::vector<Operator> flat;
        bool nontrivial = false;
        for (const ModeSet& ypart : upsilon.parts()) {
            const Partition inner = random_partition(rng, ypart, 2);
            if (inner.size() > 1) nontrivial = true;
            std::vector<Operator> inner_ops;
            for (const ModeSet& xpart : inner.parts()) {
                inner_ops.push_back(rng.operator_on(xpart));
                flat.push_back(inner_ops.back());
            }
            fermionic_joints.push_back(tensor_fermionic(inner_ops));
            ordered_joints.push_back(ordered_product(inner_ops));
        }
        if (!nontrivial) continue;
        rec.observe("fermionic tensor associativity",
                    tensor_fermionic(fermionic_joints).max_abs_diff(tensor_fermionic(flat)), opt.tol,
                    describe(z, "upsilon=" + upsilon.to_string()));
        rec.observe("ordered product associativity",
                    ordered_product(ordered_joints).max_abs_diff(ordered_product(flat)), opt.tol,
                    describe(z, "upsilon=" + upsilon.to_string()));
    }

    return rec.take();
}

SuiteReport suite_lambda(const CheckOptions& opt) {
    Recorder rec("lambda");
    Rng rng(opt.seed + 2);

    // Pairwise factorization of the l kernel, exhaustive for small sets.
    for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_modes, 4); ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        for (const Partition& xi : all_partitions(y)) {
            if (xi.size() < 2) continue;
            for (const OrderedPartition& ord : all_orderings(xi)) {
                const auto rank = position_ranks(ord);
                for (std::uint32_t nu = 0; nu < y.dim(); ++nu) {
                    for (std::uint32_t nup = 0; nup < y.dim(); ++nup) {
                        int paired = 1;
                        for (std::size_t s = 0; s < ord.size(); ++s) {
                            for (std::size_t r = s + 1; r < ord.size(); ++r) {
                                const ModeSet pair_set = ord.part(s).set_union(ord.part(r));
                                const auto pos = positions_in(y, pair_set);
                                const OrderedPartition pair_ord{ord.part(s), ord.part(r)};
                                paired *= phase_l_bits(position_ranks(pair_ord),
                                                       restrict_bits(nu, n, pos),
                                                       restrict_bits(nup, n, pos))
                                              .value;
                            }
                        }
                        rec.observe("l pairwise factorization",
                                    paired == phase_l_bits(rank, nu, nup).value ? 0.0 : 1.0, 0.0,
                                    describe(y, "ord=" + ord.to_string()));
                    }
                }
            }
        }
    }

    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = 2 + rng.index(std::max<std::size_t>(1, opt.max_modes - 1));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const Partition xi = random_partition(rng, y, 3);
        const OrderedPartition ord = shuffled(rng, xi);

        const Operator a = rng.operator_on(y);
        const Operator b = rng.operator_on(y);
        rec.observe("<Lambda(A),Lambda(B)> = <A,B>",
                    std::abs(hs_inner(lambda_map(ord, a), lambda_map(ord, b)) - hs_inner(a, b)),
                    opt.tol, describe(y, "ord=" + ord.to_string()));

        // Lambda connects the fermionic tensorial and algebraic products.
        std::vector<Operator> ops;
        for (const ModeSet& part : ord.parts()) ops.push_back(rng.operator_on(part));
        rec.observe("Lambda(fermionic tensor) = ordered product",
                    lambda_map(ord, tensor_fermionic(ops)).max_abs_diff(ordered_product(ops)),
                    opt.tol, describe(y, "ord=" + ord.to_string()));

        // Lambda leaves single-mode embeddings invariant.
        const ModeLabel i = y.label_at(rng.index(y.size()));
        const Operator single = embed(y, rng.operator_on(ModeSet{i}));
        rec.observe("Lambda fixes single-mode operators",
                    lambda_map(ord, single).max_abs_diff(single), opt.tol,
                    describe(y, "i=" + std::to_string(i)));

        // Partial trace is Lambda-invariant for bipartitions.
        const ModeSet& x = xi.part(rng.index(xi.size()));
        const OrderedPartition bip{x, y.set_difference(x)};
        rec.observe("partial trace o Lambda = partial trace",
                    partial_trace(lambda_map(bip, a), x).max_abs_diff(partial_trace(a, x)), opt.tol,
                    describe(y, "X=" + x.to_string()));
    }

    // Lambda is the identity for contiguous Jordan-Wigner-ordered partitions.
    for (std::size_t n = 2; n <= std::min<std::size_t>(opt.max_modes, 6); ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        for (std::size_t cut = 1; cut < n; ++cut) {
            const OrderedPartition ord{ModeSet::range(1, static_cast<ModeLabel>(cut)),
                                       ModeSet::range(static_cast<ModeLabel>(cut + 1),
                                                      static_cast<ModeLabel>(n))};
            const SignTable table = emit_table_l(ord);
            const bool all_plus =
                std::all_of(table.entries.begin(), table.entries.end(), [](int e) { return e == 1; });
            rec.expect("Lambda = identity for contiguous ordered partitions", all_plus,
                       describe(y, "ord=" + ord.to_string()));
        }
    }

    return rec.take();
}

SuiteReport suite_ptrace(const CheckOptions& opt) {
    Recorder rec("ptrace");
    Rng rng(opt.seed + 3);

    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n =
            3 + rng.index(std::max<std::size_t>(1, std::min<std::size_t>(opt.max_modes, 5) - 2));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        Operator a = rng.hermitian_on(y);
        a = Complex{1.0 / a.trace()} * a;  // unit trace

        const auto subsets = subset_lattice(y);
        const ModeSet& x = subsets[rng.index(subsets.size())];
        const Operator reduced = partial_trace(a, x);

        // Oracle (a): conjugated-trace route.
        const ModeSet rest = y.set_difference(x);
        std::vector<ModeSet> bip_parts;
        if (!x.empty()) bip_parts.push_back(x);
        if (!rest.empty()) bip_parts.push_back(rest);
        const Operator u = tps_unitary(OrderedPartition(bip_parts));
        const Operator conjugated(y, u.matrix().adjoint() * a.matrix() * u.matrix());
        rec.observe("partial trace vs conjugated-trace oracle",
                    reduced.max_abs_diff(standard_partial_trace(conjugated, x)), opt.tol,
                    describe(y, "X=" + x.to_string()));

        // Oracle (b): adjoint-definition route over the fermionic basis.
        rec.observe("partial trace vs adjoint-definition oracle",
                    reduced.max_abs_diff(adjoint_definition_reduction(a, x)), opt.tol,
                    describe(y, "X=" + x.to_string()));

        // Trace preservation and dagger compatibility.
        rec.observe("partial trace preserves the trace",
                    std::abs(reduced.trace() - a.trace()), opt.tol, describe(y, "X=" + x.to_string()));
        const Operator g = rng.operator_on(y);
        rec.observe("partial trace commutes with dagger",
                    partial_trace(g.dagger(), x).max_abs_diff(partial_trace(g, x).dagger()), opt.tol,
                    describe(y, "X=" + x.to_string()));

        // Adjointness against the fermionic canonical embedding.
        const Operator small = rng.operator_on(x);
        rec.observe("<embed(A),B> = <A,Tr~(B)>",
                    std::abs(hs_inner(embed(y, small), g) - hs_inner(small, partial_trace(g, x))),
                    opt.tol, describe(y, "X=" + x.to_string()));

        // Nesting through a random intermediate subset.
        ModeSet mid = x;
        for (ModeLabel i : rest) {
            if (rng.uniform() < 0.5) mid = mid.set_union(ModeSet{i});
        }
        rec.observe("partial trace nesting",
                    partial_trace(partial_trace(g, mid), x).max_abs_diff(partial_trace(g, x)),
                    opt.tol, describe(y, "X=" + x.to_string() + ", mid=" + mid.to_string()));
    }

    // Positivity preservation on genuine states.
    for (std::size_t t = 0; t < opt.trials / 2 + 1; ++t) {
        const std::size_t n = 2 + rng.index(std::max<std::size_t>(1, opt.max_modes - 1));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const DensityMatrix rho(rng.density_on(y), 1e-9);
        const auto subsets = subset_lattice(y);
        const ModeSet& x = subsets[rng.index(subsets.size())];
        bool ok = true;
        try {
            reduce_state(rho, x, opt.tol);
        } catch (const StateError&) {
            ok = false;
        }
        rec.expect("reduction preserves state invariants", ok, describe(y, "X=" + x.to_string()));
    }

    return rec.take();
}

SuiteReport suite_parity(const CheckOptions& opt) {
    Recorder rec("parity");
    Rng rng(opt.seed + 4);
    const double commutator_tol = 1e-12;

    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = 2 + rng.index(std::max<std::size_t>(1, std::min<std::size_t>(opt.max_modes, 5) - 1));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const std::size_t cut = 1 + rng.index(n - 1);
        const ModeSet x = ModeSet::range(1, static_cast<ModeLabel>(cut));
        const ModeSet rest = y.set_difference(x);

        const Operator even_a = rng.parity_pure_on(x, +1);
        const Operator even_b = rng.parity_pure_on(rest, +1);
        const Operator odd_a = rng.parity_pure_on(x, -1);
        const Operator odd_b = rng.parity_pure_on(rest, -1);

        const auto commutator = [&](const Operator& p, const Operator& q) {
            return (embed(y, p) * embed(y, q) - embed(y, q) * embed(y, p)).max_abs();
        };
        const auto anticommutator = [&](const Operator& p, const Operator& q) {
            return (embed(y, p) * embed(y, q) + embed(y, q) * embed(y, p)).max_abs();
        };
        rec.observe("even-even embeddings commute", commutator(even_a, even_b), commutator_tol,
                    describe(y, "X=" + x.to_string()));
        rec.observe("even-odd embeddings commute", commutator(even_a, odd_b), commutator_tol,
                    describe(y, "X=" + x.to_string()));
        rec.observe("odd-odd embeddings anticommute", anticommutator(odd_a, odd_b), commutator_tol,
                    describe(y, "X=" + x.to_string()));

        // Trace of odd operators vanishes; reductions and embeddings keep
        // the parity class.
        const Operator odd_y = rng.parity_pure_on(y, -1);
        rec.observe("trace annihilates odd operators", std::abs(odd_y.trace()), opt.tol,
                    describe(y, ""));
        rec.expect("partial trace preserves parity class",
                   operator_parity(partial_trace(odd_y, x), opt.tol) != ParityClass::mixed &&
                       parity_part(partial_trace(odd_y, x), +1).max_abs() <= opt.tol,
                   describe(y, "X=" + x.to_string()));
        rec.expect("embedding preserves parity class",
                   operator_parity(embed(y, odd_a), opt.tol) == ParityClass::odd &&
                       operator_parity(embed(y, even_a), opt.tol) == ParityClass::even,
                   describe(y, "X=" + x.to_string()));

        // Sector projectors resolve the identity.
        const Partition xi{x, rest};
        SuperOp sum = SuperOp::zero(y, y);
        for (const ParitySector& eps : ParitySector::all(xi)) {
            sum = sum + local_parity_projector_map(xi, eps);
        }
        rec.observe("sector projectors sum to the identity",
                    sum.max_abs_diff(SuperOp::identity(y)), 0.0, describe(y, "xi=" + xi.to_string()));

        // Pure-state superselection criterion.
        const StateVector psi = rng.state_vector_on(y);
        const Operator proj(y, psi.amplitudes * psi.amplitudes.adjoint());
        const bool physical = operator_parity(proj, opt.tol) == ParityClass::even;
        const bool definite = vector_parity(psi, opt.tol) != VectorParity::mixed;
        rec.expect("pure state physical iff definite parity", physical == definite, describe(y, ""));

        const StateVector even_psi(
            y, parity_projector(y, +1).matrix() * rng.state_vector_on(y).amplitudes);
        if (even_psi.amplitudes.norm() > 0.1) {
            Eigen::VectorXcd normalized = even_psi.amplitudes.normalized();
            const Operator even_proj(y, normalized * normalized.adjoint());
            rec.expect("even pure state is physical",
                       operator_parity(even_proj, opt.tol) == ParityClass::even, describe(y, ""));
        }
    }

    return rec.take();
}

SuiteReport suite_tps(const CheckOptions& opt) {
    Recorder rec("tps");
    Rng rng(opt.seed + 5);

    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::size_t n = 2 + rng.index(std::max<std::size_t>(1, std::min<std::size_t>(opt.max_modes, 5) - 1));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const Partition xi = random_partition(rng, y, 3);

        std::vector<Operator> even_ops;
        for (const ModeSet& part : xi.parts()) even_ops.push_back(rng.parity_pure_on(part, +1));

        for (const OrderedPartition& ord : all_orderings(xi)) {
            std::vector<Operator> ordered_ops;
            for (const ModeSet& part : ord.parts()) {
                for (std::size_t k = 0; k < xi.size(); ++k) {
                    if (xi.part(k) == part) ordered_ops.push_back(even_ops[k]);
                }
            }
            const Operator u = tps_unitary(ord);
            const Operator plain = tensor_standard(ordered_ops);
            const Operator via_u(y, u.matrix() * plain.matrix() * u.matrix().adjoint());
            rec.observe("ordered product = U (tensor) U+ on even operands",
                        ordered_product(ordered_ops).max_abs_diff(via_u), opt.tol,
                        describe(y, "ord=" + ord.to_string()));
        }

        // Lambda ordering independence on the locally physical index set:
        // exact comparison of the sign tables.
        const auto orderings = all_orderings(xi);
        if (orderings.size() >= 2) {
            const auto rank_a = position_ranks(orderings[0]);
            const auto rank_b = position_ranks(orderings[1 + rng.index(orderings.size() - 1)]);
            const auto block = position_ranks(xi);
            std::vector<std::uint32_t> masks(xi.size(), 0);
            for (std::size_t p = 0; p < y.size(); ++p) {
                masks[block[p] - 1] |= std::uint32_t{1} << (y.size() - 1 - p);
            }
            bool ok = true;
            for (std::uint32_t nu = 0; nu < y.dim() && ok; ++nu) {
                for (std::uint32_t nup = 0; nup < y.dim() && ok; ++nup) {
                    bool locally_even = true;
                    for (std::uint32_t mask : masks) {
                        if (std::popcount((nu ^ nup) & mask) & 1) locally_even = false;
                    }
                    if (!locally_even) continue;
                    ok = phase_l_bits(rank_a, nu, nup).value == phase_l_bits(rank_b, nu, nup).value;
                }
            }
            rec.expect("Lambda ordering-independent on locally even indices", ok,
                       describe(y, "xi=" + xi.to_string()));

            // u/l/h compatibility on the same index set.
            bool compat = true;
            for (std::uint32_t nu = 0; nu < y.dim() && compat; ++nu) {
                for (std::uint32_t nup = 0; nup < y.dim() && compat; ++nup) {
                    bool locally_even = true;
                    for (std::uint32_t mask : masks) {
                        if (std::popcount((nu ^ nup) & mask) & 1) locally_even = false;
                    }
                    if (!locally_even) continue;
                    const int lhs =
                        phase_l_bits(rank_a, nu, nup).value * phase_h_bits(block, nu, nup).value;
                    const int rhs =
                        phase_u_bits(rank_a, nu).value * phase_u_bits(rank_a, nup).value;
                    compat = lhs == rhs;
                }
            }
            rec.expect("l*h = u*u on locally even indices", compat,
                       describe(y, "xi=" + xi.to_string()));
        }

        // Vector-level tensor product structure: products of embeddings of
        // locally parity-pure pure states are pure, with the U-joined vector.
        const OrderedPartition ord = shuffled(rng, xi);
        std::vector<StateVector> factors;
        std::vector<Operator> projectors;
        bool degenerate = false;
        for (const ModeSet& part : ord.parts()) {
            const int sign = rng.uniform() < 0.5 ? +1 : -1;
            Eigen::VectorXcd amp =
                parity_projector(part, sign).matrix() * rng.state_vector_on(part).amplitudes;
            if (amp.norm() < 0.05) {
                degenerate = true;
                break;
            }
            amp.normalize();
            factors.emplace_back(part, amp);
            projectors.emplace_back(part, amp * amp.adjoint());
        }
        if (!degenerate) {
            const StateVector joint = tps_join(ord, factors);
            const Operator joint_proj(y, joint.amplitudes * joint.amplitudes.adjoint());
            rec.observe("joined pure states stay pure under ordered products",
                        ordered_product(projectors).max_abs_diff(joint_proj), opt.tol,
                        describe(y, "ord=" + ord.to_string()));
        }
    }

    return rec.take();
}

SuiteReport suite_prodext(const CheckOptions& opt) {
    Recorder rec("prodext");
    Rng rng(opt.seed + 6);

    std::size_t agreements = 0;
    for (std::size_t t = 0; t < std::max<std::size_t>(opt.trials, 100); ++t) {
        const std::size_t n = 2 + rng.index(std::max<std::size_t>(1, std::min<std::size_t>(opt.max_modes, 5) - 1));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const Partition xi = random_partition(rng, y, 4);
        const OrderedPartition ord = shuffled(rng, xi);

        std::vector<Operator> operands;
        bool psd_family = rng.uniform() < 0.5;
        bool degenerate = false;
        for (const ModeSet& part : ord.parts()) {
            if (psd_family) {
                // PSD operands, some with odd components.
                if (rng.uniform() < 0.5) {
                    operands.push_back(rng.density_on(part, /*even=*/true));
                } else {
                    operands.push_back(rng.density_on(part, /*even=*/false));
                }
            } else {
                const double coin = rng.uniform();
                const int sign = coin < 0.45 ? +1 : -1;
                Operator candidate = coin < 0.9 ? rng.hermitian_parity_pure_on(part, sign)
                                                : rng.hermitian_on(part);
                if (candidate.max_abs() < 1e-6) {
                    degenerate = true;
                    break;
                }
                operands.push_back(std::move(candidate));
            }
        }
        if (degenerate) continue;

        bool agreed = true;
        std::string note = describe(y, "ord=" + ord.to_string());
        try {
            (void)product_extension_classify(operands, opt.tol);
        } catch (const Error&) {
            agreed = false;
        }
        if (agreed) ++agreements;
        rec.expect("predicates agree with matrix checks", agreed, note);
    }
    (void)agreements;

    return rec.take();
}

SuiteReport suite_maps(const CheckOptions& opt) {
    Recorder rec("maps");
    Rng rng(opt.seed + 7);
    const std::size_t map_modes = std::min<std::size_t>(opt.max_modes, 4);

    auto random_superop = [&](const ModeSet& modes) {
        const auto d2 = static_cast<Eigen::Index>(modes.dim() * modes.dim());
        return SuperOp(modes, rng.matrix(d2, d2));
    };
    auto random_parity_pure_map = [&](const ModeSet& modes, int sign) {
        return map_parity_part(random_superop(modes), sign);
    };

    for (std::size_t t = 0; t < opt.trials / 2 + 4; ++t) {
        const std::size_t n = 2 + rng.index(std::max<std::size_t>(1, map_modes - 1));
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        const std::size_t cut = 1 + rng.index(n - 1);
        const ModeSet x = ModeSet::range(1, static_cast<ModeLabel>(cut));
        const ModeSet rest = y.set_difference(x);

        const SuperOp omega_x = random_superop(x);
        const SuperOp omega_rest = random_superop(rest);
        const SuperOp xi_x = random_superop(x);
        const SuperOp xi_rest = random_superop(rest);

        for (MapProductKind kind : {MapProductKind::fermionic, MapProductKind::ordered}) {
            const char* tag = kind == MapProductKind::fermionic ? "fermionic" : "ordered";
            const SuperOp lhs = map_tensor(kind, {omega_x, omega_rest})
                                    .compose(map_tensor(kind, {xi_x, xi_rest}));
            const SuperOp rhs =
                map_tensor(kind, {omega_x.compose(xi_x), omega_rest.compose(xi_rest)});
            rec.observe(std::string("map product is multiplicative (") + tag + ")",
                        lhs.max_abs_diff(rhs), opt.tol, describe(y, "X=" + x.to_string()));

            const SuperOp adj_lhs = map_tensor(kind, {omega_x.adjoint(), omega_rest.adjoint()});
            rec.observe(std::string("map product respects adjoints (") + tag + ")",
                        adj_lhs.max_abs_diff(map_tensor(kind, {omega_x, omega_rest}).adjoint()),
                        opt.tol, describe(y, "X=" + x.to_string()));

            // Compositions of extensions agree with the product and commute.
            // All extensions here share one ordering of the parts (identity
            // factors fill the other slots); the home-first bipartite
            // embedding differs from these for odd maps, which is the -1
            // obstruction checked further below.
            const SuperOp ext_x = map_tensor(kind, {omega_x, SuperOp::identity(rest)});
            const SuperOp ext_rest = map_tensor(kind, {SuperOp::identity(x), omega_rest});
            const SuperOp via_ext_a = ext_x.compose(ext_rest);
            const SuperOp via_ext_b = ext_rest.compose(ext_x);
            rec.observe(std::string("extensions compose to the product (") + tag + ")",
                        via_ext_a.max_abs_diff(map_tensor(kind, {omega_x, omega_rest})), opt.tol,
                        describe(y, "X=" + x.to_string()));
            rec.observe(std::string("extensions commute (") + tag + ")",
                        via_ext_a.max_abs_diff(via_ext_b), opt.tol,
                        describe(y, "X=" + x.to_string()));
            if (kind == MapProductKind::fermionic) {
                // For the fermionic kind the common-ordering extension is the
                // plain map embedding itself.
                rec.observe("fermionic embedding equals its extension",
                            ext_x.max_abs_diff(map_embed(kind, y, omega_x)), opt.tol,
                            describe(y, "X=" + x.to_string()));
            }
        }

        // Blockwise action on elementary products, and the unital joint
        // extension property.
        const Operator a_x = rng.operator_on(x);
        const Operator a_rest = rng.operator_on(rest);
        const SuperOp product = map_tensor(MapProductKind::ordered, {omega_x, omega_rest});
        rec.observe("ordered map product acts blockwise",
                    product.apply(ordered_product({a_x, a_rest}))
                        .max_abs_diff(ordered_product({omega_x.apply(a_x), omega_rest.apply(a_rest)})),
                    opt.tol, describe(y, "X=" + x.to_string()));

        // Unital partner: conjugation by a Haar-ish unitary fixes the
        // identity, so the joint extension fixes embedded operators.
        const Eigen::MatrixXcd gauss = rng.matrix(static_cast<Eigen::Index>(rest.dim()),
                                                  static_cast<Eigen::Index>(rest.dim()));
        const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gauss);
        const Operator unitary(rest, qr.householderQ() * Eigen::MatrixXcd::Identity(
                                         static_cast<Eigen::Index>(rest.dim()),
                                         static_cast<Eigen::Index>(rest.dim())));
        const SuperOp prod_unital =
            map_tensor(MapProductKind::ordered, {omega_x, SuperOp::conjugation(unitary)});
        rec.observe("unital joint extension fixes embedded operators",
                    prod_unital.apply(embed(y, a_x)).max_abs_diff(embed(y, omega_x.apply(a_x))),
                    opt.tol, describe(y, "X=" + x.to_string()));

        // Even map products act properly on products of the other ordering.
        const SuperOp even_x = map_parity_part(omega_x, +1);
        const SuperOp even_rest = map_parity_part(omega_rest, +1);
        const SuperOp even_product = map_tensor(MapProductKind::ordered, {even_x, even_rest});
        rec.observe("even map product acts on reordered elementary products",
                    even_product.apply(ordered_product({a_rest, a_x}))
                        .max_abs_diff(ordered_product({even_rest.apply(a_rest),
                                                       even_x.apply(a_x)})),
                    opt.tol, describe(y, "X=" + x.to_string()));

        // Parity classification against the sector mapping.
        const SuperOp even_map = random_parity_pure_map(x, +1);
        const SuperOp odd_map = random_parity_pure_map(x, -1);
        rec.expect("map parity classification",
                   map_parity(even_map, opt.tol) == ParityClass::even &&
                       map_parity(odd_map, opt.tol) == ParityClass::odd,
                   describe(x, ""));
        const Operator even_op = rng.parity_pure_on(x, +1);
        const Operator odd_op = rng.parity_pure_on(x, -1);
        rec.expect("even maps preserve, odd maps flip operator parity",
                   parity_part(even_map.apply(even_op), -1).max_abs() <= opt.tol &&
                       parity_part(even_map.apply(odd_op), +1).max_abs() <= opt.tol &&
                       parity_part(odd_map.apply(even_op), +1).max_abs() <= opt.tol &&
                       parity_part(odd_map.apply(odd_op), -1).max_abs() <= opt.tol,
                   describe(x, ""));

        // Strong extension identities: both hold for even maps; the second
        // fails with an exact -1 for odd maps on odd-odd witnesses.
        const SuperOp even_embedded = map_embed(MapProductKind::ordered, y, even_map);
        const Operator any_x = rng.operator_on(x);
        const Operator any_rest = rng.operator_on(rest);
        rec.observe("even map embedding: first strong-extension identity",
                    even_embedded.apply(ordered_product({any_x, any_rest}))
                        .max_abs_diff(ordered_product({even_map.apply(any_x), any_rest})),
                    opt.tol, describe(y, "X=" + x.to_string()));
        rec.observe("even map embedding: second strong-extension identity",
                    even_embedded.apply(ordered_product({any_rest, any_x}))
                        .max_abs_diff(ordered_product({any_rest, even_map.apply(any_x)})),
                    opt.tol, describe(y, "X=" + x.to_string()));

        const SuperOp odd_embedded = map_embed(MapProductKind::ordered, y, odd_map);
        const Operator odd_x = rng.parity_pure_on(x, -1);
        const Operator odd_rest = rng.parity_pure_on(rest, -1);
        const Operator lhs_odd = odd_embedded.apply(ordered_product({odd_rest, odd_x}));
        const Operator rhs_odd = ordered_product({odd_rest, odd_map.apply(odd_x)});
        rec.observe("odd map embedding flips the second identity",
                    (lhs_odd + rhs_odd).max_abs(), opt.tol, describe(y, "X=" + x.to_string()));

        // Local parity projector as a map product of (I +- Theta)/2.
        const Partition xi{x, rest};
        for (const ParitySector& eps : ParitySector::all(xi)) {
            std::vector<SuperOp> factors;
            for (std::size_t k = 0; k < xi.size(); ++k) {
                const SuperOp identity = SuperOp::identity(xi.part(k));
                const SuperOp theta = SuperOp::conjugation(parity_operator(xi.part(k)));
                factors.push_back(Complex{0.5} * (identity + Complex{double(eps.sign(k))} * theta));
            }
            rec.observe("local parity projector = product of (I+-Theta)/2",
                        map_tensor(MapProductKind::ordered, factors)
                            .max_abs_diff(local_parity_projector_map(xi, eps)),
                        opt.tol, describe(y, "eps=" + eps.to_string()));
        }
    }

    // Channel checks: the fermionic partial trace is TPCP for every subset.
    for (std::size_t n = 1; n <= map_modes; ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        for (const ModeSet& x : subset_lattice(y)) {
            const TpcpReport report = tpcp_report(partial_trace_map(y, x), opt.tol);
            rec.expect("partial trace is a channel", report.tpcp(),
                       describe(y, "X=" + x.to_string() + ", min eig=" +
                                       std::to_string(report.min_choi_eigenvalue)));
        }
    }

    // Partial traces are the ordered embeddings of the trace.
    for (std::size_t n = 2; n <= map_modes; ++n) {
        const ModeSet y = ModeSet::range(1, static_cast<ModeLabel>(n));
        for (const ModeSet& x : subset_lattice(y)) {
            if (x.size() == y.size()) continue;
            const ModeSet rest = y.set_difference(x);
            const SuperOp embedded = map_embed(MapProductKind::ordered, y, SuperOp::trace_map(rest));
            rec.observe("partial trace = embedded trace",
                        embedded.max_abs_diff(partial_trace_map(y, x)), opt.tol,
                        describe(y, "X=" + x.to_string()));
        }
    }

    // The transpose map is the standard non-CP counterexample.
    {
        const ModeSet y{1};
        const SuperOp transpose = SuperOp::from_action(y, y, [](const Operator& a) {
            return Operator(a.modes(), a.matrix().transpose().eval());
        });
        const TpcpReport report = tpcp_report(transpose, opt.tol);
        rec.expect("transpose map is not completely positive",
                   report.trace_preserving && !report.completely_positive, "single mode");
    }

    return rec.take();
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(invariants.begin(), invariants.end(),
                       [](const InvariantResult& inv) { return inv.pass; });
}

double SuiteReport::max_residual() const {
    double max_resid = 0.0;
    for (const InvariantResult& inv : invariants) max_resid = std::max(max_resid, inv.max_residual);
    return max_resid;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"car",    "phi", "tensor",  "lambda", "ptrace",
                                                   "parity", "tps", "prodext", "maps"};
    return names;
}

SuiteReport run_suite(const std::string& name, const CheckOptions& options) {
    if (name == "car") return suite_car(options);
    if (name == "phi") return suite_phi(options);
    if (name == "tensor") return suite_tensor(options);
    if (name == "lambda") return suite_lambda(options);
    if (name == "ptrace") return suite_ptrace(options);
    if (name == "parity") return suite_parity(options);
    if (name == "tps") return suite_tps(options);
    if (name == "prodext") return suite_prodext(options);
    if (name == "maps") return suite_maps(options);
    throw InputError("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all_suites(const CheckOptions& options) {
    std::vector<SuiteReport> reports;
    for (const std::string& name : suite_names()) reports.push_back(run_suite(name, options));
    return reports;
}

nlohmann::json report_to_json(const std::vector<SuiteReport>& reports, const CheckOptions& options) {
    nlohmann::json j;
    j["max_modes"] = options.max_modes;
    j["seed"] = options.seed;
    j["trials"] = options.trials;
    j["tolerance"] = round12(options.tol);
    bool all_pass = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteReport& report : reports) {
        nlohmann::json s;
        s["suite"] = report.suite;
        s["pass"] = report.pass();
        all_pass = all_pass && report.pass();
        nlohmann::json invs = nlohmann::json::array();
        for (const InvariantResult& inv : report.invariants) {
            nlohmann::json e;
            e["name"] = inv.name;
            e["pass"] = inv.pass;
            e["cases"] = inv.cases;
            e["max_residual"] = round12(inv.max_residual);
            if (!inv.counterexample.empty()) e["counterexample"] = inv.counterexample;
            invs.push_back(std::move(e));
        }
        s["invariants"] = std::move(invs);
        suites.push_back(std::move(s));
    }
    j["suites"] = std::move(suites);
    j["pass"] = all_pass;
    return j;
}

}  // namespace fermikit
