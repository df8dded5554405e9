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

#include <doctest.h>

#include <bit>

#include "fermikit/maps.hpp"
#include "fermikit/parity.hpp"
#include "fermikit/random.hpp"

using namespace fermikit;

namespace {
constexpr double kTol = 1e-10;
}

TEST_CASE("parity operator and projectors") {
    const ModeSet one{1};
    Eigen::MatrixXcd p1(2, 2);
    p1 << 1, 0, 0, -1;
    CHECK(parity_operator(one).max_abs_diff(Operator(one, p1)) == 0.0);

    const ModeSet y{1, 2};
    Eigen::MatrixXcd t(4, 4);
    t.setZero();
    t(0, 0) = 1;
    t(1, 1) = -1;
    t(2, 2) = -1;
    t(3, 3) = 1;
    CHECK(parity_operator(y).max_abs_diff(Operator(y, t)) == 0.0);
    CHECK((parity_operator(y) * parity_operator(y)).max_abs_diff(Operator::identity(y)) == 0.0);

    Eigen::MatrixXcd pm(2, 2);
    pm << 1, 0, 0, 0;
    CHECK(parity_projector(one, +1).max_abs_diff(Operator(one, pm)) == 0.0);

    Eigen::MatrixXcd pneg(4, 4);
    pneg.setZero();
    pneg(1, 1) = 1;
    pneg(2, 2) = 1;
    CHECK(parity_projector(y, -1).max_abs_diff(Operator(y, pneg)) == 0.0);
    CHECK((parity_projector(y, +1) * parity_projector(y, -1)).max_abs() == 0.0);
    CHECK((parity_projector(y, +1) + parity_projector(y, -1))
              .max_abs_diff(Operator::identity(y)) == 0.0);
}

TEST_CASE("local parity projectors") {
    const Partition xi{ModeSet{1}, ModeSet{2}};
    const ParitySector eps = ParitySector::parse(xi, "+-");
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
    expected(1, 1) = 1.0;  // pattern 01
    CHECK(local_parity_projector(xi, eps).max_abs_diff(Operator(ModeSet{1, 2}, expected)) == 0.0);

    // The vector-level projector equals the product of embedded projectors.
    const ModeSet y{1, 2, 3};
    const Partition xi3{ModeSet{1, 3}, ModeSet{2}};
    for (const ParitySector& sector : ParitySector::all(xi3)) {
        Operator product = Operator::identity(y);
        for (std::size_t k = 0; k < xi3.size(); ++k) {
            product = product * embed(y, parity_projector(xi3.part(k), sector.sign(k)));
        }
        CHECK(local_parity_projector(xi3, sector).max_abs_diff(product) <= kTol);
    }

    // Operator-level projectors: idempotent, resolution of the identity, and
    // the expected sparsity pattern of the two-mode sectors.
    SuperOp sum = SuperOp::zero(ModeSet{1, 2}, ModeSet{1, 2});
    for (const ParitySector& sector : ParitySector::all(xi)) {
        const SuperOp pi = local_parity_projector_map(xi, sector);
        CHECK(pi.compose(pi).max_abs_diff(pi) == 0.0);
        sum = sum + pi;
    }
    CHECK(sum.max_abs_diff(SuperOp::identity(ModeSet{1, 2})) == 0.0);

    // The two-mode sector projections carry exactly the four disjoint
    // sparsity patterns of the transition parities.
    Rng rng(3);
    const Operator a = rng.operator_on(ModeSet{1, 2});
    for (const ParitySector& sector : ParitySector::all(xi)) {
        const Operator block = local_parity_projector_map(xi, sector).apply(a);
        for (std::uint32_t r = 0; r < 4; ++r) {
            for (std::uint32_t c = 0; c < 4; ++c) {
                const std::uint32_t transition = r ^ c;
                const bool in_sector = ((transition >> 1) & 1u ? -1 : +1) == sector.sign(0) &&
                                       ((transition & 1u) ? -1 : +1) == sector.sign(1);
                if (in_sector) {
                    CHECK(block.matrix()(r, c) == a.matrix()(r, c));
                } else {
                    CHECK(std::abs(block.matrix()(r, c)) == 0.0);
                }
            }
        }
    }

    CHECK_THROWS_AS(ParitySector::parse(xi, "+"), SectorError);
    CHECK_THROWS_AS(ParitySector::parse(xi, "+x"), SectorError);
}

TEST_CASE("operator parity classification") {
    const ModeSet y{1, 2, 3};
    const Operator annihilator = jw_ladder(2, y, LadderKind::annihilate);
    CHECK(operator_parity(annihilator, kTol) == ParityClass::odd);
    CHECK(operator_parity(jw_ladder(2, y, LadderKind::number), kTol) == ParityClass::even);
    CHECK(operator_parity(Operator::identity(y) + annihilator, kTol) == ParityClass::mixed);

    // Theta action: conjugation by T flips annihilators.
    const Operator t = parity_operator(y);
    CHECK(Operator(y, t.matrix() * annihilator.matrix() * t.matrix())
              .max_abs_diff(Complex{-1.0} * annihilator) == 0.0);

    // Even/odd parts reassemble the operator.
    Rng rng(5);
    const Operator a = rng.operator_on(y);
    CHECK((parity_part(a, +1) + parity_part(a, -1)).max_abs_diff(a) == 0.0);
    CHECK(operator_parity(parity_part(a, +1), kTol) == ParityClass::even);
    CHECK(operator_parity(parity_part(a, -1), kTol) == ParityClass::odd);
}

TEST_CASE("vector parity") {
    const ModeSet y{1, 2};
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(4);
    vac(0) = 1.0;
    CHECK(vector_parity(StateVector(y, vac), kTol) == VectorParity::plus);

    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    CHECK(vector_parity(StateVector(y, bell), kTol) == VectorParity::plus);

    const ModeSet one{1};
    Eigen::VectorXcd mixed(2);
    mixed << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(vector_parity(StateVector(one, mixed), kTol) == VectorParity::mixed);

    Eigen::VectorXcd occupied(2);
    occupied << 0.0, 1.0;
    CHECK(vector_parity(StateVector(one, occupied), kTol) == VectorParity::minus);
}

TEST_CASE("tps unitary") {
    CHECK(tps_unitary(OrderedPartition{ModeSet{1}, ModeSet{2}})
              .max_abs_diff(Operator::identity(ModeSet{1, 2})) == 0.0);

    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Identity(4, 4);
    diag(3, 3) = -1.0;
    CHECK(tps_unitary(OrderedPartition{ModeSet{2}, ModeSet{1}})
              .max_abs_diff(Operator(ModeSet{1, 2}, diag)) == 0.0);

    // Adjoint actions of the two orderings agree entrywise exactly on the
    // locally physical index set.
    const ModeSet y{1, 2, 3};
    const Operator u_a = tps_unitary(OrderedPartition{ModeSet{2}, ModeSet{1, 3}});
    const Operator u_b = tps_unitary(OrderedPartition{ModeSet{1, 3}, ModeSet{2}});
    const std::uint32_t mask2 = 0b010, mask13 = 0b101;
    for (std::uint32_t r = 0; r < 8; ++r) {
        for (std::uint32_t c = 0; c < 8; ++c) {
            const std::uint32_t transition = r ^ c;
            const bool locally_physical = (std::popcount(transition & mask2) % 2 == 0) &&
                                          (std::popcount(transition & mask13) % 2 == 0);
            const Complex sign_a = u_a.matrix()(r, r) * std::conj(u_a.matrix()(c, c));
            const Complex sign_b = u_b.matrix()(r, r) * std::conj(u_b.matrix()(c, c));
            if (locally_physical) CHECK(sign_a == sign_b);
        }
    }
}

TEST_CASE("tps identity on locally even operands") {
    Rng rng(7);
    const ModeSet y{1, 2, 3, 4};
    const Partition xi{ModeSet{1, 3}, ModeSet{2, 4}};
    for (int t = 0; t < 25; ++t) {
        const Operator a = rng.parity_pure_on(ModeSet{1, 3}, +1);
        const Operator b = rng.parity_pure_on(ModeSet{2, 4}, +1);
        for (const OrderedPartition& ord :
             {OrderedPartition{ModeSet{1, 3}, ModeSet{2, 4}},
              OrderedPartition{ModeSet{2, 4}, ModeSet{1, 3}}}) {
            std::vector<Operator> ops;
            for (const ModeSet& part : ord.parts()) {
                ops.push_back(part == ModeSet{1, 3} ? a : b);
            }
            const Operator u = tps_unitary(ord);
            const Operator plain = tensor_standard(ops);
            const Operator via_u(y, u.matrix() * plain.matrix() * u.matrix().adjoint());
            CHECK(ordered_product(ops).max_abs_diff(via_u) <= kTol);
        }
        // Even-even commutation across the bipartition.
        CHECK((embed(y, a) * embed(y, b) - embed(y, b) * embed(y, a)).max_abs() <= 1e-12);
    }
    (void)xi;
}

TEST_CASE("joined state vectors") {
    Rng rng(11);
    const OrderedPartition ord{ModeSet{2}, ModeSet{1, 3}};
    for (int t = 0; t < 25; ++t) {
        std::vector<StateVector> factors;
        std::vector<Operator> projectors;
        bool skip = false;
        for (const ModeSet& part : ord.parts()) {
            const int sign = rng.uniform() < 0.5 ? +1 : -1;
            Eigen::VectorXcd amp =
                parity_projector(part, sign).matrix() * rng.state_vector_on(part).amplitudes;
            if (amp.norm() < 0.05) {
                skip = true;
                break;
            }
            amp.normalize();
            factors.emplace_back(part, amp);
            projectors.emplace_back(part, (amp * amp.adjoint()).eval());
        }
        if (skip) continue;
        const StateVector joint = tps_join(ord, factors);
        CHECK(std::abs(joint.amplitudes.norm() - 1.0) <= kTol);
        const Operator joint_proj(ord.ground_set(),
                                  joint.amplitudes * joint.amplitudes.adjoint());
        CHECK(ordered_product(projectors).max_abs_diff(joint_proj) <= kTol);
        // The result is physical: a pure state of definite parity.
        CHECK(vector_parity(joint, kTol) != VectorParity::mixed);
    }
}

TEST_CASE("product extension classification") {
    const double tol = 1e-9;

    // Two PSD operands, both with odd components: never self-adjoint.
    Eigen::MatrixXcd amat(2, 2), bmat(2, 2);
    const Complex a{0.5, 0.2}, b{-0.3, 0.4};
    amat << 1.0, a, std::conj(a), 1.0;
    bmat << 1.0, b, std::conj(b), 1.0;
    const Operator a1(ModeSet{1}, amat);
    const Operator b2(ModeSet{2}, bmat);
    const auto report = product_extension_classify({a1, b2}, tol);
    CHECK(report.m_mixed == 2);
    CHECK_FALSE(report.self_adjoint);
    CHECK_FALSE(report.psd);
    CHECK(report.operands_all_psd);
    CHECK(report.predicted_psd.has_value());
    CHECK_FALSE(*report.predicted_psd);

    // The counterexample at a = b = 1: the non-Hermiticity is exactly 2.
    Eigen::MatrixXcd ones(2, 2);
    ones << 1, 1, 1, 1;
    const auto extreme = product_extension_classify(
        {Operator(ModeSet{1}, ones), Operator(ModeSet{2}, ones)}, tol);
    CHECK(extreme.max_nonhermiticity == 2.0);

    // All-even PSD operands: the product is PSD.
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        const auto even_report = product_extension_classify(
            {rng.density_on(ModeSet{1, 3}, true), rng.density_on(ModeSet{2}, true)}, tol);
        CHECK(even_report.psd);
        CHECK(even_report.self_adjoint);
    }

    // Exactly one mixed PSD operand among even ones: still PSD.
    for (int t = 0; t < 10; ++t) {
        const auto one_mixed = product_extension_classify(
            {rng.density_on(ModeSet{1}, false), rng.density_on(ModeSet{2, 3}, true)}, tol);
        CHECK(one_mixed.m_mixed <= 1);
        if (one_mixed.m_mixed == 1) CHECK(one_mixed.psd);
    }

    // Four odd Hermitian operands: m- = 4 = 0 (mod 4), self-adjoint again.
    std::vector<Operator> odd_ops;
    for (ModeLabel i = 1; i <= 4; ++i) {
        odd_ops.push_back(rng.hermitian_parity_pure_on(ModeSet{i}, -1));
    }
    const auto four_odd = product_extension_classify(odd_ops, tol);
    CHECK(four_odd.m_odd == 4);
    CHECK(four_odd.self_adjoint);

    const auto two_odd = product_extension_classify(
        {odd_ops[0], odd_ops[1], rng.hermitian_parity_pure_on(ModeSet{3}, +1)}, tol);
    CHECK(two_odd.m_odd == 2);
    CHECK_FALSE(two_odd.self_adjoint);

    // Non-Hermitian and zero operands are rejected.
    CHECK_THROWS_AS(product_extension_classify({rng.operator_on(ModeSet{1}),
                                                rng.hermitian_on(ModeSet{2})},
                                               tol),
                    InputError);
    CHECK_THROWS_AS(product_extension_classify({Operator::zero(ModeSet{1}),
                                                rng.hermitian_on(ModeSet{2})},
                                               tol),
                    InputError);
}

TEST_CASE("trace kills odd operators and parity survives reduction/embedding") {
    Rng rng(17);
    const ModeSet y{1, 2, 3, 4};
    for (int t = 0; t < 20; ++t) {
        const Operator odd = rng.parity_pure_on(y, -1);
        CHECK(std::abs(odd.trace()) <= kTol);
        const Operator reduced = partial_trace(odd, ModeSet{2, 3});
        CHECK(parity_part(reduced, +1).max_abs() <= kTol);

        const Operator even_small = rng.parity_pure_on(ModeSet{2, 4}, +1);
        CHECK(operator_parity(embed(y, even_small), kTol) == ParityClass::even);
        const Operator odd_small = rng.parity_pure_on(ModeSet{2, 4}, -1);
        CHECK(operator_parity(embed(y, odd_small), kTol) == ParityClass::odd);
    }
}
