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

#ifndef FERMIKIT_RANDOM_HPP
#define FERMIKIT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "fermikit/algebra.hpp"
#include "fermikit/parity.hpp"

namespace fermikit {

/// Deterministic random source: std::mt19937_64 with doubles taken straight
/// from the raw 64-bit stream, so sequences are identical on every platform
/// for a given seed (stdlib distributions do not guarantee that).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double symmetric() { return 2.0 * uniform() - 1.0; }

    Complex complex_entry() { return {symmetric(), symmetric()}; }

    std::size_t index(std::size_t bound) { return static_cast<std::size_t>(gen_() % bound); }

    Eigen::MatrixXcd matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_entry();
        }
        return m;
    }

    Eigen::VectorXcd vector(Eigen::Index size) {
        Eigen::VectorXcd v(size);
        for (Eigen::Index k = 0; k < size; ++k) v(k) = complex_entry();
        return v;
    }

    Operator operator_on(const ModeSet& modes) {
        const auto d = static_cast<Eigen::Index>(modes.dim());
        return Operator(modes, matrix(d, d));
    }

    Operator hermitian_on(const ModeSet& modes) {
        Operator a = operator_on(modes);
        return Operator(modes, 0.5 * (a.matrix() + a.matrix().adjoint().eval()));
    }

    /// Random operator supported on one parity class (+1 even, -1 odd).
    Operator parity_pure_on(const ModeSet& modes, int sign) {
        return parity_part(operator_on(modes), sign);
    }

    Operator hermitian_parity_pure_on(const ModeSet& modes, int sign) {
        return parity_part(hermitian_on(modes), sign);
    }

    /// PSD with unit trace; built as G G^dagger / Tr, even iff requested.
    Operator density_on(const ModeSet& modes, bool even = false) {
        Operator g = even ? parity_pure_on(modes, +1) : operator_on(modes);
        Eigen::MatrixXcd m = g.matrix() * g.matrix().adjoint();
        m /= m.trace();
        return Operator(modes, std::move(m));
    }

    StateVector state_vector_on(const ModeSet& modes, bool normalized = true) {
        Eigen::VectorXcd v = vector(static_cast<Eigen::Index>(modes.dim()));
        if (normalized) v.normalize();
        return StateVector(modes, std::move(v));
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace fermikit

#endif
