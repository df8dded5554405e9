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

#include "fermikit/superop.hpp"

#include "fermikit/config.hpp"

namespace fermikit {

Eigen::VectorXcd vec_rowmajor(const Eigen::MatrixXcd& a) {
    Eigen::VectorXcd v(a.size());
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) v(k++) = a(r, c);
    }
    return v;
}

Eigen::MatrixXcd unvec_rowmajor(const Eigen::VectorXcd& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols) throw ShapeError("unvec size mismatch");
    Eigen::MatrixXcd a(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) a(r, c) = v(k++);
    }
    return a;
}

namespace {

void check_map_cap(const ModeSet& modes) {
    if (modes.size() > max_map_modes()) {
        throw DomainError("superoperator on " + std::to_string(modes.size()) +
                          " modes exceeds the map-level cap of " + std::to_string(max_map_modes()));
    }
}

}  // namespace

SuperOp::SuperOp(ModeSet in_modes, ModeSet out_modes, Eigen::MatrixXcd matrix)
    : in_(std::move(in_modes)), out_(std::move(out_modes)), mat_(std::move(matrix)) {
    check_map_cap(in_);
    check_map_cap(out_);
    const auto din2 = static_cast<Eigen::Index>(in_.dim() * in_.dim());
    const auto dout2 = static_cast<Eigen::Index>(out_.dim() * out_.dim());
    if (mat_.rows() != dout2 || mat_.cols() != din2) {
        throw ShapeError("superoperator matrix is " + std::to_string(mat_.rows()) + "x" +
                         std::to_string(mat_.cols()) + ", expected " + std::to_string(dout2) +
                         "x" + std::to_string(din2));
    }
}

SuperOp::SuperOp(ModeSet modes, Eigen::MatrixXcd matrix)
    : SuperOp(modes, modes, std::move(matrix)) {}

SuperOp SuperOp::identity(const ModeSet& modes) {
    check_map_cap(modes);
    const auto d2 = static_cast<Eigen::Index>(modes.dim() * modes.dim());
    return SuperOp(modes, Eigen::MatrixXcd::Identity(d2, d2));
}

SuperOp SuperOp::zero(const ModeSet& in_modes, const ModeSet& out_modes) {
    const auto din2 = static_cast<Eigen::Index>(in_modes.dim() * in_modes.dim());
    const auto dout2 = static_cast<Eigen::Index>(out_modes.dim() * out_modes.dim());
    return SuperOp(in_modes, out_modes, Eigen::MatrixXcd::Zero(dout2, din2));
}

SuperOp SuperOp::from_action(const ModeSet& in_modes, const ModeSet& out_modes,
                             const std::function<Operator(const Operator&)>& action) {
    check_map_cap(in_modes);
    check_map_cap(out_modes);
    const auto din = static_cast<Eigen::Index>(in_modes.dim());
    const auto dout2 = static_cast<Eigen::Index>(out_modes.dim() * out_modes.dim());
    Eigen::MatrixXcd mat(dout2, din * din);
    for (Eigen::Index r = 0; r < din; ++r) {
        for (Eigen::Index c = 0; c < din; ++c) {
            Operator unit = Operator::zero(in_modes);
            unit.matrix()(r, c) = 1.0;
            Operator image = action(unit);
            if (image.modes() != out_modes) {
                throw ShapeError("action image on " + image.modes().to_string() + ", expected " +
                                 out_modes.to_string());
            }
            mat.col(r * din + c) = vec_rowmajor(image.matrix());
        }
    }
    return SuperOp(in_modes, out_modes, std::move(mat));
}

SuperOp SuperOp::conjugation(const Operator& u) {
    return from_action(u.modes(), u.modes(), [&u](const Operator& a) {
        return Operator(u.modes(), u.matrix() * a.matrix() * u.matrix().adjoint());
    });
}

SuperOp SuperOp::left_multiplication(const Operator& l) {
    return from_action(l.modes(), l.modes(), [&l](const Operator& a) { return l * a; });
}

SuperOp SuperOp::right_multiplication(const Operator& r) {
    return from_action(r.modes(), r.modes(), [&r](const Operator& a) { return a * r; });
}

SuperOp SuperOp::trace_map(const ModeSet& y) {
    return from_action(y, ModeSet{}, [](const Operator& a) {
        Eigen::MatrixXcd s(1, 1);
        s(0, 0) = a.trace();
        return Operator(ModeSet{}, std::move(s));
    });
}

Operator SuperOp::apply(const Operator& a) const {
    if (a.modes() != in_) {
        throw ShapeError("map on " + in_.to_string() + " applied to operator on " +
                         a.modes().to_string());
    }
    const auto dout = static_cast<Eigen::Index>(out_.dim());
    Eigen::VectorXcd image = mat_ * vec_rowmajor(a.matrix());
    return Operator(out_, unvec_rowmajor(image, dout, dout));
}

SuperOp SuperOp::compose(const SuperOp& inner) const {
    if (inner.out_ != in_) {
        throw ShapeError("composition mismatch: inner targets " + inner.out_.to_string() +
                         ", outer expects " + in_.to_string());
    }
    return SuperOp(inner.in_, out_, mat_ * inner.mat_);
}

SuperOp SuperOp::adjoint() const { return SuperOp(out_, in_, mat_.adjoint()); }

SuperOp SuperOp::operator+(const SuperOp& other) const {
    if (in_ != other.in_ || out_ != other.out_) throw ShapeError("superoperator sum mismatch");
    return SuperOp(in_, out_, mat_ + other.mat_);
}

SuperOp SuperOp::operator-(const SuperOp& other) const {
    if (in_ != other.in_ || out_ != other.out_) throw ShapeError("superoperator difference mismatch");
    return SuperOp(in_, out_, mat_ - other.mat_);
}

double SuperOp::max_abs_diff(const SuperOp& other) const {
    if (in_ != other.in_ || out_ != other.out_) throw ShapeError("superoperator comparison mismatch");
    return (mat_ - other.mat_).cwiseAbs().maxCoeff();
}

bool SuperOp::approx_equal(const SuperOp& other, double tol) const {
    return max_abs_diff(other) <= tol;
}

}  // namespace fermikit
