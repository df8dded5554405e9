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

#include "fermikit/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace fermikit {

double round12(double value) {
    if (value == 0.0) return 0.0;  // normalizes -0.0 as well
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

namespace {

ModeSet modes_from_json(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw InputError(std::string("missing '") + key + "' array");
    }
    std::vector<ModeLabel> labels;
    for (const auto& v : j.at(key)) labels.push_back(v.get<ModeLabel>());
    return ModeSet(std::move(labels));
}

Json matrix_part_to_json(const Eigen::MatrixXcd& m, bool imaginary) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(round12(imaginary ? m(r, c).imag() : m(r, c).real()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
    const Json& re = j.at("re");
    if (!re.is_array() || static_cast<Eigen::Index>(re.size()) != rows) {
        throw InputError("'re' must be a " + std::to_string(rows) + "-row matrix");
    }
    const bool has_im = j.contains("im");
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& re_row = re.at(static_cast<std::size_t>(r));
        if (static_cast<Eigen::Index>(re_row.size()) != cols) {
            throw InputError("ragged 're' matrix");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            double im_val = 0.0;
            if (has_im) {
                im_val = j.at("im").at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)).get<double>();
            }
            m(r, c) = Complex{re_row.at(static_cast<std::size_t>(c)).get<double>(), im_val};
        }
    }
    return m;
}

}  // namespace

Json to_json(const Operator& op) { return to_json(op, false); }

Json to_json(const Operator& op, bool density) {
    Json j;
    j["modes"] = op.modes().labels();
    j["re"] = matrix_part_to_json(op.matrix(), false);
    j["im"] = matrix_part_to_json(op.matrix(), true);
    if (density) j["density"] = true;
    return j;
}

Operator operator_from_json(const Json& j) {
    ModeSet modes = modes_from_json(j, "modes");
    const auto d = static_cast<Eigen::Index>(modes.dim());
    return Operator(std::move(modes), matrix_from_json(j, d, d));
}

DensityMatrix density_from_json(const Json& j, double tol) {
    return DensityMatrix(operator_from_json(j), tol);
}

Json to_json(const SuperOp& op) {
    Json j;
    j["modes"] = op.in_modes().labels();
    if (!op.is_endomorphism()) j["modes_out"] = op.out_modes().labels();
    j["super"] = true;
    j["re"] = matrix_part_to_json(op.matrix(), false);
    j["im"] = matrix_part_to_json(op.matrix(), true);
    return j;
}

SuperOp superop_from_json(const Json& j) {
    ModeSet in = modes_from_json(j, "modes");
    ModeSet out = j.contains("modes_out") ? modes_from_json(j, "modes_out") : in;
    const auto rows = static_cast<Eigen::Index>(out.dim() * out.dim());
    const auto cols = static_cast<Eigen::Index>(in.dim() * in.dim());
    return SuperOp(std::move(in), std::move(out), matrix_from_json(j, rows, cols));
}

Json to_json(const StateVector& v) {
    Json j;
    j["modes"] = v.modes.labels();
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index k = 0; k < v.amplitudes.size(); ++k) {
        re.push_back(round12(v.amplitudes(k).real()));
        im.push_back(round12(v.amplitudes(k).imag()));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

StateVector statevector_from_json(const Json& j) {
    ModeSet modes = modes_from_json(j, "modes");
    const auto d = static_cast<Eigen::Index>(modes.dim());
    const Json& re = j.at("re");
    if (static_cast<Eigen::Index>(re.size()) != d) throw InputError("state vector length mismatch");
    Eigen::VectorXcd v(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const double im_val =
            j.contains("im") ? j.at("im").at(static_cast<std::size_t>(k)).get<double>() : 0.0;
        v(k) = Complex{re.at(static_cast<std::size_t>(k)).get<double>(), im_val};
    }
    return StateVector(std::move(modes), std::move(v));
}

Json to_json(const SignTable& table) {
    Json j;
    switch (table.kind) {
        case TableKind::f: j["kind"] = "f"; break;
        case TableKind::h: j["kind"] = "h"; break;
        case TableKind::l: j["kind"] = "l"; break;
        case TableKind::u: j["kind"] = "u"; break;
    }
    j["argument"] = table.argument;
    if (table.is_row()) {
        j["entries"] = table.entries;
    } else {
        Json rows = Json::array();
        for (std::size_t r = 0; r < table.dim; ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < table.dim; ++c) row.push_back(table.at(r, c));
            rows.push_back(std::move(row));
        }
        j["entries"] = std::move(rows);
    }
    return j;
}

bool json_is_density(const Json& j) {
    return j.contains("density") && j.at("density").is_boolean() && j.at("density").get<bool>();
}

bool json_is_super(const Json& j) {
    return j.contains("super") && j.at("super").is_boolean() && j.at("super").get<bool>();
}

bool json_is_vector(const Json& j) {
    return j.contains("re") && j.at("re").is_array() && !j.at("re").empty() &&
           !j.at("re").at(0).is_array();
}

}  // namespace fermikit
