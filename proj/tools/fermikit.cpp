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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fermikit/check.hpp"
#include "fermikit/config.hpp"
#include "fermikit/json_io.hpp"
#include "fermikit/maps.hpp"
#include "fermikit/states.hpp"

namespace {

using namespace fermikit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

/// One parsed invocation: the selected command plus its I/O endpoints.
struct Job {
    std::string command;
    std::vector<std::string> inputs;
    std::string output;  // empty = stdout
};

double effective_tolerance(double flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("FERMIKIT_TOL")) {
        char* end = nullptr;
        const double parsed = std::strtod(env, &end);
        if (end != env && parsed > 0) return parsed;
    }
    return flag_value;
}

Json load_json(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return Json::parse(in);
}

void emit(const Job& job, const std::string& text) {
    if (job.output.empty() || job.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(job.output);
    if (!out) throw InputError("cannot write '" + job.output + "'");
    out << text;
}

void emit_json(const Job& job, const Json& j) { emit(job, j.dump(2) + "\n"); }

std::string format_table(const SignTable& table, const std::string& format) {
    if (format == "glyphs") return table.to_glyphs();
    if (format == "csv") return table.to_csv();
    return to_json(table).dump(2) + "\n";
}

ParityClass operator_parity_of_json(const Json& j, double tol, std::string& kind) {
    if (json_is_vector(j)) {
        kind = "vector";
        switch (vector_parity(statevector_from_json(j), tol)) {
            case VectorParity::plus: return ParityClass::even;
            case VectorParity::minus: return ParityClass::odd;
            default: return ParityClass::mixed;
        }
    }
    kind = "operator";
    return operator_parity(operator_from_json(j), tol);
}

const char* parity_name(ParityClass c) {
    switch (c) {
        case ParityClass::even: return "even";
        case ParityClass::odd: return "odd";
        default: return "mixed";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fermikit - Jordan-Wigner toolbox for fermionic mode subsets"};
    app.require_subcommand(1);

    double tol_flag = 1e-10;
    auto* tol_option =
        app.add_option("--tol", tol_flag, "entrywise tolerance (env FERMIKIT_TOL overrides the default)");

    Job job;

    // --- phase -------------------------------------------------------------
    auto* phase_cmd = app.add_subcommand("phase", "emit a phase-factor table (f, h, l, u)");
    std::string phase_kind = "f";
    std::string phase_modes, phase_partition, phase_ordered, phase_format = "glyphs";
    phase_cmd->add_option("--kind", phase_kind, "f | h | l | u")->required();
    phase_cmd->add_option("--modes", phase_modes, "mode set, e.g. \"{1,2,3}\" (kind f)");
    phase_cmd->add_option("--partition", phase_partition, "partition, e.g. \"{1,3}|{2}\" (kind h)");
    phase_cmd->add_option("--ordered", phase_ordered, "ordered partition (kinds l, u)");
    phase_cmd->add_option("--format", phase_format, "glyphs | json | csv");
    phase_cmd->add_option("--output,-o", job.output, "output path (default stdout)");

    // --- tensor ------------------------------------------------------------
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of operator JSON files");
    bool tensor_fermionic_flag = false, tensor_ordered_flag = false, tensor_standard_flag = false;
    tensor_cmd->add_flag("--fermionic", tensor_fermionic_flag, "fermionic tensor product");
    tensor_cmd->add_flag("--ordered", tensor_ordered_flag, "ordered product of embeddings");
    tensor_cmd->add_flag("--standard", tensor_standard_flag, "plain interleaved tensor product");
    tensor_cmd->add_option("inputs", job.inputs, "operand files, tuple order")->required();
    tensor_cmd->add_option("--output,-o", job.output, "output path");

    // --- embed ------------------------------------------------------------
    auto* embed_cmd = app.add_subcommand("embed", "fermionic canonical embedding into a ModeSet");
    std::string embed_into;
    embed_cmd->add_option("--into", embed_into, "target mode set")->required();
    embed_cmd->add_option("input", job.inputs, "operator JSON file")->required()->expected(1);
    embed_cmd->add_option("--output,-o", job.output, "output path");

    // --- reduce ------------------------------------------------------------
    auto* reduce_cmd = app.add_subcommand("reduce", "fermionic partial trace of an operator/state");
    std::string reduce_keep, reduce_state_path;
    reduce_cmd->add_option("--keep", reduce_keep, "mode set to keep")->required();
    reduce_cmd->add_option("--state", reduce_state_path, "input file (alias of positional)");
    reduce_cmd->add_option("input", job.inputs, "operator JSON file");
    reduce_cmd->add_option("--output,-o", job.output, "output path");

    // --- state -------------------------------------------------------------
    auto* state_cmd = app.add_subcommand("state", "density-matrix operations");
    state_cmd->require_subcommand(1);
    std::string state_partition;
    bool state_ssr = false;
    std::string state_basis = "standard";
    auto* state_reduce = state_cmd->add_subcommand("reduce", "reduced density matrix");
    state_reduce->add_option("--keep", reduce_keep, "mode set to keep")->required();
    state_reduce->add_option("input", job.inputs, "state JSON")->required()->expected(1);
    state_reduce->add_option("--output,-o", job.output, "output path");
    auto* state_coeffs = state_cmd->add_subcommand("coeffs", "expansion coefficients");
    state_coeffs->add_option("--basis", state_basis, "standard | fermionic");
    state_coeffs->add_option("input", job.inputs, "state JSON")->required()->expected(1);
    state_coeffs->add_option("--output,-o", job.output, "output path");
    auto* state_classify = state_cmd->add_subcommand("classify", "correlation/productness classifier");
    state_classify->add_option("--partition", state_partition, "partition of the modes")->required();
    state_classify->add_flag("--ssr", state_ssr, "impose the parity superselection rule");
    state_classify->add_option("input", job.inputs, "state JSON")->required()->expected(1);
    state_classify->add_option("--output,-o", job.output, "output path");

    // --- parity ------------------------------------------------------------
    auto* parity_cmd = app.add_subcommand("parity", "parity classification and projections");
    parity_cmd->require_subcommand(1);
    std::string parity_partition, parity_sector;
    int parity_sign = +1;
    auto* parity_classify = parity_cmd->add_subcommand("classify", "operator or vector parity");
    parity_classify->add_option("input", job.inputs, "operator/vector JSON")->required()->expected(1);
    parity_classify->add_option("--output,-o", job.output, "output path");
    auto* parity_project = parity_cmd->add_subcommand("project", "global or sector projection");
    parity_project->add_option("--sign", parity_sign, "+1 or -1 (global projection)");
    parity_project->add_option("--partition", parity_partition, "partition for sector projection");
    parity_project->add_option("--sector", parity_sector, "sector string, e.g. \"++-\"");
    parity_project->add_option("input", job.inputs, "operator JSON")->required()->expected(1);
    parity_project->add_option("--output,-o", job.output, "output path");
    auto* parity_sectors = parity_cmd->add_subcommand("sectors", "local parity sector decomposition");
    parity_sectors->add_option("--partition", parity_partition, "partition of the modes")->required();
    parity_sectors->add_option("input", job.inputs, "operator JSON")->required()->expected(1);
    parity_sectors->add_option("--output,-o", job.output, "output path");

    // --- map ---------------------------------------------------------------
    auto* map_cmd = app.add_subcommand("map", "superoperator operations");
    map_cmd->require_subcommand(1);
    std::string map_kind = "ordered", map_into, map_local_modes, map_local_partition;
    auto* map_embed_cmd = map_cmd->add_subcommand("embed", "embed a map with the identity padding");
    map_embed_cmd->add_option("--kind", map_kind, "fermionic | ordered");
    map_embed_cmd->add_option("--into", map_into, "target mode set")->required();
    map_embed_cmd->add_option("input", job.inputs, "superoperator JSON")->required()->expected(1);
    map_embed_cmd->add_option("--output,-o", job.output, "output path");
    auto* map_tensor_cmd = map_cmd->add_subcommand("tensor", "product of maps of disjoint subsets");
    map_tensor_cmd->add_option("--kind", map_kind, "fermionic | ordered");
    map_tensor_cmd->add_option("inputs", job.inputs, "superoperator files, tuple order")->required();
    map_tensor_cmd->add_option("--output,-o", job.output, "output path");
    auto* map_choi_cmd = map_cmd->add_subcommand("choi", "Choi matrix and TPCP verdict");
    map_choi_cmd->add_option("input", job.inputs, "superoperator JSON")->required()->expected(1);
    map_choi_cmd->add_option("--output,-o", job.output, "output path");
    auto* map_classify_cmd = map_cmd->add_subcommand("classify", "map parity/physicality/locality");
    map_classify_cmd->add_option("--local-modes", map_local_modes, "test X-locality for this set");
    map_classify_cmd->add_option("--local-partition", map_local_partition, "test xi-locality");
    map_classify_cmd->add_option("input", job.inputs, "superoperator JSON")->required()->expected(1);
    map_classify_cmd->add_option("--output,-o", job.output, "output path");

    // --- check -------------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "run invariant suites, print a JSON report");
    std::string check_suite = "all";
    CheckOptions check_options;
    check_cmd->add_option("--suite", check_suite, "all or one of: car phi tensor lambda ptrace parity tps prodext maps");
    check_cmd->add_option("--max-modes", check_options.max_modes, "largest mode count exercised");
    check_cmd->add_option("--seed", check_options.seed, "RNG seed (std::mt19937_64)");
    check_cmd->add_option("--trials", check_options.trials, "randomized trials per suite");
    check_cmd->add_option("--output,-o", job.output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const double tol = effective_tolerance(tol_flag, tol_option->count() > 0);
    set_tolerance(tol);

    try {
        if (phase_cmd->parsed()) {
            job.command = "phase";
            SignTable table{TableKind::f, "", 1, {}};
            if (phase_kind == "f") {
                table = emit_table_f(ModeSet::parse(phase_modes.empty() ? "{}" : phase_modes));
            } else if (phase_kind == "h") {
                if (phase_partition.empty()) throw InputError("kind h needs --partition");
                table = emit_table_h(Partition::parse(phase_partition));
            } else if (phase_kind == "l" || phase_kind == "u") {
                if (phase_ordered.empty()) throw InputError("kind " + phase_kind + " needs --ordered");
                const OrderedPartition ord = OrderedPartition::parse(phase_ordered);
                table = phase_kind == "l" ? emit_table_l(ord) : emit_table_u(ord);
            } else {
                throw InputError("unknown phase kind '" + phase_kind + "'");
            }
            emit(job, format_table(table, phase_format));
            return kExitOk;
        }

        if (tensor_cmd->parsed()) {
            job.command = "tensor";
            if (tensor_fermionic_flag + tensor_ordered_flag + tensor_standard_flag != 1) {
                throw InputError("choose exactly one of --fermionic, --ordered, --standard");
            }
            std::vector<Operator> operands;
            for (const std::string& path : job.inputs) {
                operands.push_back(operator_from_json(load_json(path)));
            }
            Operator result = tensor_ordered_flag    ? ordered_product(operands)
                              : tensor_fermionic_flag ? tensor_fermionic(operands)
                                                      : tensor_standard(operands);
            emit_json(job, to_json(result));
            return kExitOk;
        }

        if (embed_cmd->parsed()) {
            job.command = "embed";
            const Operator a = operator_from_json(load_json(job.inputs.at(0)));
            emit_json(job, to_json(embed(ModeSet::parse(embed_into), a)));
            return kExitOk;
        }

        if (reduce_cmd->parsed()) {
            job.command = "reduce";
            std::string path = reduce_state_path.empty()
                                   ? (job.inputs.empty() ? "-" : job.inputs.at(0))
                                   : reduce_state_path;
            const Json input = load_json(path);
            const ModeSet keep = ModeSet::parse(reduce_keep);
            if (json_is_density(input)) {
                const DensityMatrix rho = density_from_json(input, tol);
                emit_json(job, to_json(reduce_state(rho, keep, tol).op(), true));
            } else {
                emit_json(job, to_json(partial_trace(operator_from_json(input), keep)));
            }
            return kExitOk;
        }

        if (state_cmd->parsed()) {
            job.command = "state";
            const Json input = load_json(job.inputs.at(0));
            const DensityMatrix rho = density_from_json(input, tol);
            if (state_reduce->parsed()) {
                emit_json(job, to_json(reduce_state(rho, ModeSet::parse(reduce_keep), tol).op(), true));
            } else if (state_coeffs->parsed()) {
                const Basis basis = state_basis == "fermionic" ? Basis::fermionic : Basis::standard;
                const CoeffMatrix cm = coeffs(rho, basis);
                Json out = to_json(Operator(cm.modes, cm.entries));
                out["basis"] = state_basis;
                emit_json(job, out);
            } else {
                const Partition xi = Partition::parse(state_partition);
                const CorrelationReport report = classify_correlation(
                    rho, xi, state_ssr ? CorrelationMode::ssr : CorrelationMode::no_ssr, tol);
                Json out;
                out["mode"] = state_ssr ? "ssr" : "no_ssr";
                out["partition"] = xi.to_string();
                out["uncorrelated"] = report.uncorrelated;
                if (report.product_physical.has_value()) {
                    out["product_physical"] = *report.product_physical;
                } else {
                    out["product_physical"] = nullptr;
                }
                out["physical"] = report.physical;
                out["max_residual_uncorrelated"] = round12(report.max_residual_uncorrelated);
                out["max_residual_product"] = round12(report.max_residual_product);
                out["reconstruction_hermitian"] = report.reconstruction_hermitian;
                emit_json(job, out);
            }
            return kExitOk;
        }

        if (parity_cmd->parsed()) {
            job.command = "parity";
            const Json input = load_json(job.inputs.at(0));
            if (parity_classify->parsed()) {
                std::string kind;
                const ParityClass c = operator_parity_of_json(input, tol, kind);
                Json out;
                out["kind"] = kind;
                out["parity"] = kind == "vector"
                                    ? (c == ParityClass::even   ? "+1"
                                       : c == ParityClass::odd ? "-1"
                                                               : "mixed")
                                    : parity_name(c);
                emit_json(job, out);
            } else if (parity_project->parsed()) {
                const Operator a = operator_from_json(input);
                if (!parity_sector.empty()) {
                    const Partition xi = Partition::parse(parity_partition);
                    const ParitySector eps = ParitySector::parse(xi, parity_sector);
                    emit_json(job, to_json(local_parity_projector_map(xi, eps).apply(a)));
                } else {
                    emit_json(job, to_json(parity_part(a, parity_sign)));
                }
            } else {
                const Operator a = operator_from_json(input);
                const Partition xi = Partition::parse(parity_partition);
                Json blocks = Json::array();
                for (const auto& [eps, block] : sector_decomposition(a, xi, tol)) {
                    Json b;
                    b["sector"] = eps.to_string();
                    b["operator"] = to_json(block);
                    blocks.push_back(std::move(b));
                }
                Json out;
                out["partition"] = xi.to_string();
                out["blocks"] = std::move(blocks);
                emit_json(job, out);
            }
            return kExitOk;
        }

        if (map_cmd->parsed()) {
            job.command = "map";
            if (map_embed_cmd->parsed()) {
                const SuperOp omega = superop_from_json(load_json(job.inputs.at(0)));
                const MapProductKind kind =
                    map_kind == "fermionic" ? MapProductKind::fermionic : MapProductKind::ordered;
                emit_json(job, to_json(map_embed(kind, ModeSet::parse(map_into), omega)));
            } else if (map_tensor_cmd->parsed()) {
                std::vector<SuperOp> operands;
                for (const std::string& path : job.inputs) {
                    operands.push_back(superop_from_json(load_json(path)));
                }
                const MapProductKind kind =
                    map_kind == "fermionic" ? MapProductKind::fermionic : MapProductKind::ordered;
                emit_json(job, to_json(map_tensor(kind, operands)));
            } else if (map_choi_cmd->parsed()) {
                const SuperOp omega = superop_from_json(load_json(job.inputs.at(0)));
                const TpcpReport report = tpcp_report(omega, tol);
                const ChoiMatrix c = choi(omega);
                Json out;
                out["choi_re"] = Json::array();
                out["choi_im"] = Json::array();
                for (Eigen::Index r = 0; r < c.matrix.rows(); ++r) {
                    Json re_row = Json::array(), im_row = Json::array();
                    for (Eigen::Index col = 0; col < c.matrix.cols(); ++col) {
                        re_row.push_back(round12(c.matrix(r, col).real()));
                        im_row.push_back(round12(c.matrix(r, col).imag()));
                    }
                    out["choi_re"].push_back(std::move(re_row));
                    out["choi_im"].push_back(std::move(im_row));
                }
                out["completely_positive"] = report.completely_positive;
                out["trace_preserving"] = report.trace_preserving;
                out["tpcp"] = report.tpcp();
                out["min_choi_eigenvalue"] = round12(report.min_choi_eigenvalue);
                out["max_trace_residual"] = round12(report.max_trace_residual);
                emit_json(job, out);
            } else {
                const SuperOp omega = superop_from_json(load_json(job.inputs.at(0)));
                Json out;
                out["parity"] = parity_name(map_parity(omega, tol));
                out["physical"] = is_physical_map(omega, tol);
                if (!map_local_modes.empty()) {
                    const LocalityCertificate cert =
                        is_local_map(omega, ModeSet::parse(map_local_modes));
                    out["local"] = cert.local;
                    out["local_residual"] = round12(cert.residual);
                } else if (!map_local_partition.empty()) {
                    const LocalityCertificate cert =
                        is_local_map(omega, Partition::parse(map_local_partition));
                    out["local"] = cert.local;
                    out["local_residual"] = round12(cert.residual);
                }
                emit_json(job, out);
            }
            return kExitOk;
        }

        if (check_cmd->parsed()) {
            job.command = "check";
            check_options.tol = tol;
            std::vector<SuiteReport> reports;
            if (check_suite == "all") {
                reports = run_all_suites(check_options);
            } else {
                reports.push_back(run_suite(check_suite, check_options));
            }
            const Json report = report_to_json(reports, check_options);
            emit_json(job, report);
            return report.at("pass").get<bool>() ? kExitOk : kExitInvariant;
        }
    } catch (const StateError& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
