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

// Drives the installed CLI end to end. The binary path arrives in the
// FERMIKIT_BIN environment variable (set by CTest).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fermikit/json_io.hpp"
#include "fermikit/random.hpp"

using namespace fermikit;

namespace {

std::string cli() {
    const char* bin = std::getenv("FERMIKIT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FERMIKIT_BIN not set");
    return bin;
}

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const int rc = std::system((cli() + " " + args + " > " + out_path + " 2> /dev/null").c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_path.c_str());
    return {WEXITSTATUS(rc), buffer.str()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("phase subcommand prints the reference table") {
    const RunResult glyphs = run("phase --kind f --modes \"{1,2}\" --format glyphs");
    CHECK(glyphs.exit_code == 0);
    CHECK(glyphs.stdout_text ==
          "+ + + -\n"
          "+ + - +\n"
          "+ + + -\n"
          "+ + - +\n");

    const RunResult json = run("phase --kind u --ordered \"{2}|{1}\" --format json");
    CHECK(json.exit_code == 0);
    CHECK(Json::parse(json.stdout_text).at("entries") == Json::parse("[1,1,1,-1]"));

    CHECK(run("phase --kind q --modes \"{1}\"").exit_code == 1);
    CHECK(run("phase --kind h --modes \"{1,2}\"").exit_code == 1);  // needs --partition
}

TEST_CASE("reduce subcommand: diagonal state has a sign-free marginal") {
    Json state;
    state["modes"] = {1, 2};
    state["re"] = {{0.4, 0.0, 0.0, 0.0},
                   {0.0, 0.3, 0.0, 0.0},
                   {0.0, 0.0, 0.2, 0.0},
                   {0.0, 0.0, 0.0, 0.1}};
    state["density"] = true;
    write_file("cli_state.json", state.dump());

    const RunResult reduced = run("reduce --state cli_state.json --keep \"{2}\"");
    CHECK(reduced.exit_code == 0);
    const Operator marginal = operator_from_json(Json::parse(reduced.stdout_text));
    CHECK(std::abs(marginal.matrix()(0, 0) - Complex{0.6}) <= 1e-9);
    CHECK(std::abs(marginal.matrix()(1, 1) - Complex{0.4}) <= 1e-9);
    CHECK(std::abs(marginal.matrix()(0, 1)) <= 1e-12);

    // A claimed density matrix that fails PSD exits with the invariant code.
    Json bogus = state;
    bogus["re"] = {{1.5, 0.0, 0.0, 0.0},
                   {0.0, -0.5, 0.0, 0.0},
                   {0.0, 0.0, 0.0, 0.0},
                   {0.0, 0.0, 0.0, 0.0}};
    write_file("cli_bogus.json", bogus.dump());
    CHECK(run("reduce --state cli_bogus.json --keep \"{2}\"").exit_code == 2);
    std::remove("cli_bogus.json");
    std::remove("cli_state.json");
}

TEST_CASE("tensor and embed subcommands round-trip through JSON") {
    Rng rng(3);
    const Operator a = rng.operator_on(ModeSet{1});
    const Operator b = rng.operator_on(ModeSet{2});
    write_file("cli_a.json", to_json(a).dump());
    write_file("cli_b.json", to_json(b).dump());

    const RunResult ordered = run("tensor --ordered cli_a.json cli_b.json");
    CHECK(ordered.exit_code == 0);
    CHECK(operator_from_json(Json::parse(ordered.stdout_text))
              .max_abs_diff(ordered_product({a, b})) <= 1e-9);

    const RunResult fermionic = run("tensor --fermionic cli_a.json cli_b.json");
    CHECK(operator_from_json(Json::parse(fermionic.stdout_text))
              .max_abs_diff(tensor_fermionic({a, b})) <= 1e-9);

    CHECK(run("tensor cli_a.json cli_b.json").exit_code == 1);  // kind flag required

    const RunResult embedded = run("embed --into \"{1,2,3}\" cli_b.json");
    CHECK(embedded.exit_code == 0);
    CHECK(operator_from_json(Json::parse(embedded.stdout_text))
              .max_abs_diff(embed(ModeSet{1, 2, 3}, b)) <= 1e-9);

    std::remove("cli_a.json");
    std::remove("cli_b.json");
}

TEST_CASE("state and parity subcommands") {
    Rng rng(5);
    const Operator rho1 = rng.density_on(ModeSet{1}, true);
    const Operator rho2 = rng.density_on(ModeSet{2}, true);
    const Operator joint = ordered_product({rho1, rho2});
    write_file("cli_joint.json", to_json(joint, true).dump());

    const RunResult classify =
        run("state classify --partition \"{1}|{2}\" --ssr cli_joint.json");
    CHECK(classify.exit_code == 0);
    const Json verdict = Json::parse(classify.stdout_text);
    CHECK(verdict.at("uncorrelated") == true);
    CHECK(verdict.at("product_physical") == true);
    CHECK(verdict.at("physical") == true);

    const RunResult coeffs_out = run("state coeffs --basis fermionic cli_joint.json");
    CHECK(coeffs_out.exit_code == 0);

    const RunResult sectors = run("parity sectors --partition \"{1}|{2}\" cli_joint.json");
    CHECK(sectors.exit_code == 0);
    const Json blocks = Json::parse(sectors.stdout_text).at("blocks");
    // an even product state only occupies the ++ sector
    CHECK(blocks.size() == 1);
    CHECK(blocks[0].at("sector") == "++");

    const RunResult classify_op = run("parity classify cli_joint.json");
    CHECK(Json::parse(classify_op.stdout_text).at("parity") == "even");

    Json vec;
    vec["modes"] = {1};
    vec["re"] = {1.0, 1.0};
    vec["im"] = {0.0, 0.0};
    write_file("cli_vec.json", vec.dump());
    const RunResult classify_vec = run("parity classify cli_vec.json");
    CHECK(Json::parse(classify_vec.stdout_text).at("parity") == "mixed");
    std::remove("cli_vec.json");
    std::remove("cli_joint.json");
}

TEST_CASE("map subcommands") {
    const SuperOp tr = SuperOp::trace_map(ModeSet{1});
    write_file("cli_trace.json", to_json(tr).dump());

    const RunResult embedded = run("map embed --kind ordered --into \"{1,2}\" cli_trace.json");
    CHECK(embedded.exit_code == 0);
    const SuperOp back = superop_from_json(Json::parse(embedded.stdout_text));
    CHECK(back.out_modes() == ModeSet{2});

    write_file("cli_embedded.json", embedded.stdout_text);
    const RunResult choi_out = run("map choi cli_embedded.json");
    CHECK(choi_out.exit_code == 0);
    CHECK(Json::parse(choi_out.stdout_text).at("tpcp") == true);

    const RunResult classify = run("map classify cli_embedded.json");
    CHECK(classify.exit_code == 0);
    CHECK(Json::parse(classify.stdout_text).at("parity") == "even");

    std::remove("cli_trace.json");
    std::remove("cli_embedded.json");
}

TEST_CASE("check subcommand is deterministic and honors unknown suites") {
    const RunResult a = run("check --suite car --max-modes 3 --seed 7");
    const RunResult b = run("check --suite car --max-modes 3 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK(Json::parse(a.stdout_text).at("pass") == true);

    CHECK(run("check --suite nonsense").exit_code == 1);
}

TEST_CASE("FERMIKIT_TOL environment override") {
    // An absurdly loose tolerance accepts a slightly broken density matrix.
    Json state;
    state["modes"] = {1};
    state["re"] = {{0.51, 0.0}, {0.0, 0.5}};
    state["density"] = true;
    write_file("cli_loose.json", state.dump());
    const std::string out_path = "cli_tol_stdout.tmp";
    const int strict = std::system(
        (cli() + " reduce --state cli_loose.json --keep \"{1}\" > " + out_path + " 2>/dev/null")
            .c_str());
    const int loose = std::system(("FERMIKIT_TOL=0.1 " + cli() +
                                   " reduce --state cli_loose.json --keep \"{1}\" > " + out_path +
                                   " 2>/dev/null")
                                      .c_str());
    CHECK(WEXITSTATUS(strict) == 2);
    CHECK(WEXITSTATUS(loose) == 0);
    std::remove(out_path.c_str());
    std::remove("cli_loose.json");
}
