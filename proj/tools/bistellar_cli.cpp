/*
   Copyright 2026 The bistellar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bistellar/bistellar.hpp>

namespace {

using namespace bistellar;

// Exit codes: 0 pass, 1 property failure, 2 input error, 3 budget, 4 inadmissible move.
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMove = 4;

std::vector<Domain> parse_fields(const std::string& spec) {
    std::vector<Domain> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == ',') {
            std::string tok = spec.substr(start, i - start);
            start = i + 1;
            if (tok.empty()) continue;
            if (tok == "2" || tok == "4" || tok == "8" || tok == "16")
                out.push_back(Domain::parse("F" + tok));
            else if (tok.find_first_not_of("0123456789") == std::string::npos)
                out.push_back(Domain::prime(static_cast<std::uint32_t>(std::stoul(tok))));
            else
                out.push_back(Domain::parse(tok));
        }
    }
    if (out.empty()) throw input_error("no fields given");
    return out;
}

VertexTuple parse_locus(const std::string& spec) {
    VertexTuple out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == ',') {
            std::string tok = spec.substr(start, i - start);
            start = i + 1;
            if (tok.empty()) continue;
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw input_error("locus must be a comma-separated vertex list");
            out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        }
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
}

struct LoadedInput {
    enum class Kind { Triangulation, Spine, System } kind;
    Triangulation tri;
    SpinePresentation spine;
    RelationSystem system;
    std::string raw;
    std::string name;
};

LoadedInput load_input(const std::string& path, const std::string& fixture) {
    LoadedInput in;
    if (!fixture.empty()) {
        in.kind = LoadedInput::Kind::Spine;
        in.spine = spine_fixture(fixture);
        in.raw = spine_to_json(in.spine).dump();
        in.name = "fixture:" + fixture;
        return in;
    }
    if (path.empty()) throw input_error("need --input or --fixture");
    in.raw = read_file(path);
    in.name = path;
    nlohmann::json j = json_parse(in.raw, path);
    if (j.contains("simplices")) {
        in.kind = LoadedInput::Kind::Triangulation;
        in.tri = triangulation_from_json(j);
    } else if (j.contains("butterflies")) {
        in.kind = LoadedInput::Kind::Spine;
        in.spine = spine_from_json(j);
    } else if (j.contains("relations")) {
        in.kind = LoadedInput::Kind::System;
        in.system = system_from_json(j);
    } else {
        throw input_error(path + ": not a triangulation, spine, or relation system file");
    }
    return in;
}

RelationSystem system_from_input(const LoadedInput& in, const std::string& field_tag,
                                 bool signed_mode) {
    switch (in.kind) {
        case LoadedInput::Kind::System: return in.system;
        case LoadedInput::Kind::Spine: {
            Domain dom = field_tag.empty() ? Domain::binary(1) : Domain::parse(field_tag);
            return ptolemy_system_from_spine(in.spine, dom, signed_mode);
        }
        case LoadedInput::Kind::Triangulation: {
            if (in.tri.dim == 3) {
                Domain dom = field_tag.empty() ? Domain::binary(1) : Domain::parse(field_tag);
                return ptolemy_system_from_3d(in.tri, dom, signed_mode);
            }
            Domain dom = field_tag.empty() ? Domain::rational() : Domain::parse(field_tag);
            return cayley_menger_system(in.tri, dom);
        }
    }
    throw input_error("unreachable input kind");
}

int cmd_relations(const std::string& input, const std::string& fixture, const std::string& field,
                  bool signed_mode, const std::string& out) {
    LoadedInput in = load_input(input, fixture);
    RelationSystem sys = system_from_input(in, field, signed_mode);
    emit(system_to_json(sys).dump(2) + "\n", out);
    return 0;
}

int cmd_count(const std::string& input, const std::string& fixture, const std::string& fields_spec,
              const std::string& mode, const EnumOptions& opts, const std::string& out) {
    LoadedInput in = load_input(input, fixture);
    RelationSystem sys = system_from_input(in, "", false);
    std::vector<Domain> fields = parse_fields(fields_spec);

    RunReport report("count " + in.name);
    report.add_input(in.name, in.raw);
    nlohmann::json results;
    results["variables"] = sys.vars.size();
    results["relations"] = sys.relations.size();
    CountReport counts = count_over_fields(sys, fields, opts);
    results["counts"] = count_report_to_json(counts);
    results["dim_estimate"] = dim_estimate_to_json(dim_estimate(counts));
    if (mode == "collect") {
        auto& sols = results["solutions"] = nlohmann::json::array();
        for (Domain f : fields) sols.push_back(solution_set_to_json(collect_solutions(sys, f, opts)));
    }
    report.set_results(std::move(results));
    emit(report.dump(), out);
    return 0;
}

int cmd_pachner(const std::string& input, const std::string& move, const std::string& locus_spec,
                const std::string& out) {
    if (input.empty()) throw input_error("need --input");
    std::string raw = read_file(input);
    Triangulation t = triangulation_from_json(json_parse(raw, input));
    MoveLocus locus{move_kind_parse(move), parse_locus(locus_spec)};
    Triangulation result = pachner(t, locus);
    emit(triangulation_to_json(result).dump(2) + "\n", out);
    return 0;
}

int cmd_check_move(const std::string& input, const std::string& move,
                   const std::string& locus_spec, const std::string& fields_spec,
                   const EnumOptions& opts, bool no_diff, const std::string& out) {
    if (input.empty()) throw input_error("need --input");
    std::string raw = read_file(input);
    Triangulation t = triangulation_from_json(json_parse(raw, input));
    MoveLocus locus{move_kind_parse(move), parse_locus(locus_spec)};
    std::vector<Domain> fields = parse_fields(fields_spec);

    RunReport report("check-move " + move + " " + input);
    report.add_input(input, raw);
    report.set_results(check_move_report(t, locus, fields, opts, !no_diff));
    emit(report.dump(), out);
    return 0;
}

int cmd_oracle(const std::string& suite, std::uint64_t seed, std::uint64_t trials,
               const std::string& field_tag, const std::string& out) {
    SuiteResult r;
    if (suite == "cm") r = suite_cm(seed, trials ? trials : 1000);
    else if (suite == "concyclic") r = suite_concyclic(seed, trials ? trials : 1000);
    else if (suite == "berger") r = suite_berger(seed, trials ? trials : 1000);
    else if (suite == "ptolemy") r = suite_ptolemy(seed, trials ? trials : 1000);
    else if (suite == "pentagon")
        r = suite_pentagon(seed, trials ? trials : 10000,
                           field_tag.empty() ? Domain::prime(101) : Domain::parse(field_tag));
    else if (suite == "quad") r = suite_quad(seed, trials ? trials : 1000);
    else if (suite == "hyperbolic") r = suite_hyperbolic(seed, trials ? trials : 1000);
    else if (suite == "spherical") r = suite_spherical(seed, trials ? trials : 1000);
    else if (suite == "invariance") r = suite_invariance(seed, trials ? trials : 200);
    else throw input_error("unknown oracle suite: '" + suite + "'");

    RunReport report("oracle " + suite + " seed=" + std::to_string(seed));
    report.set_results(suite_to_json(r));
    emit(report.dump(), out);
    return r.pass ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial consistency systems of manifold triangulations: generation, Pachner moves, and exact finite-field solution counting"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string input, fixture, field, out, move, locus, fields = "2,4,8", mode = "count";
    std::string suite;
    bool signed_mode = false, no_diff = false;
    std::uint64_t seed = 0, trials = 0;
    EnumOptions opts;

    auto add_io = [&](CLI::App* sub, bool with_fixture) {
        sub->add_option("--input,-i", input, "input file (JSON)");
        if (with_fixture) sub->add_option("--fixture", fixture, "built-in fixture 2_1..2_4");
        sub->add_option("--out,-o", out, "output path (default: stdout)");
    };
    auto add_enum = [&](CLI::App* sub) {
        sub->add_option("--budget", opts.node_budget, "assignment-space budget (default 2^34)");
        sub->add_option("--threads", opts.threads, "worker threads (results are thread-invariant)");
        sub->add_option("--collect-cap", opts.collect_cap, "max solutions to materialize");
    };

    auto* rel = app.add_subcommand("relations", "emit the consistency system of a triangulation or spine");
    add_io(rel, true);
    rel->add_option("--field", field, "coefficient field tag (default: F2 for spines/3D, Q for 4D)");
    rel->add_flag("--signed", signed_mode, "experimental signed variant (+,+,-) over any domain");

    auto* cnt = app.add_subcommand("count", "count exact solutions over finite fields");
    add_io(cnt, true);
    cnt->add_option("--fields", fields, "comma list, e.g. 2,4,8 or F2,Fp:101 (default 2,4,8)");
    cnt->add_option("--mode", mode, "count | collect")->check(CLI::IsMember({"count", "collect"}));
    add_enum(cnt);

    auto* pch = app.add_subcommand("pachner", "apply a bistellar move");
    add_io(pch, false);
    pch->add_option("--move", move, "1-4 4-1 2-3 3-2 1-5 5-1 2-4 4-2 3-3 identity")->required();
    pch->add_option("--locus", locus, "comma-separated vertex list identifying the move");

    auto* chk = app.add_subcommand("check-move", "compare the local systems before and after a move");
    add_io(chk, false);
    chk->add_option("--move", move, "move kind")->required();
    chk->add_option("--locus", locus, "locus vertex list");
    chk->add_option("--fields", fields, "fields for counting (default 2,4,8)");
    chk->add_flag("--no-diff", no_diff, "skip the solution-set symmetric difference");
    add_enum(chk);

    auto* orc = app.add_subcommand("oracle", "run a geometric ground-truth property suite");
    orc->add_option("suite", suite, "cm concyclic berger ptolemy pentagon quad hyperbolic spherical invariance")
        ->required();
    orc->add_option("--seed", seed, "random seed (default 0)");
    orc->add_option("--trials", trials, "trial count (default: suite-specific)");
    orc->add_option("--field", field, "field for the pentagon suite (default F101)");
    orc->add_option("--threads", opts.threads, "accepted for report comparability; suites are single-threaded");
    orc->add_option("--out,-o", out, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rel->parsed()) return cmd_relations(input, fixture, field, signed_mode, out);
        if (cnt->parsed()) return cmd_count(input, fixture, fields, mode, opts, out);
        if (pch->parsed()) return cmd_pachner(input, move, locus, out);
        if (chk->parsed()) return cmd_check_move(input, move, locus, fields, opts, no_diff, out);
        if (orc->parsed()) return cmd_oracle(suite, seed, trials, field, out);
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const move_error& e) {
        std::cerr << "move: " << e.what() << "\n";
        return kExitMove;
    } catch (const input_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
