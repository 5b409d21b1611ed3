// diversol: solvers, generators and verifiers for diverse bases, diverse
// common independent sets and diverse perfect matchings.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "diversol/dpm.hpp"
#include "diversol/io.hpp"
#include "diversol/oracles.hpp"
#include "diversol/wdb.hpp"
#include "diversol/wdcis.hpp"

namespace {

using diversol::BudgetError;
using diversol::DiverseWitness;
using diversol::ElemSet;
using diversol::InputError;
using diversol::ParseError;
using diversol::Weight;
using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInput = 3;
constexpr int kExitBudget = 4;

struct CommonFlags {
    int k = 1;
    Weight d = 0;
    std::uint64_t seed = 0;
    long long trial_budget = 128;
    int repetitions = 30;
    long long max_candidates = 200000;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_random) {
    cmd->add_option("--k", flags.k, "number of solutions");
    cmd->add_option("--d", flags.d, "minimum pairwise symmetric-difference weight");
    cmd->add_flag("--json", flags.json, "machine-readable output");
    cmd->add_option("--max-candidates", flags.max_candidates,
                    "cap on enumerated candidates / family nodes");
    if (with_random) {
        cmd->add_option("--seed", flags.seed, "root seed for all randomized phases");
        cmd->add_option("--trial-budget", flags.trial_budget,
                        "per-procedure trial cap for the randomized solver");
        cmd->add_option("--repetitions", flags.repetitions,
                        "independent repetitions of the randomized solver");
    }
}

diversol::SearchLimits limits_from(const CommonFlags& flags) {
    diversol::SearchLimits limits;
    limits.max_candidates = flags.max_candidates;
    limits.max_family_nodes = std::max<long long>(flags.max_candidates, 1) * 10;
    limits.max_tuples = std::max<long long>(flags.max_candidates, 1) * 50;
    return limits;
}

Json witness_to_json(const DiverseWitness& witness) {
    Json out;
    out["sets"] = witness.sets;
    Json pairs = Json::array();
    for (const auto& p : witness.pairwise)
        pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"weight", p.weight}});
    out["pairwise_weights"] = pairs;
    if (!witness.pairwise.empty()) out["min_pairwise"] = witness.min_pairwise;
    return out;
}

void print_witness_text(const DiverseWitness& witness) {
    for (std::size_t i = 0; i < witness.sets.size(); ++i) {
        std::cout << "  set " << i << ":";
        for (int e : witness.sets[i]) std::cout << " " << e;
        std::cout << "\n";
    }
    for (const auto& p : witness.pairwise)
        std::cout << "  pair (" << p.i << "," << p.j << "): weight " << p.weight << "\n";
}

void emit(const Json& json_record, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << json_record.dump(2) << "\n";
    else
        std::cout << text;
}

int run_solve_wdb(const std::string& path, const CommonFlags& flags) {
    diversol::ParsedMatroid parsed = diversol::parse_matroid_file(path);
    diversol::WdbInstance inst{parsed.matroid, parsed.weights, flags.k, flags.d};
    diversol::WdbAnswer answer = diversol::solve_wdb(inst, limits_from(flags));
    Json record{{"problem", "wdb"}, {"k", flags.k}, {"d", flags.d},
                {"answer", answer.yes ? "yes" : "no"}};
    if (answer.witness) record["witness"] = witness_to_json(*answer.witness);
    if (flags.json) {
        emit(record, "", true);
    } else {
        std::cout << (answer.yes ? "yes" : "no") << "\n";
        if (answer.witness) print_witness_text(*answer.witness);
    }
    return 0;
}

int run_solve_wdcis(const std::string& path1, const std::string& path2, const CommonFlags& flags) {
    diversol::ParsedMatroid parsed1 = diversol::parse_matroid_file(path1);
    diversol::ParsedMatroid parsed2 = diversol::parse_matroid_file(path2);
    // Weights come from the first file; the second must agree if it has any.
    if (parsed2.weights_given && parsed2.weights.values() != parsed1.weights.values())
        throw InputError("the two matroid files carry different weights");
    diversol::WdcisInstance inst{parsed1.matroid, parsed2.matroid, parsed1.weights, flags.k,
                                 flags.d};
    diversol::WdcisAnswer answer = diversol::solve_wdcis(inst, limits_from(flags));
    Json record{{"problem", "wdcis"}, {"k", flags.k}, {"d", flags.d},
                {"answer", answer.yes ? "yes" : "no"}};
    if (answer.witness) record["witness"] = witness_to_json(*answer.witness);
    if (flags.json) {
        emit(record, "", true);
    } else {
        std::cout << (answer.yes ? "yes" : "no") << "\n";
        if (answer.witness) print_witness_text(*answer.witness);
    }
    return 0;
}

int run_solve_dpm(const std::string& path, const CommonFlags& flags) {
    diversol::Graph g = diversol::parse_graph_file(path);
    diversol::DpmBudgets budgets;
    budgets.trial_cap = flags.trial_budget;
    budgets.repetitions = flags.repetitions;
    diversol::DpmAnswer answer = diversol::solve_dpm(g, flags.k, flags.d, budgets, flags.seed);
    std::string verdict = answer.yes ? "yes" : (answer.no_is_probabilistic ? "no (probabilistic)" : "no");
    Json record{{"problem", "dpm"},
                {"k", flags.k},
                {"d", flags.d},
                {"seed", flags.seed},
                {"answer", verdict},
                {"trials", Json{{"far", answer.stats.far_trials},
                                {"close", answer.stats.close_trials},
                                {"determinant_evals", answer.stats.determinant_evals},
                                {"repetitions_used", answer.stats.repetitions_used}}}};
    if (answer.witness) record["witness"] = witness_to_json(*answer.witness);
    if (flags.json) {
        emit(record, "", true);
    } else {
        std::cout << verdict << "\n";
        if (answer.witness) print_witness_text(*answer.witness);
    }
    return 0;
}

int run_kernelize(const std::string& path, const CommonFlags& flags, const std::string& out_path) {
    diversol::ParsedMatroid parsed = diversol::parse_matroid_file(path);
    auto* linear = dynamic_cast<const diversol::LinearMatroid*>(parsed.matroid.get());
    if (!linear) throw InputError("kernelize wdb needs a linear matroid instance");
    diversol::WdbKernel kernel = diversol::kernelize_linear(*linear, parsed.weights, flags.k, flags.d);
    std::string text = diversol::print_kernel(kernel);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write '" + out_path + "'");
        out << text;
    }
    if (flags.json) {
        Json record{{"problem", "wdb-kernel"},
                    {"trivial_yes", kernel.trivial_yes},
                    {"k", kernel.k},
                    {"d", kernel.d},
                    {"columns", kernel.columns},
                    {"instance", text}};
        emit(record, "", true);
    } else {
        std::cout << "# kernel instance, solve with --k " << kernel.k << " --d " << kernel.d
                  << (kernel.trivial_yes ? " (input already decided: yes)" : "") << "\n";
        std::cout << text;
    }
    return 0;
}

int run_verify(const std::string& problem, const std::vector<std::string>& instance_paths,
               const std::string& witness_path, const CommonFlags& flags) {
    std::vector<ElemSet> sets = diversol::parse_witness_file(witness_path);
    diversol::VerifyResult result;
    if (problem == "wdb") {
        if (instance_paths.size() != 1) throw InputError("verify wdb needs one matroid file");
        diversol::ParsedMatroid parsed = diversol::parse_matroid_file(instance_paths[0]);
        result = diversol::verify_wdb(*parsed.matroid, parsed.weights, flags.k, flags.d, sets);
    } else if (problem == "wdcis") {
        if (instance_paths.size() != 2) throw InputError("verify wdcis needs two matroid files");
        diversol::ParsedMatroid parsed1 = diversol::parse_matroid_file(instance_paths[0]);
        diversol::ParsedMatroid parsed2 = diversol::parse_matroid_file(instance_paths[1]);
        result = diversol::verify_wdcis(*parsed1.matroid, *parsed2.matroid, parsed1.weights,
                                        flags.k, flags.d, sets);
    } else if (problem == "dpm") {
        if (instance_paths.size() != 1) throw InputError("verify dpm needs one graph file");
        diversol::Graph g = diversol::parse_graph_file(instance_paths[0]);
        result = diversol::verify_dpm(g, flags.k, flags.d, sets);
    } else {
        throw InputError("unknown problem '" + problem + "'");
    }
    Json record{{"problem", problem}, {"verified", result.ok}};
    if (!result.ok) record["failure"] = result.failure;
    if (flags.json)
        emit(record, "", true);
    else if (result.ok)
        std::cout << "witness verified\n";
    else
        std::cout << "verification failed: " << result.failure << "\n";
    return result.ok ? 0 : kExitFailure;
}

int run_check_axioms(const std::string& path, const std::string& mode, bool as_json) {
    diversol::ParsedMatroid parsed = diversol::parse_matroid_file(path);
    std::vector<std::pair<std::string, diversol::AxiomMode>> selected;
    if (mode == "independence" || mode == "all")
        selected.emplace_back("independence", diversol::AxiomMode::Independence);
    if (mode == "basis" || mode == "all") selected.emplace_back("basis", diversol::AxiomMode::Basis);
    if (mode == "closure" || mode == "all")
        selected.emplace_back("closure", diversol::AxiomMode::Closure);
    if (selected.empty()) throw InputError("unknown axiom mode '" + mode + "'");

    bool all_ok = true;
    Json record = Json::array();
    for (const auto& [name, axiom_mode] : selected) {
        diversol::AxiomReport report = diversol::check_axioms(*parsed.matroid, axiom_mode);
        all_ok = all_ok && report.ok;
        Json entry{{"mode", name}, {"ok", report.ok}, {"checks", report.checks}};
        if (!report.ok) entry["violations"] = report.violations;
        record.push_back(entry);
        if (!as_json) {
            std::cout << name << ": " << (report.ok ? "pass" : "FAIL") << " (" << report.checks
                      << " checks)\n";
            for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
        }
    }
    if (as_json) std::cout << record.dump(2) << "\n";
    return all_ok ? 0 : kExitFailure;
}

std::vector<Weight> parse_weight_list(const std::string& csv) {
    std::vector<Weight> values;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        values.push_back(std::stoll(token));
    }
    return values;
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diverse-solution solvers for matroid bases, matroid intersection and perfect matchings"};
    app.require_subcommand(1);

    CommonFlags flags;

    // solve
    CLI::App* solve = app.add_subcommand("solve", "decide an instance");
    solve->require_subcommand(1);
    std::string wdb_path, wdcis_path1, wdcis_path2, dpm_path;
    CLI::App* solve_wdb = solve->add_subcommand("wdb", "weighted diverse bases");
    solve_wdb->add_option("instance", wdb_path, "matroid file")->required();
    add_common(solve_wdb, flags, false);
    CLI::App* solve_wdcis = solve->add_subcommand("wdcis", "weighted diverse common independent sets");
    solve_wdcis->add_option("instance1", wdcis_path1, "first matroid file")->required();
    solve_wdcis->add_option("instance2", wdcis_path2, "second matroid file")->required();
    add_common(solve_wdcis, flags, false);
    CLI::App* solve_dpm = solve->add_subcommand("dpm", "diverse perfect matchings");
    solve_dpm->add_option("instance", dpm_path, "graph file")->required();
    add_common(solve_dpm, flags, true);

    // kernelize
    CLI::App* kernelize = app.add_subcommand("kernelize", "compress an instance");
    kernelize->require_subcommand(1);
    CLI::App* kernelize_wdb = kernelize->add_subcommand("wdb", "kernel for linear matroids");
    std::string kernel_path, kernel_out;
    kernelize_wdb->add_option("instance", kernel_path, "linear matroid file")->required();
    kernelize_wdb->add_option("-o,--output", kernel_out, "write the kernel instance here");
    add_common(kernelize_wdb, flags, false);

    // gen
    CLI::App* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    CLI::App* gen3 = gen->add_subcommand("3partition", "3-partition reduction instance");
    Weight gen_b = 0;
    std::string gen_s_csv, gen_out;
    bool gen_json = false;
    gen3->add_option("--b", gen_b, "target triple sum")->required();
    gen3->add_option("--s", gen_s_csv, "comma-separated multiset of 3n integers")->required();
    gen3->add_option("-o,--output", gen_out, "write the instance here");
    gen3->add_flag("--json", gen_json, "machine-readable output");
    CLI::App* genrg = gen->add_subcommand("random-graph", "uniform random graph");
    int rg_n = 8;
    long long rg_m = 12;
    std::uint64_t gen_seed = 0;
    genrg->add_option("--n", rg_n, "vertices")->required();
    genrg->add_option("--m", rg_m, "edges")->required();
    genrg->add_option("--seed", gen_seed, "seed");
    genrg->add_option("-o,--output", gen_out, "write the instance here");
    CLI::App* genrl = gen->add_subcommand("random-linear", "random matrix over GF(p)");
    int rl_rows = 3, rl_cols = 6;
    std::int64_t rl_p = 5;
    genrl->add_option("--rows", rl_rows, "rows")->required();
    genrl->add_option("--cols", rl_cols, "columns")->required();
    genrl->add_option("--p", rl_p, "prime field modulus");
    genrl->add_option("--seed", gen_seed, "seed");
    genrl->add_option("-o,--output", gen_out, "write the instance here");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "check a witness against an instance");
    std::string verify_problem;
    std::vector<std::string> verify_paths;
    verify->add_option("--problem", verify_problem, "wdb|wdcis|dpm")->required();
    verify->add_option("files", verify_paths, "instance file(s) then the witness file")->required();
    add_common(verify, flags, false);

    // check-axioms
    CLI::App* axioms = app.add_subcommand("check-axioms", "exhaustive axiom verification");
    std::string axioms_path, axioms_mode = "all";
    axioms->add_option("instance", axioms_path, "matroid file")->required();
    axioms->add_option("--mode", axioms_mode, "independence|basis|closure|all");
    bool axioms_json = false;
    axioms->add_flag("--json", axioms_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_wdb->parsed()) return run_solve_wdb(wdb_path, flags);
        if (solve_wdcis->parsed()) return run_solve_wdcis(wdcis_path1, wdcis_path2, flags);
        if (solve_dpm->parsed()) return run_solve_dpm(dpm_path, flags);
        if (kernelize_wdb->parsed()) return run_kernelize(kernel_path, flags, kernel_out);
        if (gen3->parsed()) {
            std::vector<Weight> s = parse_weight_list(gen_s_csv);
            diversol::ThreePartitionReduction red = diversol::reduction_3partition(gen_b, s);
            diversol::ParsedMatroid out;
            out.kind = diversol::MatroidKind::Uniform;
            out.matroid = diversol::make_uniform(red.ground_size, red.rank);
            out.weights = diversol::WeightFunction(red.weights);
            out.weights_given = true;
            write_or_print(diversol::print_matroid(out), gen_out);
            Json record{{"k", red.k}, {"d", red.d}};
            if (gen_json)
                std::cout << record.dump(2) << "\n";
            else
                std::cerr << "# solve with --k " << red.k << " --d " << red.d << "\n";
            return 0;
        }
        if (genrg->parsed()) {
            long long max_edges = static_cast<long long>(rg_n) * (rg_n - 1) / 2;
            if (rg_m > max_edges) throw InputError("too many edges for a simple graph");
            diversol::Rng rng(diversol::derive_seed(gen_seed, 0x6772));
            std::vector<std::pair<int, int>> all;
            for (int u = 0; u < rg_n; ++u)
                for (int v = u + 1; v < rg_n; ++v) all.emplace_back(u, v);
            // Fisher-Yates prefix of size m.
            for (std::size_t i = 0; i < static_cast<std::size_t>(rg_m); ++i) {
                std::size_t j = i + static_cast<std::size_t>(rng.below(all.size() - i));
                std::swap(all[i], all[j]);
            }
            all.resize(static_cast<std::size_t>(rg_m));
            write_or_print(diversol::print_graph(diversol::Graph(rg_n, all)), gen_out);
            return 0;
        }
        if (genrl->parsed()) {
            diversol::Rng rng(diversol::derive_seed(gen_seed, 0x6c69));
            diversol::ModMatrix matrix(rl_rows, rl_cols, rl_p);
            for (int r = 0; r < rl_rows; ++r)
                for (int c = 0; c < rl_cols; ++c)
                    matrix.set(r, c, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(rl_p))));
            diversol::ParsedMatroid out;
            out.kind = diversol::MatroidKind::Linear;
            out.matroid = diversol::make_linear(matrix);
            out.weights = diversol::WeightFunction::ones(rl_cols);
            write_or_print(diversol::print_matroid(out), gen_out);
            return 0;
        }
        if (verify->parsed()) {
            if (verify_paths.size() < 2) throw InputError("verify needs instance file(s) and a witness file");
            std::string witness_path = verify_paths.back();
            verify_paths.pop_back();
            return run_verify(verify_problem, verify_paths, witness_path, flags);
        }
        if (axioms->parsed()) return run_check_axioms(axioms_path, axioms_mode, axioms_json);
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& err) {
        std::cerr << "error: budget exceeded: " << err.what() << "\n";
        return kExitBudget;
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
