// spca-lab: workbench for clique reductions, sparse-PCA solvers, spectral gap
// deciders, and the verification suites built around them.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spcalab/hardness.hpp"
#include "spcalab/io.hpp"
#include "spcalab/spca.hpp"
#include "spcalab/spectral.hpp"
#include "spcalab/verify.hpp"

namespace {

using namespace spcalab;

// Exit code contract: 0 success / positive decision, 1 usage or parse error,
// 2 resource guard, 3 negative decision.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitNegative = 3;

struct CommonOpts {
    std::uint64_t seed = 0;
    double decision_tol = kDecisionTolerance;
    double eig_tol = kDefaultEigTolerance;
    std::uint64_t guard = kDefaultEnumerationGuard;
    std::string solver = "exact";
    std::string format = "csv";
    std::string out;
};

json tolerance_echo(const CommonOpts& opts) {
    return json{{"decision", opts.decision_tol}, {"eig", opts.eig_tol}, {"guard", opts.guard}};
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) write_text_file(out_path, text);
}

Graph load_graph(const std::string& path) { return graph_from_edge_list(read_text_file(path)); }

int cmd_gen_complete(const CommonOpts& opts, int l) {
    const Graph g = gen_complete(l);
    write_text_file(opts.out, to_edge_list(g));
    emit(json{{"family", "complete"},
              {"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"out", opts.out}},
         "");
    return kExitOk;
}

int cmd_gen_clique_minus_edge(const CommonOpts& opts, int l) {
    const Graph g = gen_clique_minus_edge(l);
    write_text_file(opts.out, to_edge_list(g));
    emit(json{{"family", "clique-minus-edge"},
              {"n", g.vertex_count()},
              {"edges", g.edge_count()},
              {"out", opts.out}},
         "");
    return kExitOk;
}

int cmd_gen_erdos_renyi(const CommonOpts& opts, int n, double p) {
    const Graph g = gen_erdos_renyi(n, p, opts.seed);
    write_text_file(opts.out, to_edge_list(g));
    emit(json{{"family", "erdos-renyi"},
              {"n", n},
              {"p", p},
              {"seed", opts.seed},
              {"edges", g.edge_count()},
              {"out", opts.out}},
         "");
    return kExitOk;
}

int cmd_gen_planted_clique(const CommonOpts& opts, int n, int k) {
    const PlantedClique planted = gen_planted_clique(n, k, opts.seed);
    write_text_file(opts.out, to_edge_list(planted.graph));
    emit(json{{"family", "planted-clique"},
              {"n", n},
              {"k", k},
              {"seed", opts.seed},
              {"edges", planted.graph.edge_count()},
              {"planted_support", planted.support.indices},
              {"out", opts.out}},
         "");
    return kExitOk;
}

int cmd_gen_two_graph(const CommonOpts& opts, int n, int l, double delta, int retries) {
    const TwoGraphFamily fam = gen_two_graph_family(n, l, delta, opts.seed, retries, opts.guard);
    const std::string clique_path = opts.out + ".clique.edges";
    const std::string sparse_path = opts.out + ".sparse.edges";
    write_text_file(clique_path, to_edge_list(fam.with_clique));
    write_text_file(sparse_path, to_edge_list(fam.sparse));
    emit(json{{"family", "two-graph"},
              {"n", n},
              {"l", l},
              {"delta", delta},
              {"seed", opts.seed},
              {"planted_support", fam.planted.indices},
              {"sparse_attempts", fam.sparse_attempts},
              {"sparse_certified", true},
              {"out_clique", clique_path},
              {"out_sparse", sparse_path}},
         "");
    return kExitOk;
}

int cmd_reduce(const CommonOpts& opts, const std::string& graph_path, int k) {
    const Graph g = load_graph(graph_path);
    const SpcaInstance inst = reduce_clique_to_spca(CliqueInstance(g, k));
    emit(instance_to_json(inst), opts.out);
    return kExitOk;
}

int cmd_solve(const CommonOpts& opts, const std::string& instance_path) {
    const SpcaInstance inst =
        instance_from_json(json::parse(read_text_file(instance_path)));
    const SpcaSolver solver =
        make_solver(solver_kind_from_name(opts.solver), opts.guard, opts.eig_tol);
    const SpcaSolution sol = solver(inst.s, inst.r);
    emit(solution_to_json(sol), opts.out);
    if (inst.m && sol.value < *inst.m - opts.decision_tol) return kExitNegative;
    return kExitOk;
}

int cmd_decide(const CommonOpts& opts, const std::string& graph_path, int k) {
    const Graph g = load_graph(graph_path);
    const SpcaSolver solver =
        make_solver(solver_kind_from_name(opts.solver), opts.guard, opts.eig_tol);
    const GapDecision gd =
        decide_clique_via_gap(CliqueInstance(g, k), solver, opts.decision_tol);
    emit(json{{"x", gd.x},
              {"threshold", gd.threshold},
              {"has_clique", gd.has_clique},
              {"solver", opts.solver},
              {"tolerances", tolerance_echo(opts)}},
         opts.out);
    return gd.has_clique ? kExitOk : kExitNegative;
}

int cmd_distinguish(const CommonOpts& opts, const std::string& first_path,
                    const std::string& second_path, int l, double alpha,
                    std::optional<double> delta) {
    const Graph first = load_graph(first_path);
    const Graph second = load_graph(second_path);
    const DistinguishConfig cfg =
        delta ? DistinguishConfig(l, alpha, *delta) : DistinguishConfig(l, alpha);
    const SpcaSolver solver =
        make_solver(solver_kind_from_name(opts.solver), opts.guard, opts.eig_tol);
    const DistinguishResult res = distinguish(first, second, cfg, solver, opts.decision_tol);
    emit(json{{"declared", res.declared == DeclaredSide::first ? "first" : "second"},
              {"achieved_value", res.achieved_value},
              {"threshold", res.threshold},
              {"l", cfg.l},
              {"alpha", cfg.alpha},
              {"delta", cfg.delta},
              {"solver", opts.solver},
              {"tolerances", tolerance_echo(opts)}},
         opts.out);
    return res.declared == DeclaredSide::first ? kExitOk : kExitNegative;
}

int cmd_verify(const std::string& suite, int max_l, int max_r, int graphs, int max_n,
               std::uint64_t seed) {
    std::vector<SuiteResult> results;
    if (suite == "lemma1" || suite == "all") results.push_back(verify_lemma1(max_l));
    if (suite == "eqstar" || suite == "all")
        results.push_back(verify_eqstar(suite == "all" ? 64 : std::max(max_l, 3), max_r));
    if (suite == "hong" || suite == "all")
        results.push_back(verify_hong(graphs == 0 ? 500 : graphs, 12, seed));
    if (suite == "reduction" || suite == "all")
        results.push_back(verify_reduction(graphs == 0 ? 200 : graphs, max_n, seed));
    if (results.empty()) {
        std::cerr << "unknown suite: " << suite
                  << " (expected lemma1 | eqstar | hong | reduction | all)\n";
        return kExitUsage;
    }
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.suite << " (" << r.checks
                  << " checks, " << r.failures << " failures)\n";
        for (const auto& note : r.failure_notes) std::cout << "  - " << note << "\n";
        all_pass = all_pass && r.passed();
    }
    return all_pass ? kExitOk : kExitNegative;
}

int cmd_experiment(const CommonOpts& opts, ExperimentConfig cfg) {
    cfg.solver = solver_kind_from_name(opts.solver);
    cfg.seed = opts.seed;
    cfg.decision_tol = opts.decision_tol;
    cfg.eig_tol = opts.eig_tol;
    cfg.guard = opts.guard;
    const ExperimentReport report = run_experiment(cfg);
    const std::string text =
        opts.format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_csv(report);
    if (opts.out.empty())
        std::cout << text;
    else {
        write_text_file(opts.out, text);
        std::cout << "rows=" << report.rows.size() << " correct=" << report.correct_count()
                  << " accuracy=" << report.accuracy() << " out=" << opts.out << "\n";
    }
    return kExitOk;
}

int cmd_eps(const CommonOpts& opts, int r_min, int r_max) {
    if (r_min < 2 || r_max < r_min) {
        std::cerr << "eps: require 2 <= rmin <= rmax\n";
        return kExitUsage;
    }
    if (opts.format == "json") {
        json rows = json::array();
        for (int r = r_min; r <= r_max; ++r) {
            const GapParams gap = eps_star(r);
            rows.push_back(
                json{{"r", r}, {"eps_star", gap.eps_star}, {"threshold", gap.threshold}});
        }
        emit(rows, opts.out);
    } else {
        std::string text = "r,eps_star,threshold\n";
        for (int r = r_min; r <= r_max; ++r) {
            const GapParams gap = eps_star(r);
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", r, gap.eps_star, gap.threshold);
            text += buf;
        }
        std::cout << text;
        if (!opts.out.empty()) write_text_file(opts.out, text);
    }
    return kExitOk;
}

bool read_guard_env(std::uint64_t& guard, std::string& error) {
    const char* raw = std::getenv("SPCA_LAB_GUARD");
    if (raw == nullptr) return true;
    const std::string text(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        error = "SPCA_LAB_GUARD must be a positive integer, got \"" + text + "\"";
        return false;
    }
    guard = value;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spca-lab: sparse-PCA hardness workbench"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string guard_error;
    if (!read_guard_env(opts.guard, guard_error)) {
        std::cerr << guard_error << "\n";
        return kExitUsage;
    }

    app.add_option("--tol", opts.decision_tol, "decision tolerance guard band")
        ->capture_default_str();
    app.add_option("--eig-tol", opts.eig_tol, "eigensolver relative tolerance")
        ->capture_default_str();

    // gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate instance files");
    gen->require_subcommand(1);

    int gen_l = 4, gen_n = 8, gen_k = 3, gen_retries = kDefaultRetryBudget;
    double gen_p = 0.5, gen_delta = 0.64;

    auto* gen_complete_cmd = gen->add_subcommand("complete", "complete graph K_l");
    gen_complete_cmd->add_option("--l", gen_l, "vertex count")->required();
    gen_complete_cmd->add_option("--out", opts.out, "output edge-list path")->required();

    auto* gen_cme = gen->add_subcommand("clique-minus-edge", "K_l minus the edge {0,1}");
    gen_cme->add_option("--l", gen_l, "vertex count")->required();
    gen_cme->add_option("--out", opts.out, "output edge-list path")->required();

    auto* gen_er = gen->add_subcommand("erdos-renyi", "G(n, p) sample");
    gen_er->add_option("--n", gen_n, "vertex count")->required();
    gen_er->add_option("--p", gen_p, "edge probability")->required();
    gen_er->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
    gen_er->add_option("--out", opts.out, "output edge-list path")->required();

    auto* gen_pc = gen->add_subcommand("planted-clique", "G(n, 1/2) with a planted k-clique");
    gen_pc->add_option("--n", gen_n, "vertex count")->required();
    gen_pc->add_option("--k", gen_k, "planted clique size")->required();
    gen_pc->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
    gen_pc->add_option("--out", opts.out, "output edge-list path")->required();

    auto* gen_tg = gen->add_subcommand(
        "two-graph", "promise pair: planted l-clique vs certified delta-sparse");
    gen_tg->add_option("--n", gen_n, "vertex count")->required();
    gen_tg->add_option("--l", gen_l, "clique / subset size")->required();
    gen_tg->add_option("--delta", gen_delta, "density bound in (0,1)")->required();
    gen_tg->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
    gen_tg->add_option("--retries", gen_retries, "rejection-sampling budget")
        ->capture_default_str();
    gen_tg->add_option("--out", opts.out, "output path base")->required();

    // reduce / solve ------------------------------------------------------
    std::string graph_path, instance_path, first_path, second_path;
    int reduce_k = 2;

    auto* reduce = app.add_subcommand("reduce", "clique instance -> sparse-PCA instance");
    reduce->add_option("--graph", graph_path, "input edge-list path")->required();
    reduce->add_option("--k", reduce_k, "clique size K (r = K, M = K-1)")->required();
    reduce->add_option("--out", opts.out, "output instance JSON path");

    auto* solve = app.add_subcommand("solve", "run a sparse-PCA solver on an instance");
    solve->add_option("--instance", instance_path, "instance JSON path")->required();
    solve->add_option("--solver", opts.solver, "exact | greedy | threshold")
        ->capture_default_str();
    solve->add_option("--out", opts.out, "output solution JSON path");

    // decide / distinguish --------------------------------------------------
    int decide_k = 2, dist_l = 4;
    double dist_alpha = 0.8;
    std::optional<double> dist_delta;

    auto* decide = app.add_subcommand("decide", "gap decider for K-clique existence");
    decide->add_option("--graph", graph_path, "input edge-list path")->required();
    decide->add_option("--k", decide_k, "clique size K (K >= 2)")->required();
    decide->add_option("--solver", opts.solver, "exact | greedy | threshold")
        ->capture_default_str();
    decide->add_option("--out", opts.out, "also write the decision JSON here");

    auto* dist = app.add_subcommand("distinguish", "declare which graph holds the l-clique");
    dist->add_option("--first", first_path, "first edge-list path")->required();
    dist->add_option("--second", second_path, "second edge-list path")->required();
    dist->add_option("--l", dist_l, "clique / subset size")->required();
    dist->add_option("--alpha", dist_alpha, "assumed approximation ratio in (0,1]")->required();
    dist->add_option("--delta", dist_delta, "density bound (defaults to alpha^2)");
    dist->add_option("--solver", opts.solver, "exact | greedy | threshold")
        ->capture_default_str();
    dist->add_option("--out", opts.out, "also write the result JSON here");

    // verify ---------------------------------------------------------------
    std::string suite;
    int verify_max_l = 6, verify_max_r = 1000, verify_graphs = 0, verify_max_n = 10;

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", suite, "lemma1 | eqstar | hong | reduction | all")->required();
    verify->add_option("--max-l", verify_max_l, "largest graph order / clique size")
        ->capture_default_str();
    verify->add_option("--max-r", verify_max_r, "largest r for the threshold identity")
        ->capture_default_str();
    verify->add_option("--graphs", verify_graphs, "sample size (0 = suite default)")
        ->capture_default_str();
    verify->add_option("--max-n", verify_max_n, "largest sampled vertex count")
        ->capture_default_str();
    verify->add_option("--seed", opts.seed, "RNG seed")->capture_default_str();

    // experiment -------------------------------------------------------------
    ExperimentConfig exp_cfg;

    auto* experiment = app.add_subcommand("experiment", "run a measured instance family");
    experiment->require_subcommand(1);

    auto* exp_gap = experiment->add_subcommand("gap-sweep", "gap decider over {K_l, K_l - e}");
    exp_gap->add_option("--lmin", exp_cfg.l_min, "smallest l")->capture_default_str();
    exp_gap->add_option("--lmax", exp_cfg.l_max, "largest l")->capture_default_str();
    exp_gap->add_option("--solver", opts.solver, "exact | greedy | threshold")
        ->capture_default_str();
    exp_gap->add_option("--out", opts.out, "report path (stdout when absent)");
    exp_gap->add_option("--format", opts.format, "csv | json")->capture_default_str();

    auto* exp_dist = experiment->add_subcommand("distinguisher", "seeded promise-pair trials");
    exp_dist->add_option("--n", exp_cfg.n, "vertex count")->capture_default_str();
    exp_dist->add_option("--l", exp_cfg.l, "clique / subset size")->capture_default_str();
    exp_dist->add_option("--delta", exp_cfg.delta, "density bound")->capture_default_str();
    exp_dist->add_option("--alpha", exp_cfg.alpha, "declared ratio")->capture_default_str();
    exp_dist->add_option("--trials", exp_cfg.trials, "number of pairs")->capture_default_str();
    exp_dist->add_option("--seed", opts.seed, "base RNG seed")->capture_default_str();
    exp_dist->add_option("--solver", opts.solver, "exact | greedy | threshold")
        ->capture_default_str();
    exp_dist->add_option("--out", opts.out, "report path (stdout when absent)");
    exp_dist->add_option("--format", opts.format, "csv | json")->capture_default_str();

    auto* exp_ratio = experiment->add_subcommand("ratio", "heuristic/optimal value ratios");
    exp_ratio->add_option("--count", exp_cfg.count, "number of instances")->capture_default_str();
    exp_ratio->add_option("--n", exp_cfg.ratio_n, "vertex count")->capture_default_str();
    exp_ratio->add_option("--r", exp_cfg.ratio_r, "sparsity")->capture_default_str();
    exp_ratio->add_option("--p", exp_cfg.ratio_p, "edge probability")->capture_default_str();
    exp_ratio->add_option("--seed", opts.seed, "base RNG seed")->capture_default_str();
    exp_ratio->add_option("--solver", opts.solver, "exact | greedy | threshold")
        ->capture_default_str();
    exp_ratio->add_option("--out", opts.out, "report path (stdout when absent)");
    exp_ratio->add_option("--format", opts.format, "csv | json")->capture_default_str();

    // eps ----------------------------------------------------------------------
    int eps_rmin = 2, eps_rmax = 16;

    auto* eps = app.add_subcommand("eps", "print the eps_star / threshold table");
    eps->add_option("--rmin", eps_rmin, "first r")->capture_default_str();
    eps->add_option("--rmax", eps_rmax, "last r")->capture_default_str();
    eps->add_option("--format", opts.format, "csv | json")->capture_default_str();
    eps->add_option("--out", opts.out, "also write the table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_complete_cmd->parsed()) return cmd_gen_complete(opts, gen_l);
        if (gen_cme->parsed()) return cmd_gen_clique_minus_edge(opts, gen_l);
        if (gen_er->parsed()) return cmd_gen_erdos_renyi(opts, gen_n, gen_p);
        if (gen_pc->parsed()) return cmd_gen_planted_clique(opts, gen_n, gen_k);
        if (gen_tg->parsed()) return cmd_gen_two_graph(opts, gen_n, gen_l, gen_delta, gen_retries);
        if (reduce->parsed()) return cmd_reduce(opts, graph_path, reduce_k);
        if (solve->parsed()) return cmd_solve(opts, instance_path);
        if (decide->parsed()) return cmd_decide(opts, graph_path, decide_k);
        if (dist->parsed())
            return cmd_distinguish(opts, first_path, second_path, dist_l, dist_alpha, dist_delta);
        if (verify->parsed())
            return cmd_verify(suite, verify_max_l, verify_max_r, verify_graphs, verify_max_n,
                              opts.seed);
        if (exp_gap->parsed()) {
            exp_cfg.family = "gap-sweep";
            return cmd_experiment(opts, exp_cfg);
        }
        if (exp_dist->parsed()) {
            exp_cfg.family = "distinguisher";
            return cmd_experiment(opts, exp_cfg);
        }
        if (exp_ratio->parsed()) {
            exp_cfg.family = "ratio";
            return cmd_experiment(opts, exp_cfg);
        }
        if (eps->parsed()) return cmd_eps(opts, eps_rmin, eps_rmax);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const EnumerationGuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const GenerationRetryError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const json::exception& e) {
        std::cerr << "json: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
