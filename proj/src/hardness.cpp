#include "spcalab/hardness.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spcalab/rng.hpp"

namespace spcalab {

DistinguishConfig::DistinguishConfig(int l_, double alpha_, double delta_)
    : l(l_), alpha(alpha_), delta(delta_) {
    if (l < 2) throw std::invalid_argument("DistinguishConfig: require l >= 2");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("DistinguishConfig: require 0 < alpha <= 1");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("DistinguishConfig: require 0 < delta < 1");
    if (delta > alpha * alpha)
        throw std::invalid_argument("DistinguishConfig: require delta <= alpha^2");
    if (!(delta < alpha * alpha * (l - 1.0) / l + 1.0 / l))
        throw std::invalid_argument(
            "DistinguishConfig: require delta < alpha^2 (l-1)/l + 1/l");
}

DistinguishConfig::DistinguishConfig(int l_, double alpha_)
    : DistinguishConfig(l_, alpha_, alpha_ * alpha_) {}

SpcaInstance reduce_clique_to_spca(const CliqueInstance& inst) {
    return SpcaInstance(adjacency_matrix(inst.graph), inst.k,
                        static_cast<double>(inst.k) - 1.0);
}

GapDecision decide_clique_via_gap(const CliqueInstance& inst, const SpcaSolver& solver,
                                  double decision_tol) {
    if (inst.k < 2)
        throw std::invalid_argument("decide_clique_via_gap: require K >= 2");
    const GapParams gap = eps_star(inst.k);
    const SpcaSolution sol = solver(adjacency_matrix(inst.graph), inst.k);
    return {sol.value, gap.threshold, sol.value > gap.threshold + decision_tol};
}

DistinguishResult distinguish(const Graph& first, const Graph& second,
                              const DistinguishConfig& cfg, const SpcaSolver& solver,
                              double decision_tol) {
    if (first.vertex_count() != second.vertex_count())
        throw std::invalid_argument("distinguish: graphs must share the vertex count");
    if (cfg.l > first.vertex_count())
        throw std::invalid_argument("distinguish: l exceeds the vertex count");
    const SpcaSolution sol = solver(adjacency_matrix(first), cfg.l);
    const double threshold = cfg.alpha * (cfg.l - 1.0);
    const DeclaredSide declared = sol.value >= threshold - decision_tol
                                      ? DeclaredSide::first
                                      : DeclaredSide::second;
    return {declared, sol.value, threshold};
}

bool soundness_bound_check(const Graph& g, int l, double delta, std::uint64_t guard,
                           double eig_tol) {
    const double alpha = std::sqrt(delta);
    const double opt = opt_exact(adjacency_matrix(g), l, guard, eig_tol).value;
    return opt < alpha * (l - 1.0) + kSoundnessSlack;
}

// --- experiment runner ----------------------------------------------------------

int ExperimentReport::correct_count() const {
    int c = 0;
    for (const auto& row : rows) c += row.correct ? 1 : 0;
    return c;
}

double ExperimentReport::accuracy() const {
    if (rows.empty()) return 1.0;
    return static_cast<double>(correct_count()) / static_cast<double>(rows.size());
}

namespace {

std::string format_ratio(double ratio) {
    std::ostringstream out;
    out.precision(12);
    out << ratio;
    return out.str();
}

void run_gap_sweep(const ExperimentConfig& cfg, const SpcaSolver& solver,
                   ExperimentReport& report) {
    if (cfg.l_min < 2 || cfg.l_max < cfg.l_min)
        throw std::invalid_argument("run_experiment: invalid gap-sweep range");
    const std::string solver_label = solver_name(cfg.solver);
    for (int l = cfg.l_min; l <= cfg.l_max; ++l) {
        const struct {
            const char* tag;
            Graph graph;
        } cases[] = {{"complete", gen_complete(l)}, {"clique-minus-edge", gen_clique_minus_edge(l)}};
        for (const auto& c : cases) {
            CliqueInstance inst(c.graph, l);
            const bool truth = has_k_clique_bruteforce(inst, cfg.guard);
            const GapDecision gd = decide_clique_via_gap(inst, solver, cfg.decision_tol);
            ReportRow row;
            row.instance_id = std::string(c.tag) + "_l" + std::to_string(l);
            row.family = "gap-sweep";
            row.n = l;
            row.k_or_ell = l;
            row.solver = solver_label;
            row.achieved = gd.x;
            row.threshold = gd.threshold;
            row.decision = gd.has_clique ? "clique" : "no-clique";
            row.ground_truth = truth ? "clique" : "no-clique";
            row.correct = gd.has_clique == truth;
            report.rows.push_back(std::move(row));
        }
    }
}

void run_distinguisher(const ExperimentConfig& cfg, const SpcaSolver& solver,
                       ExperimentReport& report) {
    if (cfg.trials < 0) throw std::invalid_argument("run_experiment: negative trial count");
    const DistinguishConfig dc(cfg.l, cfg.alpha, cfg.delta);
    const std::string solver_label = solver_name(cfg.solver);
    for (int t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed = cfg.seed + static_cast<std::uint64_t>(t);
        const TwoGraphFamily fam =
            gen_two_graph_family(cfg.n, cfg.l, cfg.delta, trial_seed, kDefaultRetryBudget,
                                 cfg.guard);

        // Certify the promise before scoring.
        if (!has_k_clique_bruteforce(CliqueInstance(fam.with_clique, cfg.l), cfg.guard))
            throw std::logic_error("run_experiment: planted side failed clique certification");
        if (!verify_subset_density(fam.sparse, cfg.l, cfg.delta, cfg.guard))
            throw std::logic_error("run_experiment: sparse side failed density certification");

        Rng order_rng(trial_seed ^ 0x9e3779b97f4a7c15ULL);
        const bool clique_first = order_rng.uniform_int(2) == 0;
        const Graph& first = clique_first ? fam.with_clique : fam.sparse;
        const Graph& second = clique_first ? fam.sparse : fam.with_clique;

        const DistinguishResult res = distinguish(first, second, dc, solver, cfg.decision_tol);
        const char* truth = clique_first ? "first" : "second";
        const char* declared = res.declared == DeclaredSide::first ? "first" : "second";

        ReportRow row;
        row.instance_id = "pair_" + std::to_string(t);
        row.family = "distinguisher";
        row.n = cfg.n;
        row.k_or_ell = cfg.l;
        row.solver = solver_label;
        row.achieved = res.achieved_value;
        row.threshold = res.threshold;
        row.decision = declared;
        row.ground_truth = truth;
        row.correct = std::string(declared) == truth;
        report.rows.push_back(std::move(row));
    }
}

void run_ratio_corpus(const ExperimentConfig& cfg, const SpcaSolver& solver,
                      ExperimentReport& report) {
    if (cfg.count < 0) throw std::invalid_argument("run_experiment: negative instance count");
    if (cfg.ratio_r < 2 || cfg.ratio_r > cfg.ratio_n)
        throw std::invalid_argument("run_experiment: require 2 <= r <= n for the ratio corpus");
    const std::string solver_label = solver_name(cfg.solver);
    std::uint64_t draw = 0;
    for (int i = 0; i < cfg.count; ++i) {
        // Any edge gives OPT >= 1 for r >= 2; resample the rare empty draw.
        Graph g = gen_erdos_renyi(cfg.ratio_n, cfg.ratio_p, cfg.seed + draw++);
        while (g.edge_count() == 0) g = gen_erdos_renyi(cfg.ratio_n, cfg.ratio_p, cfg.seed + draw++);

        const SymmetricMatrix a = adjacency_matrix(g);
        const double opt = opt_exact(a, cfg.ratio_r, cfg.guard, cfg.eig_tol).value;
        const double achieved = solver(a, cfg.ratio_r).value;
        const double ratio = achieved / opt;

        ReportRow row;
        row.instance_id = "er_" + std::to_string(i);
        row.family = "ratio";
        row.n = cfg.ratio_n;
        row.k_or_ell = cfg.ratio_r;
        row.solver = solver_label;
        row.achieved = achieved;
        row.threshold = opt;
        row.decision = format_ratio(ratio);
        row.ground_truth = "";
        row.correct = achieved <= opt + 1e-9;
        report.rows.push_back(std::move(row));
    }
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    ExperimentReport report{config, {}};
    if (config.family.empty()) return report;

    const SpcaSolver solver = make_solver(config.solver, config.guard, config.eig_tol);
    if (config.family == "gap-sweep")
        run_gap_sweep(config, solver, report);
    else if (config.family == "distinguisher")
        run_distinguisher(config, solver, report);
    else if (config.family == "ratio")
        run_ratio_corpus(config, solver, report);
    else
        throw std::invalid_argument("run_experiment: unknown family \"" + config.family + "\"");
    return report;
}

}  // namespace spcalab
