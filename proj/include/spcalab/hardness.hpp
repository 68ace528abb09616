#ifndef SPCALAB_HARDNESS_HPP
#define SPCALAB_HARDNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spcalab/spca.hpp"

namespace spcalab {

// Slack used when checking the distinguisher soundness chain numerically.
inline constexpr double kSoundnessSlack = 1e-9;

// Parameters of the two-graph distinguisher. delta defaults to alpha^2; the
// strict chain delta < alpha^2 (l-1)/l + 1/l is validated at construction.
struct DistinguishConfig {
    int l;
    double alpha;
    double delta;

    DistinguishConfig(int l, double alpha);
    DistinguishConfig(int l, double alpha, double delta);
};

enum class DeclaredSide { first, second };

struct DistinguishResult {
    DeclaredSide declared = DeclaredSide::first;
    double achieved_value = 0.0;  // solver value on the first graph
    double threshold = 0.0;       // alpha * (l - 1)
};

struct GapDecision {
    double x = 0.0;          // achieved solver value
    double threshold = 0.0;  // (K-1)(1 - eps_star(K))
    bool has_clique = false;
};

// (S = adjacency(G), r = K, M = K-1).
SpcaInstance reduce_clique_to_spca(const CliqueInstance& inst);

// Runs the solver on (adjacency(G), K) and compares against the gap
// threshold. The comparison is strict: a complete graph minus one edge
// attains the threshold exactly, so equality must classify as "no clique".
// Sound when the solver's true ratio exceeds 1 - eps_star(K); with
// heuristics the decision is reported, not guaranteed.
GapDecision decide_clique_via_gap(const CliqueInstance& inst, const SpcaSolver& solver,
                                  double decision_tol = kDecisionTolerance);

// Runs the solver on the first graph and declares the side holding the
// l-clique. Correct whenever the promise holds, the solver achieves ratio
// >= alpha, and delta <= alpha^2. The promise itself is the caller's to
// certify (see the brute-force oracles).
DistinguishResult distinguish(const Graph& first, const Graph& second,
                              const DistinguishConfig& cfg, const SpcaSolver& solver,
                              double decision_tol = kDecisionTolerance);

// Checks the soundness chain on one certified-sparse instance: with
// alpha = sqrt(delta), the exact optimum must stay below alpha*(l-1).
bool soundness_bound_check(const Graph& g, int l, double delta,
                           std::uint64_t guard = kDefaultEnumerationGuard,
                           double eig_tol = kDefaultEigTolerance);

// --- experiment runner -----------------------------------------------------

struct ReportRow {
    std::string instance_id;
    std::string family;
    int n = 0;
    int k_or_ell = 0;
    std::string solver;
    double achieved = 0.0;
    double threshold = 0.0;
    std::string decision;
    std::string ground_truth;
    bool correct = false;
};

struct ExperimentConfig {
    // "gap-sweep", "distinguisher", "ratio", or empty for an empty report.
    std::string family;
    SolverKind solver = SolverKind::exact;
    std::uint64_t seed = 0;

    // gap-sweep
    int l_min = 3;
    int l_max = 12;

    // distinguisher
    int n = 16;
    int l = 4;
    double delta = 0.64;
    double alpha = 0.8;
    int trials = 50;

    // ratio corpus (seeded Erdos-Renyi adjacency instances)
    int count = 20;
    int ratio_n = 8;
    int ratio_r = 3;
    double ratio_p = 0.5;

    // echoed into reports
    double decision_tol = kDecisionTolerance;
    double eig_tol = kDefaultEigTolerance;
    std::uint64_t guard = kDefaultEnumerationGuard;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ReportRow> rows;

    int correct_count() const;
    double accuracy() const;  // 1.0 for an empty report
};

// Deterministic function of the config; per-trial seeds derive from
// config.seed + trial index. Promises are certified with the brute-force
// oracles before a trial is scored.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace spcalab

#endif  // SPCALAB_HARDNESS_HPP
