#include "spcalab/verify.hpp"

#include <cmath>
#include <sstream>

#include "spcalab/hardness.hpp"
#include "spcalab/spca.hpp"
#include "spcalab/spectral.hpp"

namespace spcalab {

namespace {

constexpr int kMaxNotes = 8;

void note_failure(SuiteResult& result, const std::string& message) {
    ++result.failures;
    if (static_cast<int>(result.failure_notes.size()) < kMaxNotes)
        result.failure_notes.push_back(message);
}

void check(SuiteResult& result, bool ok, const std::string& message) {
    ++result.checks;
    if (!ok) note_failure(result, message);
}

Graph graph_from_mask(int l, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < l; ++u)
        for (int v = u + 1; v < l; ++v, ++bit)
            if (mask & (1ULL << bit)) edges.emplace_back(u, v);
    return Graph(l, std::move(edges));
}

}  // namespace

SuiteResult verify_lemma1(int max_l, double tol) {
    SuiteResult result{"lemma1", 0, 0, {}};
    if (max_l > 7) {
        note_failure(result, "lemma1: max_l > 7 is not enumerable at desk scale");
        return result;
    }
    for (int l = 2; l <= max_l; ++l) {
        const int bits = l * (l - 1) / 2;
        const std::uint64_t total = 1ULL << bits;
        const std::uint64_t complete_mask = total - 1;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Graph g = graph_from_mask(l, mask);
            const double lambda = top_eigenpair(adjacency_matrix(g)).lambda;
            const bool at_l_minus_1 = std::abs(lambda - (l - 1.0)) <= tol;
            const bool is_complete = mask == complete_mask;
            if (at_l_minus_1 != is_complete) {
                std::ostringstream msg;
                msg << "lemma1: l=" << l << " mask=" << mask << " lambda=" << lambda
                    << " complete=" << is_complete;
                note_failure(result, msg.str());
            }
            ++result.checks;
        }
    }
    return result;
}

SuiteResult verify_eqstar(int max_l, int max_r) {
    SuiteResult result{"eqstar", 0, 0, {}};
    for (int l = 3; l <= max_l; ++l) {
        const CliqueMinusEdgeSpectrum cs = clique_minus_edge_spectrum(l);
        const double lambda_pi =
            top_eigenpair(adjacency_matrix(gen_clique_minus_edge(l))).lambda;
        check(result, std::abs(cs.lambda - lambda_pi) <= 1e-8,
              "eqstar: closed form vs eigensolver mismatch at l=" + std::to_string(l));
        const double residual = cs.lambda * cs.lambda - (l - 3.0) * cs.lambda - 2.0 * (l - 2.0);
        check(result, std::abs(residual) <= 1e-10,
              "eqstar: quadratic residual too large at l=" + std::to_string(l));
    }
    for (int r = 2; r <= max_r; ++r) {
        const GapParams gap = eps_star(r);
        const double lambda = clique_minus_edge_spectrum(r).lambda;
        check(result, std::abs(gap.threshold - lambda) <= 1e-9,
              "eqstar: threshold identity fails at r=" + std::to_string(r));
    }
    check(result, std::abs(eps_star(2).eps_star - 1.0) <= 1e-12, "eqstar: eps*(2) != 1");
    check(result, std::abs(eps_star(3).eps_star - (1.0 - 1.0 / std::sqrt(2.0))) <= 1e-12,
          "eqstar: eps*(3) != 1 - 1/sqrt(2)");
    return result;
}

SuiteResult verify_hong(int min_graphs, int max_n, std::uint64_t seed) {
    SuiteResult result{"hong", 0, 0, {}};

    // Tight cases.
    for (int n = 2; n <= max_n; ++n) {
        const Graph g = gen_complete(n);
        const double lambda = top_eigenpair(adjacency_matrix(g)).lambda;
        const HongBound hb = hong_bound(g);
        check(result, hb.applicable && std::abs(lambda - hb.value) <= 1e-8,
              "hong: bound not tight on the complete graph n=" + std::to_string(n));
    }
    {
        const Graph p3 = gen_clique_minus_edge(3);  // the 2-edge path
        const double lambda = top_eigenpair(adjacency_matrix(p3)).lambda;
        const HongBound hb = hong_bound(p3);
        check(result, hb.applicable && std::abs(lambda - hb.value) <= 1e-8,
              "hong: bound not tight on the 2-edge path");
    }

    const double ps[] = {0.3, 0.5, 0.8};
    int accepted = 0;
    std::uint64_t draw = 0;
    while (accepted < min_graphs) {
        const int n = 4 + static_cast<int>(draw % static_cast<std::uint64_t>(max_n - 3));
        const double p = ps[(draw / 7) % 3];
        const Graph g = gen_erdos_renyi(n, p, seed + draw);
        ++draw;
        if (g.has_isolated_vertex()) continue;
        ++accepted;
        const double lambda = top_eigenpair(adjacency_matrix(g)).lambda;
        const HongBound hb = hong_bound(g);
        if (!hb.applicable || lambda > hb.value + 1e-9) {
            std::ostringstream msg;
            msg << "hong: violated on n=" << n << " p=" << p << " seed=" << (seed + draw - 1)
                << " lambda=" << lambda << " bound=" << hb.value;
            note_failure(result, msg.str());
        }
        ++result.checks;
    }
    return result;
}

SuiteResult verify_reduction(int min_graphs, int max_n, std::uint64_t seed) {
    SuiteResult result{"reduction", 0, 0, {}};
    const double ps[] = {0.3, 0.5, 0.8};
    const int n_lo = 6;
    const int n_hi = max_n;
    int graphs = 0;
    std::uint64_t draw = 0;
    while (graphs < min_graphs) {
        const int n = n_lo + static_cast<int>(draw % static_cast<std::uint64_t>(n_hi - n_lo + 1));
        const double p = ps[(draw / 5) % 3];
        const Graph g = gen_erdos_renyi(n, p, seed + draw);
        ++draw;
        ++graphs;
        for (int k = 2; k <= 5; ++k) {
            const CliqueInstance inst(g, k);
            const bool truth = has_k_clique_bruteforce(inst);
            const bool decided = spca_decide(reduce_clique_to_spca(inst));
            if (truth != decided) {
                std::ostringstream msg;
                msg << "reduction: mismatch on n=" << n << " p=" << p
                    << " seed=" << (seed + draw - 1) << " K=" << k << " oracle=" << truth;
                note_failure(result, msg.str());
            }
            ++result.checks;
        }
    }
    return result;
}

std::vector<SuiteResult> verify_all() {
    return {verify_lemma1(), verify_eqstar(), verify_hong(), verify_reduction()};
}

}  // namespace spcalab
