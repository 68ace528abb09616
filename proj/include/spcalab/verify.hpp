#ifndef SPCALAB_VERIFY_HPP
#define SPCALAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spcalab/graph.hpp"

namespace spcalab {

struct SuiteResult {
    std::string suite;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_notes;  // first few failures, for diagnostics

    bool passed() const { return failures == 0; }
};

// Exhaustive over every labeled graph on 2..max_l vertices: the spectral
// radius of the adjacency matrix equals l-1 (within tol) iff the graph is
// complete.
SuiteResult verify_lemma1(int max_l = 6, double tol = 1e-8);

// Closed-form clique-minus-edge spectrum against the eigensolver for
// l = 3..max_l, the quadratic residual, the gap-threshold identity
// (r-1)(1-eps_star(r)) = lambda(K_r - e) for r = 2..max_r, and the pinned
// eps_star values at r = 2 and 3.
SuiteResult verify_eqstar(int max_l = 64, int max_r = 1000);

// Spectral radius <= sqrt(2e - n + 1) on seeded graphs without isolated
// vertices, with tightness observed on complete graphs and the 2-edge path.
SuiteResult verify_hong(int min_graphs = 500, int max_n = 12, std::uint64_t seed = 0);

// Decision equivalence through the reduction on seeded Erdos-Renyi graphs
// (p in {0.3, 0.5, 0.8}) for K = 2..5, against the exhaustive clique oracle.
SuiteResult verify_reduction(int min_graphs = 200, int max_n = 10, std::uint64_t seed = 0);

std::vector<SuiteResult> verify_all();

}  // namespace spcalab

#endif  // SPCALAB_VERIFY_HPP
