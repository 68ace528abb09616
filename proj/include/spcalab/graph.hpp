#ifndef SPCALAB_GRAPH_HPP
#define SPCALAB_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spcalab/errors.hpp"

namespace spcalab {

// Subset enumeration cap for the brute-force oracles.
inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

// Retry budget for rejection-sampled generators.
inline constexpr int kDefaultRetryBudget = 100;

// Simple undirected labeled graph: 0-indexed vertices, no self-loops, no
// duplicate edges. Edges are kept canonical (u < v, sorted) and an adjacency
// lookup table is maintained alongside.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    bool has_isolated_vertex() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<char> adj_;  // n*n lookup
};

struct CliqueInstance {
    Graph graph;
    int k = 1;

    CliqueInstance(Graph g, int k);
};

// Sorted distinct vertex/coordinate indices.
struct Support {
    std::vector<int> indices;

    Support() = default;
    explicit Support(std::vector<int> idx);  // sorts; rejects negatives and duplicates

    int size() const { return static_cast<int>(indices.size()); }
    bool operator==(const Support& other) const { return indices == other.indices; }
};

// --- edge-list text format ----------------------------------------------
//
// First line "n m"; then m lines "u v" with 0-indexed endpoints. Lines
// starting with '#' and blank lines are ignored. LF line endings.
Graph graph_from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// --- generators -----------------------------------------------------------

Graph gen_complete(int l);

// K_l with the edge {0,1} removed, so the two degree-(l-2) vertices come
// first and the adjacency matrix has the block form [[0 J],[J J-I]].
Graph gen_clique_minus_edge(int l);

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

struct PlantedClique {
    Graph graph;
    Support support;
};

// G(n, 1/2) with a uniformly chosen k-subset completed to a clique.
PlantedClique gen_planted_clique(int n, int k, std::uint64_t seed);

struct TwoGraphFamily {
    Graph with_clique;    // contains a planted l-clique
    Graph sparse;         // certified: every l-subset has at most delta*l*(l-1)/2 edges
    Support planted;
    int sparse_attempts = 0;
};

// Promise-pair generator. The sparse side is rejection-sampled and certified
// by the exhaustive density check; throws GenerationRetryError once the
// retry budget is spent.
TwoGraphFamily gen_two_graph_family(int n, int l, double delta, std::uint64_t seed,
                                    int retry_budget = kDefaultRetryBudget,
                                    std::uint64_t guard = kDefaultEnumerationGuard);

// --- brute-force oracles ----------------------------------------------------

// Exhaustive over K-subsets: true iff some K-subset induces K(K-1)/2 edges.
bool has_k_clique_bruteforce(const CliqueInstance& inst,
                             std::uint64_t guard = kDefaultEnumerationGuard);

struct DensestSubgraph {
    int max_edges = 0;
    Support argmax;  // lexicographically smallest maximizer
};

DensestSubgraph densest_k_subgraph_bruteforce(const Graph& g, int k,
                                              std::uint64_t guard = kDefaultEnumerationGuard);

// True iff every l-subset induces at most delta*l*(l-1)/2 edges.
bool verify_subset_density(const Graph& g, int l, double delta,
                           std::uint64_t guard = kDefaultEnumerationGuard);

int induced_edge_count(const Graph& g, const std::vector<int>& subset);

// --- subset enumeration -----------------------------------------------------

// C(n, k) saturated at cap+1 so callers can test "> cap" without overflow.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

void check_enumeration_guard(int n, int k, std::uint64_t guard);

// Visits all k-subsets of {0..n-1} in lexicographic order. The visitor
// returns true to stop early.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(static_cast<const std::vector<int>&>(subset))) return;
        // advance to the next combination
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace spcalab

#endif  // SPCALAB_GRAPH_HPP
