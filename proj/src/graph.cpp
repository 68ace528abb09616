#include "spcalab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spcalab/rng.hpp"

namespace spcalab {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: vertex index out of range");
        if (u > v) std::swap(u, v);
        if (adj_[static_cast<std::size_t>(u) * n + v])
            throw std::invalid_argument("Graph: duplicate edge");
        adj_[static_cast<std::size_t>(u) * n + v] = 1;
        adj_[static_cast<std::size_t>(v) * n + u] = 1;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph::degree: vertex out of range");
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[static_cast<std::size_t>(v) * n_ + u];
    return d;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 0) return true;
    return false;
}

CliqueInstance::CliqueInstance(Graph g, int k) : graph(std::move(g)), k(k) {
    if (k < 1 || k > graph.vertex_count())
        throw std::invalid_argument("CliqueInstance: require 1 <= K <= n");
}

Support::Support(std::vector<int> idx) : indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0) throw std::invalid_argument("Support: negative index");
        if (i > 0 && indices[i] == indices[i - 1])
            throw std::invalid_argument("Support: duplicate index");
    }
}

// --- edge-list parsing -------------------------------------------------------

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// Parses exactly two integers, rejecting trailing junk.
bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    if (!(in >> a >> b)) return false;
    std::string rest;
    if (in >> rest) return false;
    return true;
}

}  // namespace

Graph graph_from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
            throw EdgeListParseError(EdgeListErrorKind::malformed_line, lineno,
                                     "edge list: expected header \"n m\" at line " +
                                         std::to_string(lineno));
        break;
    }
    if (n < 0)
        throw EdgeListParseError(EdgeListErrorKind::malformed_line, lineno,
                                 "edge list: missing header line");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    long long read = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        if (read == m)
            throw EdgeListParseError(EdgeListErrorKind::malformed_line, lineno,
                                     "edge list: content after the last declared edge at line " +
                                         std::to_string(lineno));
        long long u = 0, v = 0;
        if (!parse_two_ints(line, u, v))
            throw EdgeListParseError(EdgeListErrorKind::malformed_line, lineno,
                                     "edge list: expected \"u v\" at line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw EdgeListParseError(EdgeListErrorKind::vertex_out_of_range, lineno,
                                     "edge list: vertex index out of range at line " +
                                         std::to_string(lineno));
        if (u == v)
            throw EdgeListParseError(EdgeListErrorKind::self_loop, lineno,
                                     "edge list: self-loop at line " + std::to_string(lineno));
        int a = static_cast<int>(u), b = static_cast<int>(v);
        if (a > b) std::swap(a, b);
        if (seen[static_cast<std::size_t>(a) * n + b])
            throw EdgeListParseError(EdgeListErrorKind::duplicate_edge, lineno,
                                     "edge list: duplicate edge at line " + std::to_string(lineno));
        seen[static_cast<std::size_t>(a) * n + b] = 1;
        edges.emplace_back(a, b);
        ++read;
    }
    if (read != m)
        throw EdgeListParseError(EdgeListErrorKind::malformed_line, lineno,
                                 "edge list: declared " + std::to_string(m) + " edges, found " +
                                     std::to_string(read));
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// --- generators ---------------------------------------------------------------

Graph gen_complete(int l) {
    if (l < 1) throw std::invalid_argument("gen_complete: require l >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(l) * (l - 1) / 2);
    for (int u = 0; u < l; ++u)
        for (int v = u + 1; v < l; ++v) edges.emplace_back(u, v);
    return Graph(l, std::move(edges));
}

Graph gen_clique_minus_edge(int l) {
    if (l < 2) throw std::invalid_argument("gen_clique_minus_edge: require l >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < l; ++u)
        for (int v = u + 1; v < l; ++v)
            if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
    return Graph(l, std::move(edges));
}

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_erdos_renyi: require n >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("gen_erdos_renyi: require 0 <= p <= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

namespace {

// First k entries of a seeded Fisher-Yates pass, sorted.
std::vector<int> sample_subset(int n, int k, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < k; ++i) {
        const int j = i + rng.uniform_int(n - i);
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    perm.resize(static_cast<std::size_t>(k));
    std::sort(perm.begin(), perm.end());
    return perm;
}

Graph overlay_clique(const Graph& base, const std::vector<int>& subset) {
    auto edges = base.edges();
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (!base.has_edge(subset[i], subset[j])) edges.emplace_back(subset[i], subset[j]);
    return Graph(base.vertex_count(), std::move(edges));
}

}  // namespace

PlantedClique gen_planted_clique(int n, int k, std::uint64_t seed) {
    if (k < 1 || k > n) throw std::invalid_argument("gen_planted_clique: require 1 <= k <= n");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < 0.5) edges.emplace_back(u, v);
    Graph background(n, std::move(edges));
    std::vector<int> subset = sample_subset(n, k, rng);
    Graph graph = overlay_clique(background, subset);
    return {std::move(graph), Support(std::move(subset))};
}

TwoGraphFamily gen_two_graph_family(int n, int l, double delta, std::uint64_t seed,
                                    int retry_budget, std::uint64_t guard) {
    if (l < 1 || l > n) throw std::invalid_argument("gen_two_graph_family: require 1 <= l <= n");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("gen_two_graph_family: require 0 < delta < 1");
    if (retry_budget < 1)
        throw std::invalid_argument("gen_two_graph_family: retry budget must be positive");

    // Low background density keeps the sparse side certifiable at small n.
    const double q = 1.0 / static_cast<double>(std::max(2, n));
    Rng rng(seed);

    auto sample_background = [&]() {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform01() < q) edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    };

    Graph clique_base = sample_background();
    std::vector<int> subset = sample_subset(n, l, rng);
    Graph with_clique = overlay_clique(clique_base, subset);

    for (int attempt = 1; attempt <= retry_budget; ++attempt) {
        Graph candidate = sample_background();
        if (verify_subset_density(candidate, l, delta, guard))
            return {std::move(with_clique), std::move(candidate), Support(std::move(subset)),
                    attempt};
    }
    throw GenerationRetryError(
        "gen_two_graph_family: no certified sparse graph within " +
        std::to_string(retry_budget) + " attempts (n=" + std::to_string(n) +
        ", l=" + std::to_string(l) + ", delta=" + std::to_string(delta) + ")");
}

// --- brute-force oracles -------------------------------------------------------

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    const std::uint64_t sat = (cap == UINT64_MAX) ? cap : cap + 1;
    // C(n,k) = prod_{i=1..k} (n-k+i)/i, integral at every prefix
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (c > UINT64_MAX / num) return sat;  // saturate before overflow
        c = c * num / static_cast<std::uint64_t>(i);
        if (c > cap) return sat;
    }
    return c;
}

void check_enumeration_guard(int n, int k, std::uint64_t guard) {
    if (binomial_capped(n, k, guard) > guard)
        throw EnumerationGuardError("subset enumeration guard exceeded: C(" + std::to_string(n) +
                                    "," + std::to_string(k) + ") > " + std::to_string(guard));
}

int induced_edge_count(const Graph& g, const std::vector<int>& subset) {
    int count = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (g.has_edge(subset[i], subset[j])) ++count;
    return count;
}

bool has_k_clique_bruteforce(const CliqueInstance& inst, std::uint64_t guard) {
    const int n = inst.graph.vertex_count();
    const int k = inst.k;
    check_enumeration_guard(n, k, guard);
    const int want = k * (k - 1) / 2;
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<int>& subset) {
        if (induced_edge_count(inst.graph, subset) == want) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

DensestSubgraph densest_k_subgraph_bruteforce(const Graph& g, int k, std::uint64_t guard) {
    const int n = g.vertex_count();
    if (k < 1 || k > n)
        throw std::invalid_argument("densest_k_subgraph_bruteforce: require 1 <= K <= n");
    check_enumeration_guard(n, k, guard);
    int best = -1;
    std::vector<int> argmax;
    for_each_subset(n, k, [&](const std::vector<int>& subset) {
        const int e = induced_edge_count(g, subset);
        if (e > best) {  // first maximizer in lexicographic order wins
            best = e;
            argmax = subset;
        }
        return false;
    });
    return {best, Support(std::move(argmax))};
}

bool verify_subset_density(const Graph& g, int l, double delta, std::uint64_t guard) {
    const int n = g.vertex_count();
    if (l > n) throw std::invalid_argument("verify_subset_density: require l <= n");
    if (l < 2) return true;
    check_enumeration_guard(n, l, guard);
    const double budget = delta * l * (l - 1) / 2.0;
    bool ok = true;
    for_each_subset(n, l, [&](const std::vector<int>& subset) {
        if (static_cast<double>(induced_edge_count(g, subset)) > budget) {
            ok = false;
            return true;
        }
        return false;
    });
    return ok;
}

}  // namespace spcalab
