#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "spcalab/spca.hpp"

using namespace spcalab;

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kLambdaK4MinusEdge = 2.5615528128088303;

double quad(const SymmetricMatrix& s, const std::vector<double>& v) {
    const std::vector<double> sv = s.multiply(v);
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * sv[i];
    return acc;
}

}  // namespace

TEST_SUITE_BEGIN("spca");

TEST_CASE("embed_subvector") {
    CHECK(embed_subvector({1.0}, Support({2}), 4) == std::vector<double>{0, 0, 1, 0});

    const double h = 1.0 / std::sqrt(2.0);
    const std::vector<double> v = embed_subvector({h, h}, Support({0, 3}), 4);
    CHECK(v == std::vector<double>{h, 0, 0, h});

    CHECK_THROWS_AS(embed_subvector({1.0, 0.0}, Support({0}), 3), std::invalid_argument);
    CHECK_THROWS_AS(embed_subvector({1.0}, Support({5}), 3), std::invalid_argument);
}

TEST_CASE("embedding preserves the quadratic form") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const int n = 5 + static_cast<int>(seed % 3);
        const SymmetricMatrix s = oracle::random_symmetric(n, seed);
        const Support q({0, 2, 4});
        const SymmetricMatrix sub = principal_submatrix(s, q);
        const Eigenpair pair = top_eigenpair(sub);
        const std::vector<double> v = embed_subvector(pair.vector, q, n);
        CHECK(quad(s, v) == doctest::Approx(quad(sub, pair.vector)).epsilon(1e-12));
    }
}

TEST_CASE("opt_exact on closed-form instances") {
    const SymmetricMatrix a3 = adjacency_matrix(gen_complete(3));
    CHECK(opt_exact(a3, 3).value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(opt_exact(a3, 2).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(opt_exact(SymmetricMatrix(4), 2).value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(opt_exact(adjacency_matrix(gen_clique_minus_edge(4)), 4).value ==
          doctest::Approx(kLambdaK4MinusEdge).epsilon(1e-9));
}

TEST_CASE("opt_exact validates input and honors the guard") {
    const SymmetricMatrix s(5);
    CHECK_THROWS_AS(opt_exact(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(opt_exact(s, 6), std::invalid_argument);
    CHECK_THROWS_AS(opt_exact(SymmetricMatrix(30), 15, 1000), EnumerationGuardError);
}

TEST_CASE("opt_exact equals the exhaustive <=r optimum") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 3 + static_cast<int>(seed % 5);
        const int r = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
        const SymmetricMatrix s = oracle::random_symmetric(n, 500 + seed);
        CHECK(opt_exact(s, r).value == doctest::Approx(oracle::opt_up_to_r(s, r)).epsilon(1e-9));
    }
}

TEST_CASE("opt_exact with full support equals the top eigenvalue") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SymmetricMatrix s = oracle::random_symmetric(6, 900 + seed);
        CHECK(opt_exact(s, 6).value == doctest::Approx(top_eigenpair(s).lambda).epsilon(1e-9));
    }
}

TEST_CASE("opt_exact picks the lexicographically smallest maximizer") {
    // two disjoint edges with equal weight: supports {0,1} and {2,3} tie
    SymmetricMatrix s(4);
    s.set(0, 1, 1.0);
    s.set(2, 3, 1.0);
    CHECK(opt_exact(s, 2).support.indices == std::vector<int>{0, 1});
}

TEST_CASE("spca_decide") {
    const SymmetricMatrix a3 = adjacency_matrix(gen_complete(3));
    CHECK(spca_decide(SpcaInstance(a3, 3, 2.0)));
    CHECK_FALSE(spca_decide(SpcaInstance(adjacency_matrix(gen_clique_minus_edge(3)), 3, 2.0)));

    // unconstrained case: M = lambda_1(S)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SymmetricMatrix s = oracle::random_symmetric(5, 700 + seed);
        CHECK(spca_decide(SpcaInstance(s, 5, top_eigenpair(s).lambda)));
    }

    // r = 0 decides false regardless of M
    CHECK_FALSE(spca_decide(SpcaInstance(a3, 0, -10.0)));
    CHECK_FALSE(spca_decide(SpcaInstance(a3, 0, 0.0)));

    CHECK_THROWS_AS(spca_decide(SpcaInstance(a3, 2)), std::invalid_argument);  // no M
}

TEST_CASE("certificate verification") {
    const SymmetricMatrix a3 = adjacency_matrix(gen_complete(3));
    const double t = 1.0 / std::sqrt(3.0);
    CHECK(verify_certificate(SpcaInstance(a3, 3, 2.0), {t, t, t}));
    CHECK_FALSE(verify_certificate(SpcaInstance(a3, 2, 2.0), {t, t, t}));  // sparsity violated
    CHECK_FALSE(verify_certificate(SpcaInstance(a3, 3, 2.0), {1.0, 1.0, 1.0}));  // not unit norm
    CHECK_FALSE(verify_certificate(SpcaInstance(a3, 3, 2.5), {t, t, t}));  // threshold missed
    CHECK_THROWS_AS(verify_certificate(SpcaInstance(a3, 3, 2.0), {t, t}),
                    std::invalid_argument);
}

TEST_CASE("greedy solver") {
    CHECK(greedy_solver(adjacency_matrix(gen_complete(4)), 4).value ==
          doctest::Approx(3.0).epsilon(1e-9));
    CHECK(greedy_solver(adjacency_matrix(gen_complete(3)), 2).value ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(greedy_solver(SymmetricMatrix(3), 2).support.size() == 2);
}

TEST_CASE("threshold solver") {
    CHECK(threshold_solver(adjacency_matrix(gen_complete(4)), 4).value ==
          doctest::Approx(3.0).epsilon(1e-9));

    // the top eigenvector of K4 - e has more mass on the high-degree block
    const SpcaSolution sol = threshold_solver(adjacency_matrix(gen_clique_minus_edge(4)), 2);
    CHECK(sol.support.indices == std::vector<int>{2, 3});
    CHECK(sol.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("heuristics stay feasible and below the optimum") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const int r = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
        const SymmetricMatrix s = oracle::random_symmetric(n, 1300 + seed);
        const double opt = opt_exact(s, r).value;
        for (const SolverKind kind : {SolverKind::greedy, SolverKind::threshold}) {
            const SpcaSolution sol = make_solver(kind)(s, r);
            CHECK(sol.value <= opt + 1e-9);
            CHECK(sol.support.size() <= r);

            double norm_sq = 0.0;
            for (double x : sol.values) norm_sq += x * x;
            CHECK(std::abs(norm_sq - 1.0) <= 1e-10);

            // every solver output certifies its own value
            const std::vector<double> v = embed_subvector(sol.values, sol.support, n);
            CHECK(verify_certificate(SpcaInstance(s, r, sol.value), v));
            CHECK(std::abs(quad(s, v) - sol.value) <= 1e-9);
        }
    }
}

TEST_CASE("measured ratio") {
    const SymmetricMatrix a5 = adjacency_matrix(gen_complete(5));
    CHECK(measured_ratio(make_solver(SolverKind::greedy), a5, 5) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(measured_ratio(make_solver(SolverKind::threshold), a5, 3) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(measured_ratio(make_solver(SolverKind::greedy), SymmetricMatrix(3), 2),
                    std::domain_error);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_erdos_renyi(7, 0.5, 40 + seed);
        if (g.edge_count() == 0) continue;
        const double ratio =
            measured_ratio(make_solver(SolverKind::greedy), adjacency_matrix(g), 3);
        CHECK(ratio >= 0.0);
        CHECK(ratio <= 1.0 + 1e-9);
    }
}

TEST_CASE("clique decision equivalence through opt_exact at small scale") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Graph g = gen_erdos_renyi(8, 0.5, 2000 + seed);
        const SymmetricMatrix a = adjacency_matrix(g);
        for (int k = 2; k <= 4; ++k) {
            const bool clique = has_k_clique_bruteforce(CliqueInstance(g, k));
            CHECK((opt_exact(a, k).value >= k - 1.0 - 1e-9) == clique);
        }
    }
}

TEST_CASE("solver registry") {
    CHECK(solver_kind_from_name("exact") == SolverKind::exact);
    CHECK(solver_kind_from_name("greedy") == SolverKind::greedy);
    CHECK(solver_kind_from_name("threshold") == SolverKind::threshold);
    CHECK_THROWS_AS(solver_kind_from_name("sdp"), std::invalid_argument);
    CHECK(solver_name(SolverKind::exact) == "exact");
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(SpcaInstance(SymmetricMatrix(3), 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SpcaInstance(SymmetricMatrix(3), -1, 1.0), std::invalid_argument);
    CHECK(SpcaInstance(SymmetricMatrix(3), 3).m == std::nullopt);
}

TEST_SUITE_END();
