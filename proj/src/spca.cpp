#include "spcalab/spca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace spcalab {

SpcaInstance::SpcaInstance(SymmetricMatrix s_, int r_, std::optional<double> m_)
    : s(std::move(s_)), r(r_), m(m_) {
    if (r < 0 || r > s.size())
        throw std::invalid_argument("SpcaInstance: require 0 <= r <= n");
}

std::vector<double> embed_subvector(const std::vector<double>& z, const Support& q, int n) {
    if (static_cast<int>(z.size()) != q.size())
        throw std::invalid_argument("embed_subvector: |z| must equal |Q|");
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        const int idx = q.indices[i];
        if (idx >= n) throw std::invalid_argument("embed_subvector: support index out of range");
        v[static_cast<std::size_t>(idx)] = z[i];
    }
    return v;
}

namespace {

double quadratic_form(const SymmetricMatrix& s, const std::vector<double>& v) {
    const std::vector<double> sv = s.multiply(v);
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * sv[i];
    return acc;
}

SpcaSolution solution_from_support(const SymmetricMatrix& s, std::vector<int> support,
                                   Eigenpair pair) {
    SpcaSolution sol;
    sol.support = Support(std::move(support));
    sol.values = std::move(pair.vector);
    const std::vector<double> v = embed_subvector(sol.values, sol.support, s.size());
    sol.value = quadratic_form(s, v);
    return sol;
}

}  // namespace

SpcaSolution opt_exact(const SymmetricMatrix& s, int r, std::uint64_t guard, double eig_tol) {
    const int n = s.size();
    if (r < 1 || r > n) throw std::invalid_argument("opt_exact: require 1 <= r <= n");
    check_enumeration_guard(n, r, guard);

    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_support;
    Eigenpair best_pair;
    for_each_subset(n, r, [&](const std::vector<int>& subset) {
        const SymmetricMatrix sub = principal_submatrix(s, Support(subset));
        Eigenpair pair = top_eigenpair(sub, eig_tol);
        if (pair.lambda > best) {
            best = pair.lambda;
            best_support = subset;
            best_pair = std::move(pair);
        }
        return false;
    });
    return solution_from_support(s, std::move(best_support), std::move(best_pair));
}

bool spca_decide(const SpcaInstance& inst, double decision_tol, std::uint64_t guard,
                 double eig_tol) {
    if (!inst.m) throw std::invalid_argument("spca_decide: instance has no threshold M");
    if (inst.r == 0) return false;
    const SpcaSolution sol = opt_exact(inst.s, inst.r, guard, eig_tol);
    return sol.value >= *inst.m - decision_tol;
}

bool verify_certificate(const SpcaInstance& inst, const std::vector<double>& v,
                        double decision_tol) {
    if (static_cast<int>(v.size()) != inst.s.size())
        throw std::invalid_argument("verify_certificate: dimension mismatch");
    if (!inst.m) throw std::invalid_argument("verify_certificate: instance has no threshold M");

    double norm_sq = 0.0;
    int nonzeros = 0;
    for (double x : v) {
        norm_sq += x * x;
        if (x != 0.0) ++nonzeros;
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kCertificateNormTolerance) return false;
    if (nonzeros > inst.r) return false;
    return quadratic_form(inst.s, v) >= *inst.m - decision_tol;
}

namespace {

int greedy_seed_index(const SymmetricMatrix& s) {
    const int n = s.size();
    int best = 0;
    bool all_equal = true;
    for (int i = 1; i < n; ++i) {
        if (s(i, i) != s(0, 0)) all_equal = false;
        if (s(i, i) > s(best, best)) best = i;
    }
    if (!all_equal || n == 1) return best;
    // Uniform diagonal: seed from the endpoint of the largest |S[i][j]|.
    int seed = 0;
    double top = -1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(s(i, j)) > top) {
                top = std::abs(s(i, j));
                seed = i;
            }
    return seed;
}

}  // namespace

SpcaSolution greedy_solver(const SymmetricMatrix& s, int r, double eig_tol) {
    const int n = s.size();
    if (r < 1 || r > n) throw std::invalid_argument("greedy_solver: require 1 <= r <= n");

    std::vector<int> selected{greedy_seed_index(s)};
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    in_set[static_cast<std::size_t>(selected[0])] = 1;

    while (static_cast<int>(selected.size()) < r) {
        int best_j = -1;
        double best_val = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (in_set[static_cast<std::size_t>(j)]) continue;
            std::vector<int> grown = selected;
            grown.push_back(j);
            std::sort(grown.begin(), grown.end());
            const double val =
                top_eigenpair(principal_submatrix(s, Support(grown)), eig_tol).lambda;
            if (val > best_val) {
                best_val = val;
                best_j = j;
            }
        }
        selected.push_back(best_j);
        in_set[static_cast<std::size_t>(best_j)] = 1;
    }

    std::sort(selected.begin(), selected.end());
    Eigenpair pair = top_eigenpair(principal_submatrix(s, Support(selected)), eig_tol);
    return solution_from_support(s, std::move(selected), std::move(pair));
}

SpcaSolution threshold_solver(const SymmetricMatrix& s, int r, double eig_tol) {
    const int n = s.size();
    if (r < 1 || r > n) throw std::invalid_argument("threshold_solver: require 1 <= r <= n");

    const Eigenpair full = top_eigenpair(s, eig_tol);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::abs(full.vector[static_cast<std::size_t>(a)]) >
               std::abs(full.vector[static_cast<std::size_t>(b)]);
    });
    order.resize(static_cast<std::size_t>(r));
    std::sort(order.begin(), order.end());

    Eigenpair pair = top_eigenpair(principal_submatrix(s, Support(order)), eig_tol);
    return solution_from_support(s, std::move(order), std::move(pair));
}

SolverKind solver_kind_from_name(std::string_view name) {
    if (name == "exact") return SolverKind::exact;
    if (name == "greedy") return SolverKind::greedy;
    if (name == "threshold") return SolverKind::threshold;
    throw std::invalid_argument("unknown solver: " + std::string(name));
}

std::string solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::exact: return "exact";
        case SolverKind::greedy: return "greedy";
        case SolverKind::threshold: return "threshold";
    }
    throw std::logic_error("solver_name: unreachable");
}

SpcaSolver make_solver(SolverKind kind, std::uint64_t guard, double eig_tol) {
    switch (kind) {
        case SolverKind::exact:
            return [guard, eig_tol](const SymmetricMatrix& s, int r) {
                return opt_exact(s, r, guard, eig_tol);
            };
        case SolverKind::greedy:
            return [eig_tol](const SymmetricMatrix& s, int r) {
                return greedy_solver(s, r, eig_tol);
            };
        case SolverKind::threshold:
            return [eig_tol](const SymmetricMatrix& s, int r) {
                return threshold_solver(s, r, eig_tol);
            };
    }
    throw std::logic_error("make_solver: unreachable");
}

double measured_ratio(const SpcaSolver& solver, const SymmetricMatrix& s, int r,
                      std::uint64_t guard, double eig_tol) {
    const double opt = opt_exact(s, r, guard, eig_tol).value;
    if (opt <= 0.0)
        throw std::domain_error("measured_ratio: exact optimum must be positive");
    return solver(s, r).value / opt;
}

}  // namespace spcalab
