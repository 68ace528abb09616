#include "spcalab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spcalab {

SymmetricMatrix::SymmetricMatrix(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("SymmetricMatrix: dimension must be non-negative");
    data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymmetricMatrix s(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("SymmetricMatrix: rows must form a square matrix");
        for (int j = 0; j < n; ++j)
            s.data_[static_cast<std::size_t>(i) * n + j] =
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s(i, j) != s(j, i))
                throw std::invalid_argument("SymmetricMatrix: input is not symmetric");
    return s;
}

void SymmetricMatrix::set(int i, int j, double value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("SymmetricMatrix::set: index out of range");
    data_[static_cast<std::size_t>(i) * n_ + j] = value;
    data_[static_cast<std::size_t>(j) * n_ + i] = value;
}

std::vector<double> SymmetricMatrix::multiply(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("SymmetricMatrix::multiply: dimension mismatch");
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double acc = 0.0;
        const double* row = data_.data() + static_cast<std::size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

std::vector<std::vector<double>> SymmetricMatrix::rows() const {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        out[static_cast<std::size_t>(i)].assign(
            data_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
            data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
    return out;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix s(g.vertex_count());
    for (const auto& [u, v] : g.edges()) s.set(u, v, 1.0);
    return s;
}

// --- power iteration -----------------------------------------------------------

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// First significant coordinate made non-negative.
void canonicalize_sign(std::vector<double>& v) {
    double maxabs = 0.0;
    for (double x : v) maxabs = std::max(maxabs, std::abs(x));
    if (maxabs == 0.0) return;
    for (double x : v) {
        if (std::abs(x) > 1e-12 * maxabs) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

enum class StartOutcome { accepted, stalled };

struct Candidate {
    double lambda = 0.0;
    std::vector<double> vector;
};

// Runs the shifted iteration from one start vector. Acceptance requires both
// a small residual and a Rayleigh quotient at least the shifted diagonal
// maximum, which every dominant eigenvalue satisfies; a converged-but-smaller
// quotient means the start was (numerically) orthogonal to the dominant
// eigenvector, so the caller restarts.
StartOutcome run_start(const SymmetricMatrix& s, double shift, double shifted_diag_max,
                       std::vector<double> v, double tol, int iteration_budget,
                       Candidate& out) {
    const double nv = norm2(v);
    if (nv == 0.0) return StartOutcome::stalled;
    for (double& x : v) x /= nv;

    for (int iter = 0; iter < iteration_budget; ++iter) {
        std::vector<double> w = s.multiply(v);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += shift * v[i];
        const double nu = dot(v, w);
        const double lambda = nu - shift;

        double residual_sq = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double d = w[i] - nu * v[i];
            residual_sq += d * d;
        }
        if (std::sqrt(residual_sq) <= tol * std::max(1.0, std::abs(lambda))) {
            if (nu >= shifted_diag_max - 1e-8 * std::max(1.0, std::abs(nu))) {
                out.lambda = lambda;
                out.vector = std::move(v);
                return StartOutcome::accepted;
            }
            return StartOutcome::stalled;
        }

        const double nw = norm2(w);
        if (nw == 0.0) return StartOutcome::stalled;  // landed in the kernel of the shifted matrix
        for (std::size_t i = 0; i < w.size(); ++i) w[i] /= nw;
        v = std::move(w);
    }
    return StartOutcome::stalled;
}

}  // namespace

Eigenpair top_eigenpair(const SymmetricMatrix& s, double tol, int iteration_budget) {
    const int n = s.size();
    if (n < 1) throw std::invalid_argument("top_eigenpair: matrix must be non-empty");
    if (!(tol > 0.0)) throw std::invalid_argument("top_eigenpair: tolerance must be positive");
    if (iteration_budget < 1)
        throw std::invalid_argument("top_eigenpair: iteration budget must be positive");

    double shift = 0.0;
    double diag_min = std::numeric_limits<double>::infinity();
    double diag_max = -std::numeric_limits<double>::infinity();
    double offdiag_max = 0.0;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::abs(s(i, j));
        shift = std::max(shift, radius - s(i, i));
        diag_min = std::min(diag_min, s(i, i));
        diag_max = std::max(diag_max, s(i, i));
        offdiag_max = std::max(offdiag_max, radius);
    }

    // A uniform diagonal with no off-diagonal mass makes every unit vector an
    // eigenvector; return the canonical one directly.
    if (offdiag_max == 0.0 && diag_min == diag_max) {
        std::vector<double> v(static_cast<std::size_t>(n),
                              1.0 / std::sqrt(static_cast<double>(n)));
        return {s(0, 0), std::move(v)};
    }

    const double shifted_diag_max = diag_max + shift;

    Candidate candidate;
    for (int start = -1; start < n; ++start) {
        std::vector<double> v(static_cast<std::size_t>(n), 0.0);
        if (start < 0)
            v.assign(static_cast<std::size_t>(n), 1.0);
        else
            v[static_cast<std::size_t>(start)] = 1.0;
        if (run_start(s, shift, shifted_diag_max, std::move(v), tol, iteration_budget,
                      candidate) == StartOutcome::accepted) {
            canonicalize_sign(candidate.vector);
            return {candidate.lambda, std::move(candidate.vector)};
        }
    }
    throw NonConvergenceError("top_eigenpair: no start vector converged within " +
                              std::to_string(iteration_budget) + " iterations at tol " +
                              std::to_string(tol));
}

CliqueMinusEdgeSpectrum clique_minus_edge_spectrum(int l) {
    if (l < 2) throw std::invalid_argument("clique_minus_edge_spectrum: require l >= 2");
    const double lp1 = static_cast<double>(l) + 1.0;
    const double lambda = (l - 3.0) / 2.0 + std::sqrt(lp1 * lp1 - 8.0) / 2.0;
    // (l-2) y = lambda x and 2x + (l-3) y = lambda y; the second pins
    // y = 2x / (lambda - l + 3), whose denominator is positive for all l >= 2.
    const double x0 = 1.0;
    const double y0 = 2.0 / (lambda - (l - 3.0));
    const double scale = std::sqrt(2.0 * x0 * x0 + (l - 2.0) * y0 * y0);
    return {l, lambda, x0 / scale, y0 / scale};
}

GapParams eps_star(int r) {
    if (r < 2) throw std::invalid_argument("eps_star: require r >= 2");
    const double rp1 = static_cast<double>(r) + 1.0;
    const double u = 8.0 / (rp1 * rp1);
    const double root = std::sqrt(1.0 - u);
    // 1 - sqrt(1-u) written as u/(1+sqrt(1-u)) to avoid cancellation at large r
    const double eps = rp1 / (2.0 * (r - 1.0)) * (u / (1.0 + root));
    return {r, eps, (r - 1.0) * (1.0 - eps)};
}

HongBound hong_bound(const Graph& g) {
    const double arg = 2.0 * g.edge_count() - g.vertex_count() + 1.0;
    if (arg < 0.0) return {0.0, false};
    return {std::sqrt(arg), true};
}

SymmetricMatrix principal_submatrix(const SymmetricMatrix& s, const Support& q) {
    const int m = q.size();
    SymmetricMatrix sub(m);
    for (int i = 0; i < m; ++i) {
        const int qi = q.indices[static_cast<std::size_t>(i)];
        if (qi >= s.size())
            throw std::out_of_range("principal_submatrix: support index out of range");
        for (int j = i; j < m; ++j)
            sub.set(i, j, s(qi, q.indices[static_cast<std::size_t>(j)]));
    }
    return sub;
}

}  // namespace spcalab
