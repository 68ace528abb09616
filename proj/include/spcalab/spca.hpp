#ifndef SPCALAB_SPCA_HPP
#define SPCALAB_SPCA_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spcalab/spectral.hpp"

namespace spcalab {

// Guard band separating eigensolver noise from genuine decision gaps.
inline constexpr double kDecisionTolerance = 1e-7;

// Unit-norm slack accepted when checking certificates.
inline constexpr double kCertificateNormTolerance = 1e-8;

struct SpcaInstance {
    SymmetricMatrix s;
    int r = 0;
    std::optional<double> m;  // variance threshold; present only for decision problems

    SpcaInstance() = default;
    SpcaInstance(SymmetricMatrix s, int r, std::optional<double> m = std::nullopt);
};

struct SpcaSolution {
    Support support;
    std::vector<double> values;  // coefficients on the support, unit norm
    double value = 0.0;          // achieved v' S v
};

// Places z's entries at q's positions in an n-vector; zeros elsewhere.
std::vector<double> embed_subvector(const std::vector<double>& z, const Support& q, int n);

// Exact sparse-PCA by enumeration of all supports of size exactly r; the
// maximum over supports of size <= r is the same because the top eigenvalue
// of a principal submatrix is monotone non-decreasing under index-set growth
// (Cauchy interlacing). Argmax ties go to the lexicographically smallest
// support.
SpcaSolution opt_exact(const SymmetricMatrix& s, int r,
                       std::uint64_t guard = kDefaultEnumerationGuard,
                       double eig_tol = kDefaultEigTolerance);

// True iff a unit vector with at most r non-zeros reaches the threshold M
// (up to the decision guard band). r = 0 decides false: no 0-sparse unit
// vector exists.
bool spca_decide(const SpcaInstance& inst, double decision_tol = kDecisionTolerance,
                 std::uint64_t guard = kDefaultEnumerationGuard,
                 double eig_tol = kDefaultEigTolerance);

// NP certificate check: unit norm, sparsity, and threshold.
bool verify_certificate(const SpcaInstance& inst, const std::vector<double>& v,
                        double decision_tol = kDecisionTolerance);

// Forward selection heuristic. Feasible output always; no approximation
// guarantee claimed.
SpcaSolution greedy_solver(const SymmetricMatrix& s, int r,
                           double eig_tol = kDefaultEigTolerance);

// Keeps the r largest-magnitude coordinates of the top eigenvector of S and
// re-solves on that support. Magnitude ties go to the smaller index.
SpcaSolution threshold_solver(const SymmetricMatrix& s, int r,
                              double eig_tol = kDefaultEigTolerance);

using SpcaSolver = std::function<SpcaSolution(const SymmetricMatrix&, int)>;

enum class SolverKind { exact, greedy, threshold };

SolverKind solver_kind_from_name(std::string_view name);
std::string solver_name(SolverKind kind);
SpcaSolver make_solver(SolverKind kind, std::uint64_t guard = kDefaultEnumerationGuard,
                       double eig_tol = kDefaultEigTolerance);

// solver value / exact optimum; requires a positive optimum.
double measured_ratio(const SpcaSolver& solver, const SymmetricMatrix& s, int r,
                      std::uint64_t guard = kDefaultEnumerationGuard,
                      double eig_tol = kDefaultEigTolerance);

}  // namespace spcalab

#endif  // SPCALAB_SPCA_HPP
