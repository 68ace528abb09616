#ifndef SPCALAB_SPECTRAL_HPP
#define SPCALAB_SPECTRAL_HPP

#include <vector>

#include "spcalab/graph.hpp"

namespace spcalab {

inline constexpr double kDefaultEigTolerance = 1e-10;
inline constexpr int kDefaultEigIterationBudget = 100'000;

// Dense real symmetric matrix. Symmetry is enforced by construction: set()
// writes both mirror entries and from_rows() rejects asymmetric input.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int n);

    static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int size() const { return n_; }

    double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * n_ + j];
    }

    void set(int i, int j, double value);

    // y = S x
    std::vector<double> multiply(const std::vector<double>& x) const;

    std::vector<std::vector<double>> rows() const;

    bool operator==(const SymmetricMatrix& other) const {
        return n_ == other.n_ && data_ == other.data_;
    }

private:
    int n_ = 0;
    std::vector<double> data_;
};

struct Eigenpair {
    double lambda = 0.0;
    std::vector<double> vector;  // unit norm; first significant coordinate >= 0
};

// Top eigenpair of the adjacency matrix of a complete graph minus one edge,
// in closed form. lambda is the positive root of
//   lambda^2 - (l-3) lambda - 2(l-2) = 0,
// and the eigenvector takes the value x on the two non-adjacent vertices and
// y on the remaining l-2, with 2x^2 + (l-2)y^2 = 1 and x, y >= 0.
struct CliqueMinusEdgeSpectrum {
    int l = 2;
    double lambda = 0.0;
    double x = 0.0;
    double y = 0.0;
};

// Inapproximability gap parameters: eps_star is the relative deficit of the
// clique-minus-one-edge spectral radius below r-1, and threshold is
// (r-1)(1-eps_star), which equals that spectral radius exactly.
struct GapParams {
    int r = 2;
    double eps_star = 0.0;
    double threshold = 0.0;
};

struct HongBound {
    double value = 0.0;
    bool applicable = true;  // false when 2e - n + 1 < 0 (value reported as 0)
};

SymmetricMatrix adjacency_matrix(const Graph& g);

// Dominant eigenpair via power iteration on the Gershgorin-shifted matrix.
// The shift makes the matrix positive semidefinite, which removes the
// +/-lambda ambiguity of bipartite adjacency spectra. The start vector is the
// normalized all-ones vector; on stall the iteration restarts from standard
// basis vectors in index order. Throws NonConvergenceError if every start is
// exhausted.
Eigenpair top_eigenpair(const SymmetricMatrix& s, double tol = kDefaultEigTolerance,
                        int iteration_budget = kDefaultEigIterationBudget);

CliqueMinusEdgeSpectrum clique_minus_edge_spectrum(int l);

// eps_star(r) = (r+1)/(2(r-1)) * (1 - sqrt(1 - 8/(r+1)^2)), requires r >= 2.
GapParams eps_star(int r);

// sqrt(2e - n + 1); valid for graphs without isolated vertices.
HongBound hong_bound(const Graph& g);

SymmetricMatrix principal_submatrix(const SymmetricMatrix& s, const Support& q);

}  // namespace spcalab

#endif  // SPCALAB_SPECTRAL_HPP
