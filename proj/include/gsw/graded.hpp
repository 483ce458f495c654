#pragma once

// Z/rZ-graded free modules with a degree-(+1) tau-semilinear operator phi,
// given by one matrix per degree: x in M_sigma maps to A_sigma * tau(x) in
// M_{sigma+1}. Slopes are read off the Newton polygon of the linearization
// phi^r on the degree-0 piece.

#include "gsw/linalg.hpp"

namespace gsw {

// A[s] has shape n_{s+1} x n_s (indices mod r). denom[s] is a global
// p-denominator on A[s] (0 for integral maps; set by dual/quasi-isogenies).
template <class S>
struct GradedMap {
    std::vector<Mat<S>> A;
    std::vector<int> denom;

    GradedMap() = default;
    explicit GradedMap(std::vector<Mat<S>> mats)
        : A(std::move(mats)), denom(A.size(), 0) {}

    int r() const { return (int)A.size(); }
    int rank(int s) const { return A[(s % r() + r()) % r()].cols; }
    const Mat<S>& at(int s) const { return A[(s % r() + r()) % r()]; }
    Mat<S>& at(int s) { return A[(s % r() + r()) % r()]; }
    bool quasi() const {
        for (int d : denom)
            if (d != 0) return true;
        return false;
    }
};

// phi^r on M_0 as a genuinely linear matrix:
// A_{r-1} * tau(A_{r-2}) * ... * tau^{r-1}(A_0). Throws if not square.
template <class S>
Mat<S> compose_cycle(const GradedMap<S>& phi) {
    int r = phi.r();
    if (phi.A[0].cols != phi.A[r - 1].rows) throw ring_error("compose_cycle: not square");
    Mat<S> C = phi.A[r - 1];
    for (int k = 1; k < r; ++k) {
        Mat<S> Ak = phi.A[r - 1 - k];
        for (int t = 0; t < k; ++t) Ak = mat_frob(Ak);
        C = C * Ak;
    }
    return C;
}

// lower convex hull of (i, v(c_i)); valuations >= vinf mean zero coefficient
struct NewtonPolygon {
    std::vector<std::pair<long long, long long>> vertices;  // (index, valuation)
};

NewtonPolygon newton_polygon(const std::vector<long long>& vals, long long vinf);

// Slope multiset (eigenvalue valuations with multiplicity) from a polygon.
std::vector<Frac> polygon_slopes(const NewtonPolygon& np, int degree);

// Graded slopes of phi from the char poly of phi^r on M_0, certified at the
// reported precision N: every polygon vertex valuation must be <= N - 2,
// else precision_error. `denom_total` shifts valuations for quasi-isogenies.
std::vector<Frac> graded_slopes(const Mat<Zq>& cycle, int N, int denom_total = 0);

// Generic-fibre graded slopes over the series frame (Gauss valuations).
std::vector<Frac> graded_slopes_series(const Mat<TSeries>& cycle, int N, int denom_total = 0);

inline std::vector<Frac> graded_slopes_map(const GradedMap<Zq>& phi, int N) {
    int d = 0;
    for (int x : phi.denom) d += x;
    return graded_slopes(compose_cycle(phi), N, d);
}

inline std::vector<Frac> graded_slopes_map(const GradedMap<TSeries>& phi, int N) {
    int d = 0;
    for (int x : phi.denom) d += x;
    return graded_slopes_series(compose_cycle(phi), N, d);
}

struct SkeletonResult {
    Mat<Zq> basis;  // columns: unimodular solutions of (phi^r - p^z) x == 0
    bool full;      // rank equals n_0
};

// Solutions of phi^r x = p^z x at precision N - z. Requires the instance to
// be isoclinal of slope z (checked via graded_slopes); the base field
// F_{p^r} may be too small to split the system, in which case full = false.
SkeletonResult skeleton(const Mat<Zq>& cycle, int z, int N);

// Degreewise multilinear functors (the graded pieces of the derived module
// are (M (x) M')_sigma = M_sigma (x) M'_sigma etc., so slopes add).
template <class S>
GradedMap<S> tensor(const GradedMap<S>& x, const GradedMap<S>& y) {
    std::vector<Mat<S>> A;
    for (int s = 0; s < x.r(); ++s) A.push_back(kron(x.A[s], y.A[s]));
    GradedMap<S> res(std::move(A));
    for (int s = 0; s < x.r(); ++s) res.denom[s] = x.denom[s] + y.denom[s];
    return res;
}

template <class S>
GradedMap<S> wedge_power(const GradedMap<S>& x, int k) {
    std::vector<Mat<S>> A;
    for (auto& m : x.A) A.push_back(wedge_matrix(m, k));
    GradedMap<S> res(std::move(A));
    for (int s = 0; s < x.r(); ++s) res.denom[s] = k * x.denom[s];
    return res;
}

template <class S>
GradedMap<S> sym_power(const GradedMap<S>& x, int k) {
    std::vector<Mat<S>> A;
    for (auto& m : x.A) A.push_back(sym_matrix(m, k));
    GradedMap<S> res(std::move(A));
    for (int s = 0; s < x.r(); ++s) res.denom[s] = k * x.denom[s];
    return res;
}

// dual: matrices inverse-transposed; entries pick up p-denominators tracked
// in `denom` (quasi-isogeny). Point frame only.
GradedMap<Zq> dual(const GradedMap<Zq>& x);

}  // namespace gsw
