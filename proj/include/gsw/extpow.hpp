#pragma once

// Exterior powers of graded windows: the k-th compound operator on the lex
// wedge basis, normalized by a rank-one multiplicative twist to the power
// 1 - k. When every degree has at most a one-dimensional kernel part L, the
// lex subsets containing the L index come first, so the L-first basis
// convention is preserved and the result is again a window. Includes the
// decomposition-independence check and functorial powers of morphisms.

#include "gsw/window.hpp"

namespace gsw {

// rank-one graded module with unit semilinear transition maps f[s]:
// degree s -> s + 1
template <class S>
struct MultiplicativeTwist {
    std::vector<S> f;
    int r() const { return (int)f.size(); }
    const S& at(int s) const { return f[(s % r() + r()) % r()]; }
};

template <class S, class Ring>
MultiplicativeTwist<S> trivial_twist(const Ring* R, int r);

template <>
inline MultiplicativeTwist<Zq> trivial_twist(const ZqRing* R, int r) {
    return MultiplicativeTwist<Zq>{std::vector<Zq>((size_t)r, R->one())};
}

template <>
inline MultiplicativeTwist<TSeries> trivial_twist(const SeriesRing* S, int r) {
    return MultiplicativeTwist<TSeries>{std::vector<TSeries>((size_t)r, series_one(S))};
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// f^{1-k} for a unit scalar f
template <class S>
S twist_power(const S& f, int k) {
    if (k == 0) return f;
    S acc = f.inv();
    S out = acc;
    for (int i = 2; i < k; ++i) out = out * acc;
    if (k == 1) out = f * acc;  // identity
    return out;
}

// normalized graded exterior power: operator f^{1-k} wedge^k(A), basis
// wedge^k(B), kernel part = subsets meeting the (at most one) L column.
// Throws on rank(L_s) > 1 or k out of range.
template <class S>
Window<S> exterior_power(const Window<S>& w, int k, const MultiplicativeTwist<S>& tw) {
    int r = w.r();
    for (int d : w.phi.denom)
        if (d != 0) throw ring_error("exterior_power: input operator not integral");
    if (tw.r() != r) throw ring_error("exterior_power: twist period mismatch");
    for (int s = 0; s < r; ++s) {
        if (w.l_at(s) > 1) throw ring_error("exterior_power: kernel part has rank > 1 at degree " +
                                            std::to_string(s));
        if (k < 0 || k > w.phi.rank(s))
            throw ring_error("exterior_power: k = " + std::to_string(k) + " out of range");
        Mat<S> u(w.phi.A[s].ring(), 1, 1);
        u.at(0, 0) = tw.at(s);
        if (!FrameOps<S>::unit_det(u))
            throw ring_error("exterior_power: twist transition not a unit at degree " +
                             std::to_string(s));
    }
    Window<S> out;
    std::vector<Mat<S>> A;
    for (int s = 0; s < r; ++s) {
        S c = twist_power(tw.at(s), k);
        A.push_back(scalar_mul(c, wedge_matrix(w.phi.A[s], k)));
        out.B.push_back(wedge_matrix(w.b_at(s), k));
        out.l.push_back((int)(w.l_at(s) == 1 ? binomial(w.phi.rank(s) - 1, k - 1) : 0));
    }
    out.phi = GradedMap<S>(std::move(A));
    return out;
}

// replace the normal decomposition of a point-frame window, validating that
// the candidate is one: invertible, with the first l columns killed by phi
// mod p. Throws ring_error otherwise.
Window<Zq> with_decomposition(const Window<Zq>& w, const std::vector<Mat<Zq>>& B2);

// random change of normal decomposition: B' = B * C with C invertible and
// C[i][j] divisible by p for i >= l > j
std::vector<Mat<Zq>> random_decomposition(const Window<Zq>& w, Rng& rng);

struct IndepReport {
    bool all_pass = false;
    std::vector<AxiomCheck> checks;
};

// recompute the exterior power under `trials` randomized normal
// decompositions: the operator must be literally equal and the M_1 submodule
// identical (unimodular change of basis between the m1 bases)
IndepReport independence_check(const Window<Zq>& w, int k, const MultiplicativeTwist<Zq>& tw,
                               int trials, unsigned seed);

// graded morphism check: G[s+1] A1[s] = A2[s] tau(G[s]) and G(M_1) in M_1
bool is_window_morphism(const Window<Zq>& w1, const Window<Zq>& w2,
                        const std::vector<Mat<Zq>>& G);

// alpha^(k): wedge of each degree matrix, scaled by the twist-map power
// tmap[s]^{1-k}
std::vector<Mat<Zq>> functorial_power(const std::vector<Mat<Zq>>& G, int k,
                                      const std::vector<Zq>& tmap);

// matrix of phi^r acting Zq-linearly on degree s (tau^r = id on the ring)
Mat<Zq> cycle_at(const GradedMap<Zq>& phi, int s);

}  // namespace gsw
