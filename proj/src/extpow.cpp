#include "gsw/extpow.hpp"

#include "gsw/linalg.hpp"

namespace gsw {

Window<Zq> with_decomposition(const Window<Zq>& w, const std::vector<Mat<Zq>>& B2) {
    int r = w.r();
    if ((int)B2.size() != r) throw ring_error("with_decomposition: wrong number of degrees");
    for (int s = 0; s < r; ++s) {
        if (!FrameOps<Zq>::unit_det(B2[s]))
            throw ring_error("with_decomposition: candidate basis not invertible at degree " +
                             std::to_string(s));
        // the first l columns must lift the kernel of phi mod p
        for (int j = 0; j < w.l_at(s); ++j) {
            Mat<Zq> col(B2[s].ring(), B2[s].rows, 1);
            for (int i = 0; i < B2[s].rows; ++i) col.at(i, 0) = B2[s].at(i, j);
            if (!mat_divisible_p(w.phi.at(s) * mat_frob(col)))
                throw ring_error("with_decomposition: column " + std::to_string(j) +
                                 " does not lift M_1 at degree " + std::to_string(s));
        }
    }
    Window<Zq> out = w;
    out.B = B2;
    return out;
}

std::vector<Mat<Zq>> random_decomposition(const Window<Zq>& w, Rng& rng) {
    const ZqRing* R = w.phi.A[0].ring();
    int r = w.r();
    std::vector<Mat<Zq>> B2;
    for (int s = 0; s < r; ++s) {
        int n = w.phi.rank(s), l = w.l_at(s);
        Mat<Zq> C(R, n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Zq v = random_zq(R, rng);
                    // keep the span of the first l columns fixed mod p
                    if (i >= l && j < l) v = v.mul_pk(1);
                    C.at(i, j) = v;
                }
        } while (!FrameOps<Zq>::unit_det(C));
        B2.push_back(w.b_at(s) * C);
    }
    return B2;
}

IndepReport independence_check(const Window<Zq>& w, int k, const MultiplicativeTwist<Zq>& tw,
                               int trials, unsigned seed) {
    IndepReport rep;
    Window<Zq> e1 = exterior_power(w, k, tw);
    Rng rng(seed);
    bool ops = true, m1 = true;
    for (int t = 0; t < trials; ++t) {
        Window<Zq> w2 = with_decomposition(w, random_decomposition(w, rng));
        Window<Zq> e2 = exterior_power(w2, k, tw);
        for (int s = 0; s < w.r(); ++s) {
            ops = ops && mat_is_zero(e1.phi.at(s) - e2.phi.at(s)) && e1.l_at(s) == e2.l_at(s);
            // same M_1: the change of basis between the m1 bases is unimodular
            QMat X = qmat_mul(qmat_inverse(e1.m1_basis(s)), QMat(e2.m1_basis(s))).normalized();
            m1 = m1 && X.denom == 0 && FrameOps<Zq>::unit_det(X.num);
        }
    }
    rep.checks.push_back({"operator-equal", ops, ops ? "" : "wedge operators differ"});
    rep.checks.push_back({"m1-equal", m1, m1 ? "" : "M_1 submodules differ"});
    rep.all_pass = ops && m1;
    return rep;
}

bool is_window_morphism(const Window<Zq>& w1, const Window<Zq>& w2,
                        const std::vector<Mat<Zq>>& G) {
    int r = w1.r();
    if ((int)G.size() != r || w2.r() != r) return false;
    for (int s = 0; s < r; ++s) {
        Mat<Zq> d = G[(s + 1) % r] * w1.phi.at(s) - w2.phi.at(s) * mat_frob(G[s]);
        if (!mat_is_zero(d)) return false;
        QMat X = qmat_mul(qmat_inverse(w2.m1_basis(s)), QMat(G[s] * w1.m1_basis(s))).normalized();
        if (X.denom != 0) return false;
    }
    return true;
}

std::vector<Mat<Zq>> functorial_power(const std::vector<Mat<Zq>>& G, int k,
                                      const std::vector<Zq>& tmap) {
    std::vector<Mat<Zq>> out;
    for (size_t s = 0; s < G.size(); ++s)
        out.push_back(scalar_mul(twist_power(tmap[s], k), wedge_matrix(G[s], k)));
    return out;
}

Mat<Zq> cycle_at(const GradedMap<Zq>& phi, int s) {
    int r = phi.r();
    std::vector<Mat<Zq>> rot;
    for (int i = 0; i < r; ++i) rot.push_back(phi.at(s + i));
    return compose_cycle(GradedMap<Zq>(std::move(rot)));
}

}  // namespace gsw
