#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsw/window.hpp"

using namespace gsw;

namespace {
Mat<Zq> swap_p(const ZqRing* R) {
    Mat<Zq> m(R, 2, 2);
    m.at(0, 1) = R->one();
    m.at(1, 0) = R->one().mul_pk(1);
    return m;
}

// random graded phi with pM in phiM in M (Smith exponents in {0,1})
GradedMap<Zq> random_dieudonne(const ZqRing* R, int r, int n, Rng& rng) {
    std::vector<Mat<Zq>> A;
    for (int s = 0; s < r; ++s) {
        Mat<Zq> D(R, n, n);
        for (int i = 0; i < n; ++i) D.at(i, i) = R->one().mul_pk(rng.next(2) ? 1 : 0);
        A.push_back(random_invertible(R, n, rng) * D * random_invertible(R, n, rng));
    }
    return GradedMap<Zq>(std::move(A));
}

bool mats_equal(const Mat<Zq>& x, const Mat<Zq>& y) { return mat_is_zero(x - y); }

// psi involves one division by p, so it is determined mod p^{Nw-1}
bool mats_congruent(const Mat<Zq>& x, const Mat<Zq>& y, int e) {
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!x.a[i].congruent(y.a[i], e)) return false;
    return true;
}
}  // namespace

TEST_CASE("M_1 for scalar phi") {
    ZqRing R(3, 2, 6);
    // phi = p * tau: M_1 = M
    GradedMap<Zq> mult({scalar_mul(R.from_int(3), Mat<Zq>::identity(&R, 2)),
                        scalar_mul(R.from_int(3), Mat<Zq>::identity(&R, 2))});
    Window<Zq> wm = window_from_graded(mult);
    CHECK(wm.l[0] == 2);
    CHECK(wm.l[1] == 2);
    // phi = tau: M_1 = pM
    GradedMap<Zq> et({Mat<Zq>::identity(&R, 2), Mat<Zq>::identity(&R, 2)});
    Window<Zq> we = window_from_graded(et);
    CHECK(we.l[0] == 0);
}

TEST_CASE("M_1 of the rank-2 swap matrix is span(e1, p e2)") {
    ZqRing R(3, 2, 6);
    GradedMap<Zq> phi({swap_p(&R), Mat<Zq>::identity(&R, 2)});
    Window<Zq> w = window_from_graded(phi);
    CHECK(w.l[0] == 1);
    // L spanned by a vector with unit first coordinate, zero second mod p
    CHECK(w.B[0].at(0, 0).val() == 0);
    CHECK(w.B[0].at(1, 0).divisible_pk(1));
    // the degree with identity phi has L = 0
    CHECK(w.l[1] == 0);
}

TEST_CASE("psi satisfies psi*phi = phi*psi = p at every degree") {
    ZqRing R(3, 3, 8);
    Rng rng(77);
    for (int it = 0; it < 10; ++it) {
        GradedMap<Zq> phi = random_dieudonne(&R, 3, 2, rng);
        Window<Zq> w = window_from_graded(phi);
        if (!verify_window(w, 6).axioms[2].pass) continue;
        for (int s = 0; s < 3; ++s) {
            Mat<Zq> P = w.psi(s);
            Mat<Zq> pI1 = scalar_mul(R.from_int(3), Mat<Zq>::identity(&R, 2));
            CHECK(mats_congruent(P * phi.A[s], pI1, R.Nw - 1));
            CHECK(mats_congruent(phi.A[s] * P, pI1, R.Nw - 1));
        }
    }
}

TEST_CASE("psi independent of the normal decomposition") {
    ZqRing R(3, 2, 8);
    Rng rng(79);
    GradedMap<Zq> phi({swap_p(&R), swap_p(&R)});
    Window<Zq> w = window_from_graded(phi);
    for (int trial = 0; trial < 20; ++trial) {
        Window<Zq> w2 = w;
        for (int s = 0; s < 2; ++s) {
            int l = w.l[s], n = w.B[s].cols, t = n - l;
            // valid change of decomposition: block matrix [[U,V],[pW,X]]
            Mat<Zq> G(&R, n, n);
            do {
                for (int i = 0; i < l; ++i)
                    for (int j = 0; j < l; ++j)
                        G.at(i, j) = (i == j) ? random_unit(&R, rng) : random_zq(&R, rng);
                for (int i = 0; i < l; ++i)
                    for (int j = 0; j < t; ++j) G.at(i, l + j) = random_zq(&R, rng);
                for (int i = 0; i < t; ++i)
                    for (int j = 0; j < l; ++j) G.at(l + i, j) = random_zq(&R, rng).mul_pk(1);
                for (int i = 0; i < t; ++i)
                    for (int j = 0; j < t; ++j)
                        G.at(l + i, l + j) = (i == j) ? random_unit(&R, rng) : random_zq(&R, rng);
            } while (mat_det(G).val() != 0);
            w2.B[s] = w.B[s] * G;
        }
        for (int s = 0; s < 2; ++s) CHECK(mats_congruent(w.psi(s), w2.psi(s), R.Nw - 1));
    }
}

TEST_CASE("W.4 separates etale from multiplicative rank-1 modules") {
    ZqRing R(3, 2, 6);
    // phi = tau (etale): psi = p * unit, nilpotent mod p -> passes
    Mat<Zq> one(&R, 1, 1), pm(&R, 1, 1);
    one.at(0, 0) = R.one();
    pm.at(0, 0) = R.from_int(3);
    Window<Zq> etale = window_from_graded(GradedMap<Zq>({one, one}));
    WindowReport re = verify_window(etale, 5);
    CHECK(re.all_pass);
    // phi = p * tau (multiplicative): psi is a mod-p unit -> W.4 fails
    Window<Zq> mult = window_from_graded(GradedMap<Zq>({pm, pm}));
    WindowReport rm = verify_window(mult, 5);
    CHECK(rm.axioms[0].pass);
    CHECK(rm.axioms[1].pass);
    CHECK(rm.axioms[2].pass);
    CHECK(!rm.axioms[3].pass);
}

TEST_CASE("W.2 fault injection pinpoints the offending degree") {
    ZqRing R(3, 2, 6);
    Mat<Zq> one(&R, 1, 1);
    one.at(0, 0) = R.one();
    Window<Zq> w = window_from_graded(GradedMap<Zq>({one, one}));
    w.l[1] = 1;  // claim L = M at degree 1: phi(L) = M is not in pM
    WindowReport rep = verify_window(w, 5);
    CHECK(!rep.axioms[1].pass);
    CHECK(rep.axioms[1].witness.find("degree 1") != std::string::npos);
}

TEST_CASE("dieudonne <-> window round trip") {
    ZqRing R(3, 2, 8);
    Rng rng(83);
    for (int it = 0; it < 20; ++it) {
        GradedMap<Zq> phi = random_dieudonne(&R, 2, 2, rng);
        Window<Zq> w = window_from_dieudonne(phi);
        GradedMap<Zq> back = dieudonne_from_window(w);
        for (int s = 0; s < 2; ++s) CHECK(mats_equal(back.A[s], phi.A[s]));
    }
    // pM not inside phiM rejected
    Mat<Zq> bad(&R, 1, 1);
    bad.at(0, 0) = R.from_int(9);
    CHECK_THROWS_AS(window_from_dieudonne(GradedMap<Zq>({bad, bad})), ring_error);
}

TEST_CASE("series base change verifies and specializes back at t=0") {
    ZqRing R(3, 2, 7);
    SeriesRing S(&R, 6);
    GradedMap<Zq> phi({swap_p(&R), swap_p(&R)});
    Window<Zq> w = window_from_graded(phi);
    Window<TSeries> ws = window_to_series(w, &S);
    WindowReport rep = verify_window(ws, 5);
    CHECK(rep.all_pass);
    Window<Zq> back = window_at_t0(ws);
    for (int s = 0; s < 2; ++s) {
        CHECK(mats_equal(back.phi.A[s], phi.A[s]));
        CHECK(mats_equal(back.B[s], w.B[s]));
    }
}
