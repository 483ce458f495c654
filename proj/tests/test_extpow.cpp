#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gsw/deform.hpp"
#include "gsw/extpow.hpp"

using namespace gsw;

namespace {
SymSpec running() {
    SymSpec s;
    s.c = 1;
    s.b = {1};
    s.z = 2;
    s.a2 = 4;
    s.r = 5;
    return s;
}

bool windows_equal(const Window<Zq>& a, const Window<Zq>& b) {
    if (a.r() != b.r() || a.l != b.l) return false;
    for (int s = 0; s < a.r(); ++s)
        if (!mat_is_zero(a.phi.at(s) - b.phi.at(s)) || !mat_is_zero(a.b_at(s) - b.b_at(s)))
            return false;
    return true;
}

// random rank-n graded window over r degrees with at most one positive
// elementary divisor per degree (so the kernel part has rank <= 1)
Window<Zq> random_window(const ZqRing* R, int n, int r, Rng& rng, const std::vector<int>& drop) {
    std::vector<Mat<Zq>> A;
    for (int s = 0; s < r; ++s) {
        Mat<Zq> D = Mat<Zq>::identity(R, n);
        if (drop[s]) D.at(0, 0) = R->one().mul_pk(1);
        A.push_back(random_invertible(R, n, rng) * D * random_invertible(R, n, rng));
    }
    return window_from_graded(GradedMap<Zq>(std::move(A)));
}
}  // namespace

TEST_CASE("k = 1 with trivial twist is the identity operation") {
    ZqRing R(3, 5, 9);
    SymStructure S = build_sym(&R, running());
    auto tw = trivial_twist<Zq>(&R, 5);
    CHECK(windows_equal(exterior_power(S.N, 1, tw), S.N));
    CHECK(windows_equal(exterior_power(S.M, 1, tw), S.M));
}

TEST_CASE("k = 0 returns the twist itself") {
    ZqRing R(3, 5, 9);
    SymStructure S = build_sym(&R, running());
    Rng rng(5);
    MultiplicativeTwist<Zq> tw;
    for (int s = 0; s < 5; ++s) tw.f.push_back(random_unit(&R, rng));
    Window<Zq> e = exterior_power(S.N, 0, tw);
    for (int s = 0; s < 5; ++s) {
        CHECK(e.phi.rank(s) == 1);
        CHECK(e.l_at(s) == 0);
        CHECK((e.phi.at(s).at(0, 0) - tw.f[s]).is_zero());
        CHECK((e.b_at(s).at(0, 0) - R.one()).is_zero());
    }
}

TEST_CASE("determinant case k = rank: rank one with the slope sum") {
    ZqRing R(3, 5, 9);
    SymStructure S = build_sym(&R, running());
    auto tw = trivial_twist<Zq>(&R, 5);
    Window<Zq> eN = exterior_power(S.N, 2, tw);
    Window<Zq> eM = exterior_power(S.M, 2, tw);
    CHECK(eN.phi.rank(0) == 1);
    CHECK(graded_slopes_map(eN.phi, 7) == std::vector<Frac>{Frac(2, 1)});
    CHECK(graded_slopes_map(eM.phi, 7) == std::vector<Frac>{Frac(4, 1)});
    // unit twists leave valuations alone; the operators still change
    Rng rng(3);
    MultiplicativeTwist<Zq> tu;
    for (int s = 0; s < 5; ++s) tu.f.push_back(random_unit(&R, rng));
    Window<Zq> eNt = exterior_power(S.N, 2, tu);
    CHECK(graded_slopes_map(eNt.phi, 7) == std::vector<Frac>{Frac(2, 1)});
    CHECK(!mat_is_zero(eNt.phi.at(0) - eN.phi.at(0)));
}

TEST_CASE("display condition: a degree with trivial kernel part gives W.1-W.4") {
    ZqRing R(3, 5, 9);
    SymStructure S = build_sym(&R, running());
    CHECK(S.N.l_at(4) == 0);  // off Omega
    Window<Zq> e = exterior_power(S.N, 2, trivial_twist<Zq>(&R, 5));
    CHECK(e.l_at(4) == 0);
    WindowReport rep = verify_window(e, 6);
    for (auto& a : rep.axioms) INFO(a.axiom, ": ", a.witness);
    CHECK(rep.all_pass);
}

TEST_CASE("precondition: kernel part of rank 2 rejected, k out of range") {
    ZqRing R(3, 2, 6);
    GradedMap<Zq> g({scalar_mul(R.from_int(3), Mat<Zq>::identity(&R, 3)),
                     Mat<Zq>::identity(&R, 3)});
    Window<Zq> w = window_from_graded(g);
    CHECK(w.l_at(0) == 3);
    auto tw = trivial_twist<Zq>(&R, 2);
    CHECK_THROWS_AS(exterior_power(w, 2, tw), ring_error);
    ZqRing R5(3, 5, 9);
    SymStructure S = build_sym(&R5, running());
    CHECK_THROWS_AS(exterior_power(S.N, 3, trivial_twist<Zq>(&R5, 5)), ring_error);
    CHECK_THROWS_AS(exterior_power(S.N, -1, trivial_twist<Zq>(&R5, 5)), ring_error);
}

TEST_CASE("slope oracle: wedge slopes are the k-subset sums, ranks 2 to 4") {
    ZqRing R(3, 3, 12);
    Rng rng(17);
    for (int n = 2; n <= 4; ++n) {
        Window<Zq> w = random_window(&R, n, 3, rng, {1, 0, 1});
        auto base = graded_slopes_map(w.phi, 10);
        for (int k = 1; k <= n; ++k) {
            Window<Zq> e = exterior_power(w, k, trivial_twist<Zq>(&R, 3));
            auto got = graded_slopes_map(e.phi, 10);
            std::vector<Frac> want;
            for (auto& sub : k_subsets(n, k)) {
                Frac sum(0, 1);
                for (int i : sub) sum = sum + base[i];
                want.push_back(sum);
            }
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
}

TEST_CASE("independence of the normal decomposition, 20 random changes") {
    ZqRing R(3, 5, 9);
    SymStructure S = build_sym(&R, running());
    auto tw = trivial_twist<Zq>(&R, 5);
    IndepReport rep = independence_check(S.N, 2, tw, 20, 42);
    for (auto& c : rep.checks) INFO(c.axiom, ": ", c.witness);
    CHECK(rep.all_pass);
    CHECK(independence_check(S.N, 1, tw, 5, 43).all_pass);
    // a candidate basis not lifting M_1 is rejected by validation
    std::vector<Mat<Zq>> bad = S.N.B;
    // e_1 is not in the kernel of phi mod p at degree 0
    bad[0] = Mat<Zq>(&R, 2, 2);
    bad[0].at(0, 1) = R.one();
    bad[0].at(1, 0) = R.one();
    CHECK_THROWS_AS(with_decomposition(S.N, bad), ring_error);
}

TEST_CASE("functorial powers: identity, scalar multilinearity, composition") {
    ZqRing R(3, 3, 12);
    Rng rng(23);
    Window<Zq> w = random_window(&R, 3, 3, rng, {1, 0, 0});
    std::vector<Zq> tmap(3, R.one());

    std::vector<Mat<Zq>> id3(3, Mat<Zq>::identity(&R, 3));
    CHECK(is_window_morphism(w, w, id3));
    for (auto& m : functorial_power(id3, 2, tmap))
        CHECK(mat_is_zero(m - Mat<Zq>::identity(&R, 3)));

    std::vector<Mat<Zq>> pid(3, scalar_mul(R.from_int(3), Mat<Zq>::identity(&R, 3)));
    CHECK(is_window_morphism(w, w, pid));
    for (auto& m : functorial_power(pid, 2, tmap))
        CHECK(mat_is_zero(m - scalar_mul(R.from_int(9), Mat<Zq>::identity(&R, 3))));

    // morphisms c + d phi^r commute with phi and preserve M_1
    auto poly_morphism = [&](long long c, long long d) {
        std::vector<Mat<Zq>> G;
        for (int s = 0; s < 3; ++s)
            G.push_back(scalar_mul(R.from_int(c), Mat<Zq>::identity(&R, 3)) +
                        scalar_mul(R.from_int(d), cycle_at(w.phi, s)));
        return G;
    };
    auto a = poly_morphism(2, 1), b = poly_morphism(1, 4);
    CHECK(is_window_morphism(w, w, a));
    CHECK(is_window_morphism(w, w, b));
    std::vector<Mat<Zq>> ab;
    for (int s = 0; s < 3; ++s) ab.push_back(a[s] * b[s]);
    auto lhs = functorial_power(ab, 2, tmap);
    auto ak = functorial_power(a, 2, tmap), bk = functorial_power(b, 2, tmap);
    for (int s = 0; s < 3; ++s) CHECK(mat_is_zero(lhs[s] - ak[s] * bk[s]));
    CHECK(is_window_morphism(exterior_power(w, 2, trivial_twist<Zq>(&R, 3)),
                             exterior_power(w, 2, trivial_twist<Zq>(&R, 3)), ak));
}

TEST_CASE("compatibility with deformation: wedge then specialize = specialize then wedge") {
    ZqRing R(3, 5, 9);
    SeriesRing Sr(&R, 9);
    SymStructure S = build_sym(&R, running());
    DeformationSequence seq = find_deformation_sequence(S.N, 6);
    DeformedWindow dn = deform_N(S.N, seq, &Sr);
    Window<TSeries> e = exterior_power(dn.w, 2, trivial_twist<TSeries>(&Sr, 5));
    Window<Zq> e0 = exterior_power(S.N, 2, trivial_twist<Zq>(&R, 5));
    for (int s = 0; s < 5; ++s)
        for (size_t k = 0; k < e.phi.A[s].a.size(); ++k)
            CHECK((e.phi.A[s].a[k].at_t0() - e0.phi.A[s].a[k]).is_zero());
}
