#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gsw/graded.hpp"

using namespace gsw;

namespace {
GradedMap<Zq> identity_map(const ZqRing* R, int r, int n) {
    std::vector<Mat<Zq>> A(r, Mat<Zq>::identity(R, n));
    return GradedMap<Zq>(std::move(A));
}

Mat<Zq> swap_p(const ZqRing* R) {
    Mat<Zq> m(R, 2, 2);
    m.at(0, 1) = R->one();
    m.at(1, 0) = R->one().mul_pk(1);
    return m;
}

GradedMap<Zq> rotate(const GradedMap<Zq>& phi, int s0) {
    std::vector<Mat<Zq>> A;
    for (int s = 0; s < phi.r(); ++s) A.push_back(phi.at(s0 + s));
    return GradedMap<Zq>(std::move(A));
}

std::vector<Frac> sorted(std::vector<Frac> v) {
    std::sort(v.begin(), v.end());
    return v;
}
}  // namespace

TEST_CASE("compose_cycle hand examples") {
    ZqRing R(3, 2, 6);
    // r=2, rank 1: A_0 = (p), A_1 = (1) -> (p)
    Mat<Zq> A0(&R, 1, 1), A1(&R, 1, 1);
    A0.at(0, 0) = R.from_int(3);
    A1.at(0, 0) = R.one();
    GradedMap<Zq> phi({A0, A1});
    Mat<Zq> C = compose_cycle(phi);
    CHECK(C.at(0, 0) == R.from_int(3));

    // identity everywhere -> identity
    GradedMap<Zq> id = identity_map(&R, 2, 3);
    CHECK(mat_is_zero(compose_cycle(id) - Mat<Zq>::identity(&R, 3)));
}

TEST_CASE("compose_cycle r=3 swap example") {
    ZqRing R(3, 3, 6);
    GradedMap<Zq> phi({swap_p(&R), Mat<Zq>::identity(&R, 2), Mat<Zq>::identity(&R, 2)});
    Mat<Zq> C = compose_cycle(phi);
    CHECK(mat_is_zero(C - swap_p(&R)));
    // slopes {1/2, 1/2}: char poly X^2 - p
    auto s = graded_slopes(C, 5);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Frac(1, 2));
    CHECK(s[1] == Frac(1, 2));
}

TEST_CASE("slopes of two-swap r=2 instance and identity") {
    ZqRing R(3, 2, 6);
    GradedMap<Zq> phi({swap_p(&R), swap_p(&R)});
    Mat<Zq> C = compose_cycle(phi);
    auto s = graded_slopes(C, 5);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Frac(1, 1));
    CHECK(s[1] == Frac(1, 1));
    auto s0 = graded_slopes(compose_cycle(identity_map(&R, 2, 2)), 5);
    CHECK(s0 == std::vector<Frac>{Frac(0, 1), Frac(0, 1)});
}

TEST_CASE("slope sum equals valuation of det of the cycle") {
    ZqRing R(3, 3, 9);
    Rng rng(23);
    for (int it = 0; it < 20; ++it) {
        std::vector<Mat<Zq>> A;
        for (int s = 0; s < 3; ++s) A.push_back(random_matrix(&R, 2, 2, rng));
        GradedMap<Zq> phi(std::move(A));
        Mat<Zq> C = compose_cycle(phi);
        Zq det = mat_det(C);
        if (det.is_zero() || det.val() > 4) continue;
        auto s = graded_slopes(C, 7);
        Frac sum(0, 1);
        for (auto& x : s) sum = sum + x;
        CHECK(sum == Frac(det.val(), 1));
    }
}

TEST_CASE("slopes stable under graded change of basis") {
    ZqRing R(3, 3, 9);
    Rng rng(31);
    GradedMap<Zq> phi({swap_p(&R), Mat<Zq>::identity(&R, 2), swap_p(&R)});
    auto base = sorted(graded_slopes(compose_cycle(phi), 7));
    for (int it = 0; it < 50; ++it) {
        std::vector<Mat<Zq>> G, Gi;
        for (int s = 0; s < 3; ++s) {
            Mat<Zq> g = random_invertible(&R, 2, rng);
            G.push_back(g);
            Gi.push_back(mat_inverse_unit(g));
        }
        std::vector<Mat<Zq>> A;
        for (int s = 0; s < 3; ++s) {
            // A'_s = G_{s+1} A_s tau(G_s^{-1})
            A.push_back(G[(s + 1) % 3] * phi.A[s] * mat_frob(Gi[s]));
        }
        GradedMap<Zq> conj(std::move(A));
        CHECK(sorted(graded_slopes_map(conj, 7)) == base);
    }
}

TEST_CASE("slopes agree from every starting degree (ungraded multiplicity r)") {
    ZqRing R(3, 4, 9);
    Rng rng(41);
    std::vector<Mat<Zq>> A;
    for (int s = 0; s < 4; ++s) A.push_back(s % 2 ? Mat<Zq>::identity(&R, 2) : swap_p(&R));
    GradedMap<Zq> phi(std::move(A));
    auto base = sorted(graded_slopes_map(phi, 7));
    for (int s0 = 1; s0 < 4; ++s0)
        CHECK(sorted(graded_slopes_map(rotate(phi, s0), 7)) == base);
}

TEST_CASE("skeleton of p-isoclinal instances") {
    ZqRing R(3, 1, 8);
    // phi^r = p I, z = 1: full standard basis solves the system
    Mat<Zq> C(&R, 2, 2);
    C.at(0, 0) = C.at(1, 1) = R.from_int(3);
    auto res = skeleton(C, 1, 6);
    CHECK(res.full);
    CHECK(res.basis.cols == 2);

    // non-semisimple [[p,1],[0,p]]: rank-1 skeleton, flagged partial
    Mat<Zq> J(&R, 2, 2);
    J.at(0, 0) = J.at(1, 1) = R.from_int(3);
    J.at(0, 1) = R.one();
    auto res2 = skeleton(J, 1, 6);
    CHECK(!res2.full);
    CHECK(res2.basis.cols == 1);

    // z mismatching the slope -> contract error
    CHECK_THROWS_AS(skeleton(C, 2, 6), ring_error);
}

TEST_CASE("tensor slopes are pairwise sums, wedge slopes are subset sums") {
    ZqRing R(3, 2, 12);
    Rng rng(53);
    for (int it = 0; it < 10; ++it) {
        std::vector<Mat<Zq>> A1, A2;
        for (int s = 0; s < 2; ++s) {
            A1.push_back(random_matrix(&R, 2, 2, rng));
            A2.push_back(random_matrix(&R, 2, 2, rng));
        }
        GradedMap<Zq> f(std::move(A1)), g(std::move(A2));
        std::vector<Frac> sf, sg;
        try {
            sf = graded_slopes_map(f, 9);
            sg = graded_slopes_map(g, 9);
        } catch (const precision_error&) {
            continue;
        }
        // tensor: all pairwise sums
        std::vector<Frac> want;
        for (auto& a : sf)
            for (auto& b : sg) want.push_back(a + b);
        try {
            CHECK(sorted(graded_slopes_map(tensor(f, g), 9)) == sorted(want));
        } catch (const precision_error&) {
        }
        // wedge^2 of f: 2-subset sums
        std::vector<Frac> wexp;
        for (size_t i = 0; i < sf.size(); ++i)
            for (size_t j = i + 1; j < sf.size(); ++j) wexp.push_back(sf[i] + sf[j]);
        try {
            CHECK(sorted(graded_slopes_map(wedge_power(f, 2), 9)) == sorted(wexp));
        } catch (const precision_error&) {
        }
    }
    // wedge_power(phi, 1) == phi
    GradedMap<Zq> phi({swap_p(&R), Mat<Zq>::identity(&R, 2)});
    auto w1 = wedge_power(phi, 1);
    for (int s = 0; s < 2; ++s) CHECK(mat_is_zero(w1.A[s] - phi.A[s]));
}

TEST_CASE("dual negates slopes via tracked denominators") {
    ZqRing R(3, 2, 10);
    GradedMap<Zq> phi({swap_p(&R), swap_p(&R)});  // slopes {1,1}
    GradedMap<Zq> dv = dual(phi);
    CHECK(dv.quasi());
    auto s = graded_slopes_map(dv, 7);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Frac(-1, 1));
    CHECK(s[1] == Frac(-1, 1));
}

TEST_CASE("precision guard rejects uncertifiable polygons") {
    ZqRing R(3, 1, 6);
    Mat<Zq> C(&R, 1, 1);
    C.at(0, 0) = R.from_int(81);  // valuation 4 > N-2 for N=5
    CHECK_THROWS_AS(graded_slopes(C, 5), precision_error);
}
