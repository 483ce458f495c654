#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsw/json_io.hpp"
#include "gsw/linalg.hpp"
#include "gsw/sym.hpp"

using namespace gsw;

TEST_CASE("element and series round-trip") {
    ZqRing R(3, 5, 8);
    SeriesRing Sr(&R, 6);
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        Zq x = random_zq(&R, rng);
        CHECK(zq_from_json(&R, zq_to_json(x)) == x);
    }
    std::vector<Zq> a;
    for (int i = 0; i < 6; ++i) a.push_back(random_zq(&R, rng));
    TSeries f(&Sr, a, 2);
    TSeries g = series_from_json(&Sr, series_to_json(f));
    CHECK((f - g).is_zero());
    CHECK(series_to_json(f).at("denom_exp") == 2);
    // out-of-range residue rejected
    json bad = json::array();
    for (int i = 0; i < 5; ++i) bad.push_back(R.pNw);
    CHECK_THROWS_AS(zq_from_json(&R, bad), ring_error);
}

TEST_CASE("matrix, graded map, and window round-trip") {
    ZqRing R(3, 4, 8);
    Rng rng(11);
    Mat<Zq> m = random_matrix(&R, 3, 2, rng);
    Mat<Zq> m2 = zq_mat_from_json(&R, mat_to_json(m));
    CHECK(mat_is_zero(m - m2));

    SymSpec s;
    s.c = 1;
    s.b = {1};
    s.z = 2;
    s.a2 = 4;
    s.r = 5;
    ZqRing R5(3, 5, 9);
    SymStructure S = build_sym(&R5, s);
    json jw = window_to_json(S.N);
    Window<Zq> w2 = zq_window_from_json(&R5, jw);
    CHECK(w2.l == S.N.l);
    for (int sg = 0; sg < 5; ++sg) {
        CHECK(mat_is_zero(w2.phi.at(sg) - S.N.phi.at(sg)));
        CHECK(mat_is_zero(w2.b_at(sg) - S.N.b_at(sg)));
    }
    CHECK(jw.at("phi").at("quasi") == false);
    CHECK(jw.at("phi").at("ranks") == json::array({2, 2, 2, 2, 2}));
}

TEST_CASE("deterministic dumps and provenance fields") {
    ZqRing R(3, 2, 6);
    Rng r1(7), r2(7);
    Mat<Zq> a = random_matrix(&R, 2, 2, r1), b = random_matrix(&R, 2, 2, r2);
    CHECK(mat_to_json(a).dump() == mat_to_json(b).dump());
    RingParams rp;
    json p = provenance(rp, 42);
    for (const char* k : {"p", "r", "N", "T", "D", "seed", "git-describe"}) CHECK(p.contains(k));
}
