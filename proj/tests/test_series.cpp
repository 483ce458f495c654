#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsw/linalg.hpp"
#include "gsw/series.hpp"

using namespace gsw;

TEST_CASE("frobenius lift sends t to t^p") {
    ZqRing R(3, 2, 6);
    SeriesRing S(&R, 8);
    TSeries t = series_t(&S);
    TSeries tp = t.frob();
    CHECK(tp.congruent(series_t(&S, 3), R.Nw));
    // alpha t^2 -> tau(alpha) t^6
    Zq alpha = R.gen() + R.from_int(2);
    TSeries f = series_from_zq(&S, alpha) * series_t(&S, 2);
    TSeries g = series_from_zq(&S, alpha.frob()) * series_t(&S, 6);
    CHECK(f.frob().congruent(g, R.Nw));
    CHECK(series_one(&S).frob().congruent(series_one(&S), R.Nw));
}

TEST_CASE("lift composed r times sends t to t^{p^r} (truncated)") {
    ZqRing R(3, 2, 5);
    SeriesRing S(&R, 12);
    TSeries f = series_t(&S);
    for (int i = 0; i < R.r; ++i) f = f.frob();
    CHECK(f.congruent(series_t(&S, 9), R.Nw));
}

TEST_CASE("gauss valuation examples") {
    ZqRing R(3, 1, 5);
    SeriesRing S(&R, 8);
    // p^2 t + t^3 -> 0
    TSeries f = series_from_zq(&S, R.from_int(9)) * series_t(&S) + series_t(&S, 3);
    CHECK(f.gauss_val() == 0);
    // p(1 + t) -> 1
    TSeries g = series_from_zq(&S, R.from_int(3)) * (series_one(&S) + series_t(&S));
    CHECK(g.gauss_val() == 1);
    CHECK(series_zero(&S).is_zero());
}

TEST_CASE("gauss valuation is additive when stable under doubled truncation") {
    ZqRing R(3, 1, 8);
    SeriesRing S(&R, 6), S2(&R, 12);
    Rng rng(5);
    for (int it = 0; it < 40; ++it) {
        TSeries f = series_zero(&S), g = series_zero(&S);
        for (int i = 0; i < S.T; ++i) {
            f.a[i] = random_zq(&R, rng);
            g.a[i] = random_zq(&R, rng);
        }
        if (f.is_zero() || g.is_zero()) continue;
        TSeries f2 = f.truncate(12, &S2), g2 = g.truncate(12, &S2);
        TSeries prod = f * g, prod2 = f2 * g2;
        if (prod.gauss_val() != prod2.gauss_val()) continue;  // min-val term truncated away
        CHECK(prod.gauss_val() == f.gauss_val() + g.gauss_val());
    }
}

TEST_CASE("series inverse handles p-power scaling") {
    ZqRing R(3, 1, 7);
    SeriesRing S(&R, 6);
    TSeries f = series_from_zq(&S, R.from_int(2)) + series_t(&S);
    TSeries one = series_one(&S);
    CHECK((f * f.inv()).congruent(one, R.Nw - 1));
    // p * unit series: inverse carries denominator 1
    TSeries g = f.mul_pk(1);
    TSeries gi = g.inv();
    CHECK(gi.denom >= 1);
    CHECK((g * gi).congruent(one, R.Nw - 2));
    CHECK_THROWS_AS(series_t(&S).inv(), ring_error);
}

TEST_CASE("derivative and division by integers with p-denominators") {
    ZqRing R(3, 1, 6);
    SeriesRing S(&R, 8);
    TSeries f = series_t(&S, 3);
    CHECK(f.derivative().congruent(series_from_zq(&S, R.from_int(3)) * series_t(&S, 2), R.Nw));
    TSeries h = series_one(&S).div_int(3);
    CHECK(h.denom == 1);
    CHECK((h * series_from_zq(&S, R.from_int(3))).congruent(series_one(&S), R.Nw - 1));
}

TEST_CASE("bivariate embeddings multiply and restrict to the diagonal") {
    ZqRing R(3, 1, 5);
    SeriesRing S(&R, 5);
    BiRing B(&R, 5);
    TSeries f = series_one(&S) + series_t(&S);
    TSeries g = series_from_zq(&S, R.from_int(2)) + series_t(&S, 2);
    BiSeries prod = bi_embed(&B, f, 1) * bi_embed(&B, g, 2);
    // diagonal t1 = t2 = t recovers f*g
    CHECK(prod.diagonal(&S).congruent(f * g, R.Nw));
    CHECK(bi_one(&B).congruent(bi_embed(&B, series_one(&S), 1), R.Nw));
}
