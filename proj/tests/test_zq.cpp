#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsw/linalg.hpp"
#include "gsw/zq.hpp"

using namespace gsw;

TEST_CASE("prime field: r=1 gives Z/p^N and identity Frobenius") {
    ZqRing R(3, 1, 5);
    CHECK(R.pNw == 243u);
    Zq a = R.from_int(17);
    CHECK(a.frob() == a);
    CHECK((a * a.inv()) == R.one());
}

TEST_CASE("r=2: tau(x) == x^p mod p and m(tau(x)) == 0 at full precision") {
    ZqRing R(3, 2, 4);
    Zq x = R.gen();
    Zq tx = x.frob();
    // tau(x) = x^3 mod 3
    Zq x3 = x * x * x;
    CHECK(tx.congruent(x3, 1));
    // m(tau(x)) = 0 mod 3^4: evaluate monic modulus at tau(x)
    Zq acc = R.zero();
    Zq pw = R.one();
    for (int i = 0; i < R.r; ++i) {
        acc += pw * R.from_int((std::int64_t)R.modulus[i]);
        pw *= tx;
    }
    acc += pw;  // leading coefficient 1
    CHECK(acc.is_zero());
}

TEST_CASE("r=3, p=5: tau has order dividing 3 on random elements") {
    ZqRing R(5, 3, 3);
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        Zq a = random_zq(&R, rng);
        CHECK(a.frob_pow(3) == a);
    }
}

TEST_CASE("tau is a ring automorphism on random pairs") {
    ZqRing R(3, 4, 6);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Zq a = random_zq(&R, rng), b = random_zq(&R, rng);
        CHECK((a + b).frob() == a.frob() + b.frob());
        CHECK((a * b).frob() == a.frob() * b.frob());
    }
    CHECK(R.one().frob() == R.one());
}

TEST_CASE("valuation, exact division, congruence") {
    ZqRing R(3, 2, 6);
    Zq a = R.from_int(9);
    CHECK(a.val() == 2);
    CHECK(a.div_exact_p(2) == R.one());
    CHECK(R.zero().val() == R.Nw);
    Zq b = R.from_int(5);
    CHECK(b.val() == 0);
    CHECK(a.congruent(R.zero(), 2));
    CHECK(!a.congruent(R.zero(), 3));
    CHECK_THROWS_AS(b.div_exact_p(1), precision_error);
}

TEST_CASE("div_int is exact inverse of integer multiplication for units") {
    ZqRing R(3, 2, 5);
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        Zq a = random_zq(&R, rng);
        CHECK((a * R.from_int(7)).div_int(7) == a);
    }
}

TEST_CASE("lex-least irreducible modulus is deterministic") {
    auto m1 = ZqRing::lex_least_irreducible(3, 2);
    auto m2 = ZqRing::lex_least_irreducible(3, 2);
    CHECK(m1 == m2);
    // x^2 + 1 is the lex-least irreducible over F_3
    CHECK(m1 == std::vector<u64>{1, 0});
}

TEST_CASE("non-prime p rejected") {
    CHECK_THROWS_AS(ZqRing(9, 1, 3), ring_error);
    CHECK_THROWS_AS(ZqRing(2, 1, 3), ring_error);
}

TEST_CASE("fractions order and add exactly") {
    Frac a(1, 2), b(1, 3);
    CHECK(b < a);
    CHECK((a + b) == Frac(5, 6));
    CHECK(Frac(2, 4) == Frac(1, 2));
    CHECK(Frac(1, 2).str() == "1/2");
    CHECK(Frac(3, 1).str() == "3");
}
