#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsw/linalg.hpp"

using namespace gsw;

namespace {
bool mat_congruent(const Mat<Zq>& x, const Mat<Zq>& y, int e) {
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!x.a[i].congruent(y.a[i], e)) return false;
    return true;
}
}  // namespace

TEST_CASE("smith decomposition reconstructs p-power diagonal") {
    ZqRing R(3, 2, 8);
    Rng rng(101);
    for (int it = 0; it < 30; ++it) {
        Mat<Zq> A = random_matrix(&R, 3, 3, rng);
        Smith s = smith_decompose(A);
        Mat<Zq> lhs = s.L * A * s.R;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) {
                    Zq want = s.d[i] >= R.Nw ? R.zero() : R.one().mul_pk(s.d[i]);
                    CHECK(lhs.at(i, j) == want);
                } else {
                    CHECK(lhs.at(i, j).is_zero());
                }
            }
        CHECK(mat_det(s.L).val() == 0);
        CHECK(mat_det(s.R).val() == 0);
    }
}

TEST_CASE("qmat inverse with tracked denominator") {
    ZqRing R(3, 1, 8);
    Mat<Zq> A(&R, 2, 2);
    A.at(0, 0) = R.from_int(3);
    A.at(0, 1) = R.from_int(1);
    A.at(1, 0) = R.from_int(0);
    A.at(1, 1) = R.from_int(9);
    QMat inv = qmat_inverse(A);
    QMat prod = qmat_mul(QMat(A), inv);
    CHECK(prod.denom == 0);
    CHECK(mat_congruent(prod.num, Mat<Zq>::identity(&R, 2), R.Nw - 3));
    // unit-determinant matrices invert without denominator
    Rng rng(3);
    Mat<Zq> U = random_invertible(&R, 3, rng);
    Mat<Zq> Ui = mat_inverse_unit(U);
    CHECK(mat_congruent(U * Ui, Mat<Zq>::identity(&R, 3), R.Nw));
}

TEST_CASE("singular matrix rejected at working precision") {
    ZqRing R(3, 1, 4);
    Mat<Zq> A(&R, 2, 2);  // second row zero
    A.at(0, 0) = R.one();
    CHECK_THROWS_AS(qmat_inverse(A), ring_error);
}

TEST_CASE("mod-p kernel decomposition spans the kernel with invertible frame") {
    ZqRing R(3, 1, 6);
    Mat<Zq> A(&R, 2, 2);
    A.at(0, 0) = R.from_int(3);
    A.at(0, 1) = R.from_int(1);
    A.at(1, 0) = R.from_int(6);
    A.at(1, 1) = R.from_int(2);
    auto [B, l] = modp_kernel_decomposition(A);
    CHECK(l == 1);
    CHECK(mat_det(B).val() == 0);
    // first l columns killed by A mod p
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < 2; ++i) {
            Zq s = R.zero();
            for (int k = 0; k < 2; ++k) s += A.at(i, k) * B.at(k, j);
            CHECK(s.divisible_pk(1));
        }
}

TEST_CASE("kernel_free counts unimodular solutions") {
    ZqRing R(3, 1, 6);
    // A = diag(1, p, p^3): solutions of Ax == 0 mod p^2 that extend to a basis
    Mat<Zq> A(&R, 3, 3);
    A.at(0, 0) = R.one();
    A.at(1, 1) = R.from_int(3);
    A.at(2, 2) = R.from_int(27);
    Mat<Zq> K = kernel_free(A, 2);
    CHECK(K.cols == 1);  // only the p^3 direction
    Mat<Zq> K1 = kernel_free(A, 1);
    CHECK(K1.cols == 2);
    for (int j = 0; j < K.cols; ++j)
        for (int i = 0; i < 3; ++i) {
            Zq s = R.zero();
            for (int k = 0; k < 3; ++k) s += A.at(i, k) * K.at(k, j);
            CHECK(s.divisible_pk(2));
        }
}

TEST_CASE("series matrix inverse via adjugate") {
    ZqRing R(3, 1, 8);
    SeriesRing S(&R, 6);
    Mat<TSeries> A(&S, 2, 2);
    A.at(0, 0) = series_one(&S) + series_t(&S);
    A.at(0, 1) = series_t(&S, 2);
    A.at(1, 0) = series_from_zq(&S, R.from_int(3));
    A.at(1, 1) = series_from_zq(&S, R.from_int(2));
    Mat<TSeries> Ai = mat_inverse_series(A);
    Mat<TSeries> prod = A * Ai;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            TSeries want = (i == j) ? series_one(&S) : series_zero(&S);
            CHECK(prod.at(i, j).congruent(want, R.Nw - 2));
        }
}

TEST_CASE("wedge and sym matrices are functorial on products") {
    ZqRing R(3, 1, 6);
    Rng rng(17);
    Mat<Zq> A = random_matrix(&R, 3, 3, rng);
    Mat<Zq> B = random_matrix(&R, 3, 3, rng);
    CHECK(mat_congruent(wedge_matrix(A * B, 2), wedge_matrix(A, 2) * wedge_matrix(B, 2), R.Nw));
    CHECK(mat_congruent(sym_matrix(A * B, 2), sym_matrix(A, 2) * sym_matrix(B, 2), R.Nw));
    // top wedge is the determinant
    Mat<Zq> W = wedge_matrix(A, 3);
    CHECK(W.rows == 1);
    CHECK(W.at(0, 0) == mat_det(A));
}

TEST_CASE("char poly matches hand 2x2 and det/trace identities") {
    ZqRing R(3, 1, 8);
    Mat<Zq> A(&R, 2, 2);
    A.at(0, 0) = R.from_int(2);
    A.at(0, 1) = R.from_int(5);
    A.at(1, 0) = R.from_int(7);
    A.at(1, 1) = R.from_int(1);
    auto c = char_poly(A);
    REQUIRE(c.size() == 3);
    CHECK(c[2] == R.one());
    CHECK(c[1] == -(mat_trace(A)));
    CHECK(c[0] == mat_det(A));
}
