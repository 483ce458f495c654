#pragma once

// Linear algebra over the truncated Witt coefficients: Smith-style reduction
// with p-power diagonal, matrix inverses with tracked p-denominators, and
// mod-p kernel decompositions used for normal decompositions.

#include <random>

#include "gsw/matrix.hpp"

namespace gsw {

// L * A * R = diag(p^{d_i}); L, R invertible at working precision.
// d has length min(rows, cols); an entry equal to Nw means zero at precision.
struct Smith {
    Mat<Zq> L, R;
    std::vector<int> d;
};

Smith smith_decompose(const Mat<Zq>& A);

// matrix with a global p-denominator: value = p^{-denom} * num
struct QMat {
    Mat<Zq> num;
    int denom = 0;

    QMat() = default;
    explicit QMat(Mat<Zq> m, int d = 0) : num(std::move(m)), denom(d) {}
    QMat normalized() const;
};

QMat qmat_mul(const QMat& x, const QMat& y);
QMat qmat_inverse(const Mat<Zq>& A);  // throws ring_error when singular at precision
// inverse of a matrix with unit determinant (no denominator)
Mat<Zq> mat_inverse_unit(const Mat<Zq>& A);

// unimodular solutions of A x == 0 mod p^k: columns that extend to a basis.
// Returns them as columns of a matrix (possibly 0 columns).
Mat<Zq> kernel_free(const Mat<Zq>& A, int k);

// decomposition adapted to ker(A mod p): returns (B, l) with B invertible and
// the first l columns of B spanning the mod-p kernel (lowest-index pivots).
std::pair<Mat<Zq>, int> modp_kernel_decomposition(const Mat<Zq>& A);

// inverse over the series frame; entries may carry p-denominators.
// Requires det = p^v * (unit-constant series).
Mat<TSeries> mat_inverse_series(const Mat<TSeries>& A);

// deterministic randomness for property sweeps
struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::uint64_t next(std::uint64_t bound) { return g() % bound; }
};

Zq random_zq(const ZqRing* R, Rng& rng);
Zq random_unit(const ZqRing* R, Rng& rng);
Mat<Zq> random_matrix(const ZqRing* R, int m, int n, Rng& rng);
Mat<Zq> random_invertible(const ZqRing* R, int n, Rng& rng);

}  // namespace gsw
