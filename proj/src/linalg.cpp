#include "gsw/linalg.hpp"

#include <algorithm>

namespace gsw {

Smith smith_decompose(const Mat<Zq>& A) {
    const ZqRing* R = A.ring();
    int m = A.rows, n = A.cols, Nw = R->Nw;
    Mat<Zq> W = A;
    Mat<Zq> L = Mat<Zq>::identity(R, m);
    Mat<Zq> Rt = Mat<Zq>::identity(R, n);
    int steps = std::min(m, n);
    std::vector<int> d(steps, Nw);

    for (int t = 0; t < steps; ++t) {
        // pivot: minimal valuation, lowest (row, col) in row-major order
        int pi = -1, pj = -1, pv = Nw;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                int v = W.at(i, j).val();
                if (v < pv) { pv = v; pi = i; pj = j; }
            }
        if (pi < 0) break;  // remaining block zero at precision
        // swap into place
        if (pi != t) {
            for (int j = 0; j < n; ++j) std::swap(W.at(t, j), W.at(pi, j));
            for (int j = 0; j < m; ++j) std::swap(L.at(t, j), L.at(pi, j));
        }
        if (pj != t) {
            for (int i = 0; i < m; ++i) std::swap(W.at(i, t), W.at(i, pj));
            for (int i = 0; i < n; ++i) std::swap(Rt.at(i, t), Rt.at(i, pj));
        }
        // normalize pivot to exactly p^pv: multiply row by unit inverse
        Zq unit = W.at(t, t).div_exact_p(pv);
        Zq uinv = unit.inv();
        for (int j = 0; j < n; ++j) W.at(t, j) = uinv * W.at(t, j);
        for (int j = 0; j < m; ++j) L.at(t, j) = uinv * L.at(t, j);
        // clear column below and above
        for (int i = 0; i < m; ++i) {
            if (i == t || W.at(i, t).is_zero()) continue;
            Zq f = W.at(i, t).div_exact_p(pv);
            for (int j = 0; j < n; ++j) W.at(i, j) = W.at(i, j) - f * W.at(t, j);
            for (int j = 0; j < m; ++j) L.at(i, j) = L.at(i, j) - f * L.at(t, j);
        }
        // clear row to the right and left
        for (int j = 0; j < n; ++j) {
            if (j == t || W.at(t, j).is_zero()) continue;
            Zq f = W.at(t, j).div_exact_p(pv);
            for (int i = 0; i < m; ++i) W.at(i, j) = W.at(i, j) - W.at(i, t) * f;
            for (int i = 0; i < n; ++i) Rt.at(i, j) = Rt.at(i, j) - Rt.at(i, t) * f;
        }
        d[t] = pv;
    }
    return Smith{std::move(L), std::move(Rt), std::move(d)};
}

QMat QMat::normalized() const {
    QMat r = *this;
    while (r.denom > 0) {
        bool all = true;
        for (auto& v : r.num.a)
            if (!v.divisible_pk(1)) { all = false; break; }
        if (!all) break;
        for (auto& v : r.num.a) v = v.div_exact_p(1);
        r.denom--;
    }
    return r;
}

QMat qmat_mul(const QMat& x, const QMat& y) {
    return QMat(x.num * y.num, x.denom + y.denom).normalized();
}

QMat qmat_inverse(const Mat<Zq>& A) {
    if (A.rows != A.cols) throw ring_error("qmat_inverse: non-square");
    const ZqRing* R = A.ring();
    Smith s = smith_decompose(A);
    int n = A.rows;
    int dmax = 0;
    for (int i = 0; i < n; ++i) {
        if (s.d[i] >= R->Nw) throw ring_error("qmat_inverse: singular at working precision");
        dmax = std::max(dmax, s.d[i]);
    }
    // A^{-1} = R diag(p^{-d}) L = p^{-dmax} * R diag(p^{dmax-d}) L
    Mat<Zq> D(R, n, n);
    for (int i = 0; i < n; ++i) D.at(i, i) = R->one().mul_pk(dmax - s.d[i]);
    return QMat(s.R * D * s.L, dmax).normalized();
}

Mat<Zq> mat_inverse_unit(const Mat<Zq>& A) {
    QMat q = qmat_inverse(A);
    if (q.denom != 0) throw ring_error("mat_inverse_unit: determinant not a unit");
    return q.num;
}

Mat<Zq> kernel_free(const Mat<Zq>& A, int k) {
    const ZqRing* R = A.ring();
    Smith s = smith_decompose(A);
    std::vector<int> freecols;
    for (int j = 0; j < A.cols; ++j) {
        int dj = j < (int)s.d.size() ? s.d[j] : R->Nw;  // columns beyond min(m,n) are free
        if (dj >= k) freecols.push_back(j);
    }
    Mat<Zq> K(R, A.cols, (int)freecols.size());
    for (size_t jj = 0; jj < freecols.size(); ++jj)
        for (int i = 0; i < A.cols; ++i) K.at(i, (int)jj) = s.R.at(i, freecols[jj]);
    return K;
}

std::pair<Mat<Zq>, int> modp_kernel_decomposition(const Mat<Zq>& A) {
    const ZqRing* R = A.ring();
    Smith s = smith_decompose(A);
    std::vector<int> kcols, rest;
    for (int j = 0; j < A.cols; ++j) {
        int dj = j < (int)s.d.size() ? s.d[j] : R->Nw;
        (dj >= 1 ? kcols : rest).push_back(j);
    }
    Mat<Zq> B(R, A.cols, A.cols);
    int col = 0;
    for (int j : kcols) {
        for (int i = 0; i < A.cols; ++i) B.at(i, col) = s.R.at(i, j);
        ++col;
    }
    for (int j : rest) {
        for (int i = 0; i < A.cols; ++i) B.at(i, col) = s.R.at(i, j);
        ++col;
    }
    return {B, (int)kcols.size()};
}

Mat<TSeries> mat_inverse_series(const Mat<TSeries>& A) {
    if (A.rows != A.cols) throw ring_error("mat_inverse_series: non-square");
    int n = A.rows;
    const SeriesRing* S = A.ring();
    TSeries det = mat_det(A);
    TSeries dinv = det.inv();
    // adjugate
    Mat<TSeries> adj(S, n, n);
    if (n == 1) {
        adj.at(0, 0) = series_one(S);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Mat<TSeries> minor(S, n - 1, n - 1);
                for (int r = 0, ri = 0; r < n; ++r) {
                    if (r == i) continue;
                    for (int c = 0, ci = 0; c < n; ++c) {
                        if (c == j) continue;
                        minor.at(ri, ci) = A.at(r, c);
                        ++ci;
                    }
                    ++ri;
                }
                TSeries cof = mat_det(minor);
                if ((i + j) % 2 == 1) cof = -cof;
                adj.at(j, i) = cof;  // transpose
            }
    }
    Mat<TSeries> inv(S, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = (adj.at(i, j) * dinv).normalize();
    return inv;
}

Zq random_zq(const ZqRing* R, Rng& rng) {
    std::vector<u64> c(R->r);
    for (auto& v : c) v = rng.next(R->pNw);
    return Zq(R, c);
}

Zq random_unit(const ZqRing* R, Rng& rng) {
    for (;;) {
        Zq x = random_zq(R, rng);
        if (x.val() == 0) return x;
    }
}

Mat<Zq> random_matrix(const ZqRing* R, int m, int n, Rng& rng) {
    Mat<Zq> A(R, m, n);
    for (auto& v : A.a) v = random_zq(R, rng);
    return A;
}

Mat<Zq> random_invertible(const ZqRing* R, int n, Rng& rng) {
    for (;;) {
        Mat<Zq> A = random_matrix(R, n, n, rng);
        if (mat_det(A).val() == 0) return A;
    }
}

}  // namespace gsw
