#pragma once

// Dense matrices over the exact coefficient scalars (Zq, TSeries, BiSeries),
// with the multilinear constructions (Kronecker, wedge, sym) on frozen
// lexicographic bases.

#include <functional>
#include <vector>

#include "gsw/series.hpp"

namespace gsw {

template <class S>
struct ScalarOps;  // zero/one/frob/div_int per scalar type

template <>
struct ScalarOps<Zq> {
    using ring_type = ZqRing;
    static Zq zero(const ZqRing* R) { return R->zero(); }
    static Zq one(const ZqRing* R) { return R->one(); }
    static Zq frob(const Zq& x) { return x.frob(); }
    static Zq div_int(const Zq& x, std::int64_t n) { return x.div_int(n); }
    static const ZqRing* ring(const Zq& x) { return x.R; }
};

template <>
struct ScalarOps<TSeries> {
    using ring_type = SeriesRing;
    static TSeries zero(const SeriesRing* R) { return series_zero(R); }
    static TSeries one(const SeriesRing* R) { return series_one(R); }
    static TSeries frob(const TSeries& x) { return x.frob(); }
    static TSeries div_int(const TSeries& x, std::int64_t n) { return x.div_int(n); }
    static const SeriesRing* ring(const TSeries& x) { return x.S; }
};

template <>
struct ScalarOps<BiSeries> {
    using ring_type = BiRing;
    static BiSeries zero(const BiRing* R) { return bi_zero(R); }
    static BiSeries one(const BiRing* R) { return bi_one(R); }
    static BiSeries div_int(const BiSeries&, std::int64_t) {
        throw ring_error("div_int unsupported for bivariate scalars");
    }
    static const BiRing* ring(const BiSeries& x) { return x.B; }
};

template <class S>
struct Mat {
    using Ring = typename ScalarOps<S>::ring_type;
    int rows = 0, cols = 0;
    std::vector<S> a;
    const Ring* R_ = nullptr;

    Mat() = default;
    Mat(const Ring* R, int m, int n)
        : rows(m), cols(n), a((size_t)m * n, ScalarOps<S>::zero(R)), R_(R) {}

    S& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const S& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    const Ring* ring() const { return R_; }

    static Mat identity(const Ring* R, int n) {
        Mat m(R, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ScalarOps<S>::one(R);
        return m;
    }
};

template <class S>
Mat<S> operator+(const Mat<S>& x, const Mat<S>& y) {
    Mat<S> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

template <class S>
Mat<S> operator-(const Mat<S>& x, const Mat<S>& y) {
    Mat<S> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

template <class S>
Mat<S> operator*(const Mat<S>& x, const Mat<S>& y) {
    if (x.cols != y.rows) throw ring_error("matrix shape mismatch");
    Mat<S> r(x.ring(), x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const S& v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = r.at(i, j) + v * y.at(k, j);
        }
    return r;
}

template <class S>
Mat<S> scalar_mul(const S& c, const Mat<S>& x) {
    Mat<S> r = x;
    for (auto& v : r.a) v = c * v;
    return r;
}

template <class S>
Mat<S> mat_frob(const Mat<S>& x) {
    Mat<S> r = x;
    for (auto& v : r.a) v = ScalarOps<S>::frob(v);
    return r;
}

template <class S>
std::vector<S> mat_apply(const Mat<S>& m, const std::vector<S>& v) {
    std::vector<S> r((size_t)m.rows, ScalarOps<S>::zero(m.ring()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r[i] = r[i] + m.at(i, j) * v[j];
    return r;
}

template <class S>
bool mat_is_zero(const Mat<S>& x) {
    for (auto& v : x.a)
        if (!v.is_zero()) return false;
    return true;
}

template <class S, class Pred>
bool mat_all(const Mat<S>& x, Pred pred) {
    for (auto& v : x.a)
        if (!pred(v)) return false;
    return true;
}

template <class S>
S mat_det(const Mat<S>& x) {
    if (x.rows != x.cols) throw ring_error("det of non-square matrix");
    int n = x.rows;
    if (n == 0) return ScalarOps<S>::one(x.ring());
    if (n == 1) return x.at(0, 0);
    // expansion along the first column
    S acc = ScalarOps<S>::zero(x.ring());
    for (int i = 0; i < n; ++i) {
        if (x.at(i, 0).is_zero()) continue;
        Mat<S> minor(x.ring(), n - 1, n - 1);
        for (int r = 0, ri = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor.at(ri, c - 1) = x.at(r, c);
            ++ri;
        }
        S term = x.at(i, 0) * mat_det(minor);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <class S>
S mat_trace(const Mat<S>& x) {
    S t = ScalarOps<S>::zero(x.ring());
    for (int i = 0; i < x.rows; ++i) t = t + x.at(i, i);
    return t;
}

// characteristic polynomial det(X I - A) via Faddeev-LeVerrier; coefficients
// c[0..n] low degree first, c[n] = 1. Integer divisions go through the scalar
// hook (exact over Zq given headroom; denominators over series).
template <class S>
std::vector<S> char_poly(const Mat<S>& A) {
    int n = A.rows;
    auto* R = A.ring();
    std::vector<S> c((size_t)n + 1, ScalarOps<S>::zero(R));
    c[n] = ScalarOps<S>::one(R);
    Mat<S> M = Mat<S>::identity(R, n);
    for (int k = 1; k <= n; ++k) {
        M = A * M;
        S t = mat_trace(M);
        S ck = ScalarOps<S>::div_int(t, k);
        c[n - k] = ScalarOps<S>::zero(R) - ck;
        for (int i = 0; i < n; ++i) M.at(i, i) = M.at(i, i) + c[n - k];
    }
    return c;
}

// lexicographically ordered k-subsets of {0..n-1}
std::vector<std::vector<int>> k_subsets(int n, int k);
// lexicographically ordered degree-k exponent vectors on n variables
// (exponents of variable 0 descending first)
std::vector<std::vector<int>> k_monomials(int n, int k);

// k-th compound matrix (wedge power) on the lex subset basis, with signs from
// sorted permutation parity (minors of the input).
template <class S>
Mat<S> wedge_matrix(const Mat<S>& A, int k) {
    auto rowsub = k_subsets(A.rows, k);
    auto colsub = k_subsets(A.cols, k);
    Mat<S> W(A.ring(), (int)rowsub.size(), (int)colsub.size());
    for (size_t i = 0; i < rowsub.size(); ++i)
        for (size_t j = 0; j < colsub.size(); ++j) {
            Mat<S> minor(A.ring(), k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) minor.at(r, c) = A.at(rowsub[i][r], colsub[j][c]);
            W.at((int)i, (int)j) = mat_det(minor);
        }
    return W;
}

// k-th symmetric power on the lex monomial basis: image of monomial e is the
// expansion of prod_v (A * x_v)^{e_v}.
template <class S>
Mat<S> sym_matrix(const Mat<S>& A, int k) {
    auto* R = A.ring();
    auto rowmon = k_monomials(A.rows, k);
    auto colmon = k_monomials(A.cols, k);
    auto row_index = [&](const std::vector<int>& e) {
        for (size_t i = 0; i < rowmon.size(); ++i)
            if (rowmon[i] == e) return (int)i;
        throw ring_error("monomial index");
    };
    Mat<S> Sy(R, (int)rowmon.size(), (int)colmon.size());
    for (size_t j = 0; j < colmon.size(); ++j) {
        // polynomial in output variables: map exponent vector -> coefficient
        std::vector<std::pair<std::vector<int>, S>> poly{
            {std::vector<int>(A.rows, 0), ScalarOps<S>::one(R)}};
        for (int v = 0; v < A.cols; ++v) {
            for (int rep = 0; rep < colmon[j][v]; ++rep) {
                std::vector<std::pair<std::vector<int>, S>> next;
                for (auto& term : poly)
                    for (int u = 0; u < A.rows; ++u) {
                        if (A.at(u, v).is_zero()) continue;
                        auto e = term.first;
                        e[u]++;
                        S cf = term.second * A.at(u, v);
                        bool merged = false;
                        for (auto& t2 : next)
                            if (t2.first == e) { t2.second = t2.second + cf; merged = true; break; }
                        if (!merged) next.emplace_back(std::move(e), std::move(cf));
                    }
                poly = std::move(next);
            }
        }
        for (auto& term : poly) Sy.at(row_index(term.first), (int)j) = term.second;
    }
    return Sy;
}

template <class S>
Mat<S> kron(const Mat<S>& A, const Mat<S>& B) {
    Mat<S> K(A.ring(), A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (int k = 0; k < B.rows; ++k)
                for (int l = 0; l < B.cols; ++l)
                    K.at(i * B.rows + k, j * B.cols + l) = A.at(i, j) * B.at(k, l);
        }
    return K;
}

template <class S>
Mat<S> block_diag(const std::vector<Mat<S>>& blocks) {
    int m = 0, n = 0;
    for (auto& b : blocks) { m += b.rows; n += b.cols; }
    Mat<S> D(blocks.at(0).ring(), m, n);
    int ro = 0, co = 0;
    for (auto& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) D.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows;
        co += b.cols;
    }
    return D;
}

template <class S>
Mat<S> mat_transpose(const Mat<S>& A) {
    Mat<S> T(A.ring(), A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

}  // namespace gsw
