#include "gsw/series.hpp"

#include <algorithm>

namespace gsw {

TSeries series_zero(const SeriesRing* S) {
    return TSeries(S, std::vector<Zq>(S->T, S->zq->zero()));
}

TSeries series_one(const SeriesRing* S) {
    auto f = series_zero(S);
    f.a[0] = S->zq->one();
    return f;
}

TSeries series_t(const SeriesRing* S, int power) {
    auto f = series_zero(S);
    if (power < S->T) f.a[power] = S->zq->one();
    return f;
}

TSeries series_from_zq(const SeriesRing* S, const Zq& v) {
    auto f = series_zero(S);
    f.a[0] = v;
    return f;
}

namespace {
// align two series to a common denominator exponent
void align(const TSeries& x, const TSeries& y, TSeries& xa, TSeries& ya) {
    int d = std::max(x.denom, y.denom);
    xa = x;
    ya = y;
    if (x.denom < d) {
        for (auto& c : xa.a) c = c.mul_pk(d - x.denom);
        xa.denom = d;
    }
    if (y.denom < d) {
        for (auto& c : ya.a) c = c.mul_pk(d - y.denom);
        ya.denom = d;
    }
}
}  // namespace

TSeries TSeries::operator+(const TSeries& o) const {
    TSeries x, y;
    align(*this, o, x, y);
    for (int i = 0; i < S->T; ++i) x.a[i] = x.a[i] + y.a[i];
    return x;
}

TSeries TSeries::operator-(const TSeries& o) const {
    TSeries x, y;
    align(*this, o, x, y);
    for (int i = 0; i < S->T; ++i) x.a[i] = x.a[i] - y.a[i];
    return x;
}

TSeries TSeries::operator-() const {
    TSeries x = *this;
    for (auto& c : x.a) c = -c;
    return x;
}

TSeries TSeries::operator*(const TSeries& o) const {
    TSeries res = series_zero(S);
    res.denom = denom + o.denom;
    for (int i = 0; i < S->T; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < S->T; ++j) {
            if (o.a[j].is_zero()) continue;
            res.a[i + j] = res.a[i + j] + a[i] * o.a[j];
        }
    }
    return res.normalize();
}

bool TSeries::is_zero() const {
    for (auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

TSeries TSeries::frob() const {
    TSeries res = series_zero(S);
    res.denom = denom;
    auto p = S->zq->p;
    for (int i = 0; i < S->T; ++i) {
        long long j = (long long)p * i;
        if (j >= S->T) break;
        res.a[(int)j] = a[i].frob();
    }
    return res;
}

TSeries TSeries::derivative() const {
    TSeries res = series_zero(S);
    res.denom = denom;
    for (int i = 1; i < S->T; ++i)
        res.a[i - 1] = a[i] * S->zq->from_int(i);
    return res;
}

Zq TSeries::at_t0() const {
    TSeries n = normalize();
    if (n.denom > 0) {
        // constant term with a genuine denominator cannot be folded into Zq
        if (!n.a[0].divisible_pk(n.denom))
            throw precision_error("at_t0: constant term carries a denominator");
        return n.a[0].div_exact_p(n.denom);
    }
    return n.a[0];
}

TSeries TSeries::normalize() const {
    TSeries res = *this;
    while (res.denom > 0) {
        bool all = true;
        for (auto& c : res.a)
            if (!c.divisible_pk(1)) { all = false; break; }
        if (!all) break;
        for (auto& c : res.a) c = c.div_exact_p(1);
        res.denom--;
    }
    if (res.denom > 0 && res.is_zero()) res.denom = 0;
    return res;
}

int TSeries::gauss_val() const {
    int v = S->zq->Nw;
    for (auto& c : a) v = std::min(v, c.val());
    return v - denom;
}

TSeries TSeries::inv() const {
    // invertible in the bounded-denominator ring iff f = p^g * (unit-constant
    // series) up to the stored denominator
    TSeries n = normalize();
    int m = S->zq->Nw;
    for (auto& c : n.a) m = std::min(m, c.val());
    if (m > 0) {
        for (auto& c : n.a) c = c.div_exact_p(m);
    }
    if (n.a[0].val() > 0)
        throw ring_error("TSeries::inv: not invertible (non-unit constant after p-normalization)");
    int shift = n.denom - m;  // f = p^{-shift} * n with n unit-constant
    n.denom = 0;
    TSeries res = series_zero(S);
    res.a[0] = n.a[0].inv();
    // order-by-order: b_k = -b_0 * sum_{j=1..k} a_j b_{k-j}
    for (int k = 1; k < S->T; ++k) {
        Zq s = S->zq->zero();
        for (int j = 1; j <= k; ++j) s = s + n.a[j] * res.a[k - j];
        res.a[k] = -(res.a[0] * s);
    }
    return res.mul_pk(shift);
}

TSeries TSeries::mul_pk(int k) const {
    TSeries res = *this;
    if (k >= 0) {
        for (auto& c : res.a) c = c.mul_pk(k);
        return res.normalize();
    }
    res.denom += -k;
    return res.normalize();
}

TSeries TSeries::div_int(std::int64_t n) const {
    if (n == 0) throw ring_error("div_int by zero");
    bool neg = n < 0;
    if (neg) n = -n;
    int v = 0;
    while (n % S->zq->p == 0) { n /= S->zq->p; ++v; }
    TSeries res = *this;
    u64 ui = S->zq->inv_m((u64)(n % (std::int64_t)S->zq->pNw));
    Zq uinv(S->zq, std::vector<u64>(S->zq->r, 0));
    uinv.c[0] = ui;
    for (auto& c : res.a) c = c * uinv;
    res.denom += v;
    if (neg)
        for (auto& c : res.a) c = -c;
    return res.normalize();
}

bool TSeries::congruent(const TSeries& o, int e) const {
    TSeries x, y;
    align(*this, o, x, y);
    for (int i = 0; i < S->T; ++i)
        if (!x.a[i].congruent(y.a[i], e)) return false;
    return true;
}

TSeries TSeries::truncate(int newT, const SeriesRing* newRing) const {
    TSeries res = series_zero(newRing);
    res.denom = denom;
    for (int i = 0; i < std::min(S->T, newT); ++i) res.a[i] = a[i];
    return res;
}

// ---------- bivariate ----------

BiSeries bi_zero(const BiRing* B) {
    return BiSeries(B, std::vector<Zq>((size_t)B->T * B->T, B->zq->zero()));
}

BiSeries bi_one(const BiRing* B) {
    auto f = bi_zero(B);
    f.at(0, 0) = B->zq->one();
    return f;
}

BiSeries bi_from_zq(const BiRing* B, const Zq& v) {
    auto f = bi_zero(B);
    f.at(0, 0) = v;
    return f;
}

BiSeries bi_embed(const BiRing* B, const TSeries& f, int slot) {
    auto res = bi_zero(B);
    res.denom = f.denom;
    for (int i = 0; i < std::min(B->T, f.S->T); ++i) {
        if (slot == 1)
            res.at(i, 0) = f.a[i];
        else
            res.at(0, i) = f.a[i];
    }
    return res;
}

namespace {
void balign(const BiSeries& x, const BiSeries& y, BiSeries& xa, BiSeries& ya) {
    int d = std::max(x.denom, y.denom);
    xa = x;
    ya = y;
    if (x.denom < d) {
        for (auto& c : xa.a) c = c.mul_pk(d - x.denom);
        xa.denom = d;
    }
    if (y.denom < d) {
        for (auto& c : ya.a) c = c.mul_pk(d - y.denom);
        ya.denom = d;
    }
}
}  // namespace

BiSeries BiSeries::operator+(const BiSeries& o) const {
    BiSeries x, y;
    balign(*this, o, x, y);
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] = x.a[i] + y.a[i];
    return x;
}

BiSeries BiSeries::operator-(const BiSeries& o) const {
    BiSeries x, y;
    balign(*this, o, x, y);
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] = x.a[i] - y.a[i];
    return x;
}

BiSeries BiSeries::operator-() const {
    BiSeries x = *this;
    for (auto& c : x.a) c = -c;
    return x;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
    BiSeries res = bi_zero(B);
    res.denom = denom + o.denom;
    int T = B->T;
    for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j) {
            const Zq& x = at(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; i + k < T; ++k)
                for (int l = 0; j + l < T; ++l) {
                    const Zq& y = o.at(k, l);
                    if (y.is_zero()) continue;
                    res.at(i + k, j + l) = res.at(i + k, j + l) + x * y;
                }
        }
    // normalize
    while (res.denom > 0) {
        bool all = true;
        for (auto& c : res.a)
            if (!c.divisible_pk(1)) { all = false; break; }
        if (!all) break;
        for (auto& c : res.a) c = c.div_exact_p(1);
        res.denom--;
    }
    return res;
}

bool BiSeries::is_zero() const {
    for (auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

bool BiSeries::congruent(const BiSeries& o, int e) const {
    BiSeries x, y;
    balign(*this, o, x, y);
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!x.a[i].congruent(y.a[i], e)) return false;
    return true;
}

TSeries BiSeries::diagonal(const SeriesRing* S) const {
    TSeries res = series_zero(S);
    res.denom = denom;
    for (int i = 0; i < B->T; ++i)
        for (int j = 0; j < B->T; ++j)
            if (i + j < S->T) res.a[i + j] = res.a[i + j] + at(i, j);
    return res;
}

}  // namespace gsw
