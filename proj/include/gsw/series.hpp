#pragma once

// Truncated power series (W(F_{p^r})/p^Nw)[[t]]/t^T with a shared p-denominator
// exponent, the Frobenius lift t -> t^p, and the bivariate quotient
// Z_q[t1,t2]/(t1^T, t2^T) used for descent data.

#include "gsw/zq.hpp"

namespace gsw {

class SeriesRing {
public:
    const ZqRing* zq;
    int T;
    SeriesRing(const ZqRing* base, int trunc) : zq(base), T(trunc) {
        if (trunc < 1) throw ring_error("T must be >= 1");
    }
};

// element = p^{-denom} * sum a[i] t^i
struct TSeries {
    const SeriesRing* S = nullptr;
    int denom = 0;
    std::vector<Zq> a;  // size T

    TSeries() = default;
    TSeries(const SeriesRing* ring, std::vector<Zq> coeffs, int d = 0)
        : S(ring), denom(d), a(std::move(coeffs)) {}

    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator-() const;
    TSeries operator*(const TSeries& o) const;
    TSeries& operator+=(const TSeries& o) { *this = *this + o; return *this; }
    TSeries& operator-=(const TSeries& o) { *this = *this - o; return *this; }
    TSeries& operator*=(const TSeries& o) { *this = *this * o; return *this; }

    bool is_zero() const;
    TSeries frob() const;        // semilinear on coefficients, t -> t^p
    TSeries derivative() const;  // d/dt
    Zq at_t0() const;            // constant term (with denominator folded in; throws if denom > 0 after normalize)
    TSeries normalize() const;   // strip common p factor against denom
    int gauss_val() const;       // min coeff valuation - denom; >= Nw-denom means zero
    bool is_inf_val() const { return is_zero(); }
    TSeries inv() const;         // requires unit constant term at denom 0
    TSeries mul_pk(int k) const;
    TSeries div_int(std::int64_t n) const;  // may raise denom
    bool congruent(const TSeries& o, int e) const;  // mod p^e (after aligning denoms)
    TSeries truncate(int newT, const SeriesRing* newRing) const;
};

TSeries series_zero(const SeriesRing* S);
TSeries series_one(const SeriesRing* S);
TSeries series_t(const SeriesRing* S, int power = 1);
TSeries series_from_zq(const SeriesRing* S, const Zq& v);

class BiRing {
public:
    const ZqRing* zq;
    int T;
    BiRing(const ZqRing* base, int trunc) : zq(base), T(trunc) {}
};

// element = p^{-denom} * sum a[i*T+j] t1^i t2^j
struct BiSeries {
    const BiRing* B = nullptr;
    int denom = 0;
    std::vector<Zq> a;  // size T*T

    BiSeries() = default;
    BiSeries(const BiRing* ring, std::vector<Zq> coeffs, int d = 0)
        : B(ring), denom(d), a(std::move(coeffs)) {}

    Zq& at(int i, int j) { return a[(size_t)i * B->T + j]; }
    const Zq& at(int i, int j) const { return a[(size_t)i * B->T + j]; }

    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator-(const BiSeries& o) const;
    BiSeries operator-() const;
    BiSeries operator*(const BiSeries& o) const;
    bool is_zero() const;
    bool congruent(const BiSeries& o, int e) const;
    // substitute t1 = t2 = t
    TSeries diagonal(const SeriesRing* S) const;
};

BiSeries bi_zero(const BiRing* B);
BiSeries bi_one(const BiRing* B);
// embed univariate series as series in t1 (slot=1) or t2 (slot=2)
BiSeries bi_embed(const BiRing* B, const TSeries& f, int slot);
BiSeries bi_from_zq(const BiRing* B, const Zq& v);

}  // namespace gsw
