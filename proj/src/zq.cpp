#include "gsw/zq.hpp"

#include <algorithm>
#include <numeric>

namespace gsw {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Frac::Frac(long long n, long long d) {
    if (d == 0) throw ring_error("Frac: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::string Frac::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// ---------- mod-p polynomial helpers (coeff vectors, low degree first) ----------

namespace {

using Poly = std::vector<u64>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul_p(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % (u64)p;
    return trim(c);
}

u64 inv_mod_prime(u64 a, std::int64_t p) {
    // Fermat
    u64 res = 1, base = a % (u64)p, e = (u64)p - 2;
    while (e) {
        if (e & 1) res = res * base % (u64)p;
        base = base * base % (u64)p;
        e >>= 1;
    }
    return res;
}

Poly poly_mod_p(Poly a, const Poly& m, std::int64_t p) {
    a = trim(std::move(a));
    Poly mm = trim(m);
    if (mm.empty()) throw ring_error("poly_mod_p: zero modulus");
    u64 lead_inv = inv_mod_prime(mm.back(), p);
    while (a.size() >= mm.size()) {
        u64 f = a.back() * lead_inv % (u64)p;
        size_t shift = a.size() - mm.size();
        for (size_t i = 0; i < mm.size(); ++i) {
            u64 sub = f * mm[i] % (u64)p;
            a[shift + i] = (a[shift + i] + (u64)p - sub) % (u64)p;
        }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_powmod_p(Poly base, u64 e, const Poly& m, std::int64_t p) {
    Poly res = {1};
    base = poly_mod_p(std::move(base), m, p);
    while (e) {
        if (e & 1) res = poly_mod_p(poly_mul_p(res, base, p), m, p);
        base = poly_mod_p(poly_mul_p(base, base, p), m, p);
        e >>= 1;
    }
    return res;
}

Poly poly_gcd_p(Poly a, Poly b, std::int64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod_p(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// extended gcd in F_p[x]: returns (g, u) with u*a = g mod m, g = gcd(a, m)
std::pair<Poly, Poly> poly_invert_p(const Poly& a, const Poly& m, std::int64_t p) {
    Poly r0 = trim(m), r1 = poly_mod_p(a, m, p);
    Poly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // r0 = q r1 + r2
        Poly q;
        {
            Poly rem = r0;
            Poly mm = r1;
            u64 lead_inv = inv_mod_prime(mm.back(), p);
            q.assign(rem.size() > mm.size() - 1 ? rem.size() - mm.size() + 1 : 1, 0);
            while (rem.size() >= mm.size() && !rem.empty()) {
                u64 f = rem.back() * lead_inv % (u64)p;
                size_t shift = rem.size() - mm.size();
                q[shift] = f;
                for (size_t i = 0; i < mm.size(); ++i) {
                    u64 sub = f * mm[i] % (u64)p;
                    rem[shift + i] = (rem[shift + i] + (u64)p - sub) % (u64)p;
                }
                rem = trim(std::move(rem));
            }
            r0.swap(r1);
            r1 = std::move(rem);
        }
        // s2 = s0 - q s1
        Poly qs = poly_mul_p(q, s1, p);
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            u64 x = i < s0.size() ? s0[i] : 0;
            u64 y = i < qs.size() ? qs[i] : 0;
            s2[i] = (x + (u64)p - y) % (u64)p;
        }
        s0 = std::move(s1);
        s1 = trim(std::move(s2));
    }
    return {r0, s0};
}

bool is_irreducible(const Poly& f, std::int64_t p, int r) {
    // f monic degree r over F_p: x^{p^r} == x mod f and gcd(x^{p^{r/q}} - x, f) = 1
    Poly x = {0, 1};
    auto xq = [&](int e) {
        Poly b = x;
        for (int i = 0; i < e; ++i) b = poly_powmod_p(b, (u64)p, f, p);
        return b;
    };
    Poly top = xq(r);
    Poly diff = top;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + (u64)p - 1) % (u64)p;
    if (!trim(diff).empty()) return false;
    for (int q = 2; q <= r; ++q) {
        if (r % q != 0 || !is_prime(q)) continue;
        Poly mid = xq(r / q);
        Poly d = mid;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = (d[1] + (u64)p - 1) % (u64)p;
        Poly g = poly_gcd_p(d, f, p);
        if (trim(g).size() > 1) return false;
    }
    return true;
}

}  // namespace

std::vector<u64> ZqRing::lex_least_irreducible(std::int64_t p, int r) {
    // monic x^r + a_{r-1} x^{r-1} + ... + a_0; lexicographic on (a_0,...,a_{r-1})
    if (r == 1) return {0};  // x
    std::vector<u64> a(r, 0);
    for (;;) {
        Poly f(a.begin(), a.end());
        f.push_back(1);
        if (is_irreducible(f, p, r)) return a;
        // increment lex counter
        int i = r - 1;
        while (i >= 0) {
            a[i]++;
            if (a[i] < (u64)p) break;
            a[i] = 0;
            --i;
        }
        if (i < 0) throw ring_error("no irreducible polynomial found");
    }
}

// ---------- ZqRing ----------

ZqRing::ZqRing(std::int64_t p_, int r_, int Nw_) : p(p_), r(r_), Nw(Nw_) {
    if (!is_prime(p) || p < 3) throw ring_error("p must be an odd prime");
    if (r < 1 || Nw < 1) throw ring_error("bad ring parameters");
    ppow.resize(Nw + 1);
    ppow[0] = 1;
    for (int i = 1; i <= Nw; ++i) {
        if (ppow[i - 1] > (u64)1 << 61) throw ring_error("p^Nw overflows");
        ppow[i] = ppow[i - 1] * (u64)p;
    }
    pNw = ppow[Nw];
    modulus = lex_least_irreducible(p, r);
    build_frobenius();
}

Zq ZqRing::zero() const { return Zq(this, std::vector<u64>(r, 0)); }

Zq ZqRing::one() const {
    std::vector<u64> c(r, 0);
    c[0] = 1 % pNw;
    return Zq(this, c);
}

Zq ZqRing::from_int(std::int64_t v) const {
    std::vector<u64> c(r, 0);
    std::int64_t m = v % (std::int64_t)pNw;
    if (m < 0) m += (std::int64_t)pNw;
    c[0] = (u64)m;
    return Zq(this, c);
}

Zq ZqRing::gen() const {
    std::vector<u64> c(r, 0);
    if (r > 1) c[1] = 1;
    return Zq(this, c);
}

Zq ZqRing::from_coeffs(const std::vector<std::int64_t>& v) const {
    std::vector<u64> c(r, 0);
    for (int i = 0; i < r && i < (int)v.size(); ++i) {
        std::int64_t m = v[i] % (std::int64_t)pNw;
        if (m < 0) m += (std::int64_t)pNw;
        c[i] = (u64)m;
    }
    return Zq(this, c);
}

u64 ZqRing::inv_m(u64 a) const {
    if (a % (u64)p == 0) throw ring_error("inv_m: not a unit");
    // Hensel from inverse mod p
    u64 x = inv_mod_prime(a % (u64)p, p);
    // lift: x <- x(2 - a x), doubling precision each step
    for (int bits = 1; bits < Nw; bits *= 2)
        x = (u64)((u128)x * sub_m(2 % pNw, mul_m(a, x)) % pNw);
    return x;
}

int ZqRing::val_m(u64 a) const {
    if (a == 0) return Nw;
    int v = 0;
    while (a % (u64)p == 0) { a /= (u64)p; ++v; }
    return v;
}

namespace {

// full-ring polynomial arithmetic mod (p^Nw, m(x))
std::vector<u64> ring_mul(const ZqRing& R, const std::vector<u64>& a, const std::vector<u64>& b) {
    int r = R.r;
    std::vector<u64> prod(2 * r - 1, 0);
    for (int i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < r; ++j)
            prod[i + j] = R.add_m(prod[i + j], R.mul_m(a[i], b[j]));
    }
    // reduce x^{r+k} using x^r = -modulus
    for (int d = 2 * r - 2; d >= r; --d) {
        u64 cd = prod[d];
        if (cd == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < r; ++i)
            prod[d - r + i] = R.sub_m(prod[d - r + i], R.mul_m(cd, R.modulus[i]));
    }
    prod.resize(r);
    return prod;
}

std::vector<u64> ring_eval_m(const ZqRing& R, const std::vector<u64>& z) {
    // m(z) in the ring, m monic of degree r
    std::vector<u64> acc(R.r, 0);
    acc[0] = 1;  // start with leading coeff
    for (int i = R.r - 1; i >= 0; --i) {
        acc = ring_mul(R, acc, z);
        acc[0] = R.add_m(acc[0], R.modulus[i]);
    }
    return acc;
}

std::vector<u64> ring_eval_mprime(const ZqRing& R, const std::vector<u64>& z) {
    // m'(z); m' has degree r-1 with leading coeff r
    std::vector<u64> acc(R.r, 0);
    acc[0] = (u64)R.r % R.pNw;
    for (int i = R.r - 1; i >= 1; --i) {
        acc = ring_mul(R, acc, z);
        acc[0] = R.add_m(acc[0], R.mul_m((u64)i % R.pNw, R.modulus[i]));
    }
    return acc;
}

std::vector<u64> ring_inv(const ZqRing& R, const std::vector<u64>& a);

std::vector<u64> ring_sub(const ZqRing& R, const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> c(R.r);
    for (int i = 0; i < R.r; ++i) c[i] = R.sub_m(a[i], b[i]);
    return c;
}

std::vector<u64> ring_inv(const ZqRing& R, const std::vector<u64>& a) {
    // invert unit in (Z/p^Nw)[x]/(m): mod-p ext gcd then Hensel lift
    Poly am(a.begin(), a.end());
    for (auto& v : am) v %= (u64)R.p;
    Poly mm(R.modulus.begin(), R.modulus.end());
    for (auto& v : mm) v %= (u64)R.p;
    mm.push_back(1);
    auto [g, u] = poly_invert_p(am, mm, R.p);
    if (trim(g).size() != 1) throw ring_error("ring_inv: not a unit");
    u64 ginv = inv_mod_prime(g[0], R.p);
    std::vector<u64> x(R.r, 0);
    for (size_t i = 0; i < u.size() && i < (size_t)R.r; ++i) x[i] = u[i] * ginv % (u64)R.p;
    // lift: x <- x(2 - a x)
    for (int bits = 1; bits < R.Nw; bits *= 2) {
        std::vector<u64> ax = ring_mul(R, a, x);
        std::vector<u64> two(R.r, 0);
        two[0] = 2 % R.pNw;
        x = ring_mul(R, x, ring_sub(R, two, ax));
    }
    return x;
}

}  // namespace

void ZqRing::build_frobenius() {
    // Newton iteration z <- z - m(z)/m'(z) from seed x^p, in the ring itself.
    std::vector<u64> z(r, 0);
    if (r == 1) {
        frob_gen = z;
    } else {
        // seed: x^p mod (m, p) lifted, then refined mod p^Nw
        Poly mm(modulus.begin(), modulus.end());
        for (auto& v : mm) v %= (u64)p;
        mm.push_back(1);
        Poly xp = poly_powmod_p({0, 1}, (u64)p, mm, p);
        for (size_t i = 0; i < xp.size() && i < (size_t)r; ++i) z[i] = xp[i];
        int guard = 0;
        for (;;) {
            std::vector<u64> fz = ring_eval_m(*this, z);
            bool zero = true;
            for (auto v : fz)
                if (v != 0) { zero = false; break; }
            if (zero) break;
            std::vector<u64> fpz = ring_eval_mprime(*this, z);
            std::vector<u64> step = ring_mul(*this, fz, ring_inv(*this, fpz));
            z = ring_sub(*this, z, step);
            if (++guard > 64) throw ring_error("frobenius root refinement did not converge");
        }
        frob_gen = z;
    }
    // frob matrix: column i = z^i
    frob_mat.assign(r, std::vector<u64>(r, 0));
    std::vector<u64> pw(r, 0);
    pw[0] = 1 % pNw;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) frob_mat[j][i] = pw[j];
        if (i + 1 < r) pw = ring_mul(*this, pw, z);
    }
}

// ---------- Zq ----------

Zq Zq::operator+(const Zq& o) const {
    Zq res(R, std::vector<u64>(R->r));
    for (int i = 0; i < R->r; ++i) res.c[i] = R->add_m(c[i], o.c[i]);
    return res;
}

Zq Zq::operator-(const Zq& o) const {
    Zq res(R, std::vector<u64>(R->r));
    for (int i = 0; i < R->r; ++i) res.c[i] = R->sub_m(c[i], o.c[i]);
    return res;
}

Zq Zq::operator-() const {
    Zq res(R, std::vector<u64>(R->r));
    for (int i = 0; i < R->r; ++i) res.c[i] = R->sub_m(0, c[i]);
    return res;
}

Zq Zq::operator*(const Zq& o) const {
    return Zq(R, ring_mul(*R, c, o.c));
}

bool Zq::is_zero() const {
    for (auto v : c)
        if (v != 0) return false;
    return true;
}

int Zq::val() const {
    int v = R->Nw;
    for (auto x : c) v = std::min(v, R->val_m(x));
    return v;
}

Zq Zq::frob() const {
    Zq res(R, std::vector<u64>(R->r, 0));
    for (int j = 0; j < R->r; ++j)
        for (int i = 0; i < R->r; ++i)
            res.c[j] = R->add_m(res.c[j], R->mul_m(R->frob_mat[j][i], c[i]));
    return res;
}

Zq Zq::frob_pow(int k) const {
    k %= R->r;
    if (k < 0) k += R->r;
    Zq res = *this;
    for (int i = 0; i < k; ++i) res = res.frob();
    return res;
}

Zq Zq::inv() const {
    if (val() > 0) throw ring_error("Zq::inv: not a unit");
    return Zq(R, ring_inv(*R, c));
}

Zq Zq::mul_pk(int k) const {
    if (k == 0) return *this;
    if (k < 0) return div_exact_p(-k);
    Zq res(R, std::vector<u64>(R->r));
    u64 f = k >= R->Nw ? 0 : R->ppow[k];
    for (int i = 0; i < R->r; ++i) res.c[i] = R->mul_m(c[i], f);
    return res;
}

bool Zq::divisible_pk(int k) const {
    if (k <= 0) return true;
    if (k > R->Nw) k = R->Nw;
    for (auto v : c)
        if (v % R->ppow[k] != 0) return false;
    return true;
}

Zq Zq::div_exact_p(int k) const {
    if (k == 0) return *this;
    if (!divisible_pk(k)) throw precision_error("div_exact_p: not divisible by p^" + std::to_string(k));
    Zq res(R, std::vector<u64>(R->r));
    for (int i = 0; i < R->r; ++i) res.c[i] = c[i] / R->ppow[k];
    return res;
}

Zq Zq::div_int(std::int64_t n) const {
    if (n == 0) throw ring_error("div_int by zero");
    bool neg = n < 0;
    if (neg) n = -n;
    int v = 0;
    while (n % R->p == 0) { n /= R->p; ++v; }
    Zq res = div_exact_p(v);
    u64 ui = R->inv_m((u64)(n % (std::int64_t)R->pNw));
    for (int i = 0; i < R->r; ++i) res.c[i] = R->mul_m(res.c[i], ui);
    return neg ? -res : res;
}

bool Zq::congruent(const Zq& o, int e) const {
    return (*this - o).divisible_pk(e);
}

Zq Zq::reduce_mod_pk(int k) const {
    if (k >= R->Nw) return *this;
    Zq res(R, std::vector<u64>(R->r));
    for (int i = 0; i < R->r; ++i) res.c[i] = c[i] % R->ppow[k];
    return res;
}

}  // namespace gsw
