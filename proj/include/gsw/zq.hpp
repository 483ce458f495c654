#pragma once

// Exact arithmetic in Z_q = W(F_{p^r}) truncated at p^Nw, realized as
// (Z/p^Nw)[x]/(m(x)) for a Hensel-lifted irreducible modulus m, together
// with the Frobenius automorphism tau (x -> root of m congruent to x^p).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsw {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct RingParams {
    std::int64_t p = 3;  // odd prime
    int r = 1;           // grading period / residue degree
    int N = 4;           // reported p-adic precision
    int T = 8;           // t-adic truncation
    int D = 0;           // denominator budget
};

// Thrown on contract violations (bad primes, shape mismatches, ...).
struct ring_error : std::runtime_error {
    explicit ring_error(const std::string& m) : std::runtime_error(m) {}
};

// Thrown when a result cannot be certified at the working precision.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& m) : std::runtime_error(m) {}
};

class ZqRing;

// Element of W(F_{p^r}) / p^Nw, coordinates in the power basis of x mod m.
struct Zq {
    const ZqRing* R = nullptr;
    std::vector<u64> c;  // size r, residues mod p^Nw

    Zq() = default;
    Zq(const ZqRing* ring, std::vector<u64> coeffs) : R(ring), c(std::move(coeffs)) {}

    Zq operator+(const Zq& o) const;
    Zq operator-(const Zq& o) const;
    Zq operator-() const;
    Zq operator*(const Zq& o) const;
    Zq& operator+=(const Zq& o) { *this = *this + o; return *this; }
    Zq& operator-=(const Zq& o) { *this = *this - o; return *this; }
    Zq& operator*=(const Zq& o) { *this = *this * o; return *this; }
    bool operator==(const Zq& o) const { return c == o.c; }
    bool operator!=(const Zq& o) const { return c != o.c; }

    bool is_zero() const;
    // p-adic valuation; returns the working precision Nw for zero (treat as +inf).
    int val() const;
    Zq frob() const;        // tau
    Zq frob_pow(int k) const;
    Zq inv() const;         // unit inverse; throws if not a unit
    Zq mul_pk(int k) const; // multiply by p^k
    Zq div_exact_p(int k) const;  // divide by p^k; throws if not divisible
    Zq div_int(std::int64_t n) const;  // exact division by a nonzero integer
    bool divisible_pk(int k) const;
    // congruence mod p^e (e <= Nw)
    bool congruent(const Zq& o, int e) const;
    Zq reduce_mod_pk(int k) const;  // canonical representative mod p^k
};

// The ring context. Immutable after construction; safe to share.
class ZqRing {
public:
    // Nw is the working precision exponent (>= params.N).
    ZqRing(std::int64_t p, int r, int Nw);

    std::int64_t p;
    int r;
    int Nw;          // working precision
    u64 pNw;         // p^Nw
    std::vector<u64> ppow;       // p^0 .. p^Nw
    std::vector<u64> modulus;    // m(x) = x^r + sum modulus[i] x^i (coeffs mod p^Nw)
    std::vector<std::vector<u64>> frob_mat;  // r x r: column i = tau(x^i)
    std::vector<u64> frob_gen;   // tau(x) as element

    Zq zero() const;
    Zq one() const;
    Zq from_int(std::int64_t v) const;
    Zq gen() const;                 // the generator x (zero when r = 1)
    Zq from_coeffs(const std::vector<std::int64_t>& v) const;

    u64 add_m(u64 a, u64 b) const { u64 s = a + b; return s >= pNw ? s - pNw : s; }
    u64 sub_m(u64 a, u64 b) const { return a >= b ? a - b : a + pNw - b; }
    u64 mul_m(u64 a, u64 b) const { return (u64)((u128)a * b % pNw); }
    u64 inv_m(u64 a) const;   // inverse of a unit mod p^Nw
    int val_m(u64 a) const;   // v_p, Nw for 0

    // polynomial helpers mod p (used at construction and for mod-p inverses)
    static std::vector<u64> lex_least_irreducible(std::int64_t p, int r);

private:
    void build_frobenius();
};

bool is_prime(std::int64_t n);

// Small exact rational for slopes.
struct Frac {
    long long num = 0;
    long long den = 1;
    Frac() = default;
    Frac(long long n, long long d);
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator<(const Frac& o) const { return (long double)num * o.den < (long double)o.num * den; }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    std::string str() const;
};

}  // namespace gsw
