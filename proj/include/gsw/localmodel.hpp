#pragma once

// Affine charts of the local model: on the open set {s_nu t_mu != 0} with
// nu <= k < mu, the chart is cut out of the ratio variables by the single
// relation (s_mu/s_nu)(t_nu/t_mu) = p. The membership check evaluates both
// the kernel-mapping formulation ((t_1..t_k, p t_{k+1}..p t_n) proportional
// to s, and its mirror) and the chart equations, and asserts they agree.

#include <string>

#include "gsw/linalg.hpp"

namespace gsw {

// chart indices are 1-based: 1 <= nu <= k < mu <= n
struct ChartSpec {
    int n = 0, k = 0, nu = 0, mu = 0;
    bool valid() const { return 1 <= nu && nu <= k && k < mu && mu <= n; }
};

// one of the two equivalent vector equations: the coordinatewise p-exponents
// applied to the scaled vector, the scaling ratio, and the reference vector
struct VectorEquation {
    std::string scaled;            // which vector carries the p-exponents
    std::vector<int> pexp;         // length n
    std::string scalar;            // the proportionality ratio
    std::string reference;         // the vector on the right-hand side
};

struct ChartPresentation {
    std::vector<std::string> variables;  // the ratio coordinates, paper order
    std::string relation;                // single generator of the ideal
    VectorEquation eq1, eq2;
};

ChartPresentation chart_presentation(const ChartSpec& c);

// a point of P^{n-1} x P^{n-1} over Z/p^N in coordinates (t, s); entries
// live in a ZqRing with r = 1
struct LocalPoint {
    std::vector<Zq> s, t;
};

struct MembershipResult {
    bool kernel_ok = false;  // both kernel-mapping conditions
    bool chart_ok = false;   // chart equations plus the single relation
    bool agree = false;
    std::string witness;
};

// evaluates both formulations; throws ring_error when s_nu or t_mu is not a
// unit (outside the chart)
MembershipResult membership_check(const ChartSpec& c, const LocalPoint& x);

// the single relation's value (s_mu/s_nu)(t_nu/t_mu) - p
Zq relation_value(const ChartSpec& c, const LocalPoint& x);

// random satisfying point from the smooth chart parametrization: free ratio
// variables plus the constrained pair with p split as p^a * p^{1-a}
LocalPoint sample_chart_point(const ChartSpec& c, const ZqRing* R, Rng& rng);

}  // namespace gsw
