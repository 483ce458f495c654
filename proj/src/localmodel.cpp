#include "gsw/localmodel.hpp"

namespace gsw {

namespace {
std::string ratio(const char* v, int num, int den) {
    return std::string(v) + std::to_string(num) + "/" + v + std::to_string(den);
}
}  // namespace

ChartPresentation chart_presentation(const ChartSpec& c) {
    if (!c.valid()) throw ring_error("chart_presentation: need 1 <= nu <= k < mu <= n");
    ChartPresentation out;
    // s-ratios over indices 1..k with nu replaced by mu, then t-ratios over
    // k+1..n with mu replaced by nu
    for (int i = 1; i <= c.k; ++i) out.variables.push_back(ratio("s", i == c.nu ? c.mu : i, c.nu));
    for (int j = c.k + 1; j <= c.n; ++j)
        out.variables.push_back(ratio("t", j == c.mu ? c.nu : j, c.mu));
    out.relation = "(" + ratio("s", c.mu, c.nu) + ")*(" + ratio("t", c.nu, c.mu) + ") - p";
    out.eq1.scaled = "t";
    out.eq1.pexp.assign((size_t)c.n, 1);
    for (int i = 0; i < c.k; ++i) out.eq1.pexp[i] = 0;
    out.eq1.scalar = "t" + std::to_string(c.nu) + "/s" + std::to_string(c.nu);
    out.eq1.reference = "s";
    out.eq2.scaled = "s";
    out.eq2.pexp.assign((size_t)c.n, 0);
    for (int i = 0; i < c.k; ++i) out.eq2.pexp[i] = 1;
    out.eq2.scalar = "s" + std::to_string(c.mu) + "/t" + std::to_string(c.mu);
    out.eq2.reference = "t";
    return out;
}

Zq relation_value(const ChartSpec& c, const LocalPoint& x) {
    const Zq& snu = x.s[c.nu - 1];
    const Zq& tmu = x.t[c.mu - 1];
    Zq p1 = snu.R->one().mul_pk(1);
    return x.s[c.mu - 1] * snu.inv() * x.t[c.nu - 1] * tmu.inv() - p1;
}

MembershipResult membership_check(const ChartSpec& c, const LocalPoint& x) {
    if (!c.valid()) throw ring_error("membership_check: invalid chart spec");
    if ((int)x.s.size() != c.n || (int)x.t.size() != c.n)
        throw ring_error("membership_check: point dimension mismatch");
    const Zq& snu = x.s[c.nu - 1];
    const Zq& tmu = x.t[c.mu - 1];
    if (snu.val() != 0 || tmu.val() != 0)
        throw ring_error("membership_check: pivot s_nu or t_mu is not a unit");

    MembershipResult res;
    // (i) kernel conditions: (t_1..t_k, p t_{k+1}..p t_n) = (t_nu/s_nu) s
    //     and (p s_1..p s_k, s_{k+1}..s_n) = (s_mu/t_mu) t
    {
        Zq lam = x.t[c.nu - 1] * snu.inv();
        Zq mu2 = x.s[c.mu - 1] * tmu.inv();
        bool ok = true;
        for (int i = 0; i < c.n; ++i) {
            Zq lhs1 = i < c.k ? x.t[i] : x.t[i].mul_pk(1);
            Zq lhs2 = i < c.k ? x.s[i].mul_pk(1) : x.s[i];
            if (!(lhs1 - lam * x.s[i]).is_zero() || !(lhs2 - mu2 * x.t[i]).is_zero()) {
                ok = false;
                res.witness = "kernel condition fails at coordinate " + std::to_string(i + 1);
                break;
            }
        }
        res.kernel_ok = ok;
    }
    // (ii) chart equations t_i = (s_i/s_nu) t_nu, s_j = (t_j/t_mu) s_mu,
    //      and the single relation
    {
        bool ok = relation_value(c, x).is_zero();
        if (!ok) res.witness = "single relation violated";
        for (int i = 1; ok && i <= c.k; ++i)
            if (!(x.t[i - 1] - x.s[i - 1] * snu.inv() * x.t[c.nu - 1]).is_zero()) {
                ok = false;
                res.witness = "t-equation fails at i = " + std::to_string(i);
            }
        for (int j = c.k + 1; ok && j <= c.n; ++j)
            if (!(x.s[j - 1] - x.t[j - 1] * tmu.inv() * x.s[c.mu - 1]).is_zero()) {
                ok = false;
                res.witness = "s-equation fails at j = " + std::to_string(j);
            }
        res.chart_ok = ok;
    }
    res.agree = res.kernel_ok == res.chart_ok;
    if (res.agree) res.witness.clear();
    return res;
}

LocalPoint sample_chart_point(const ChartSpec& c, const ZqRing* R, Rng& rng) {
    LocalPoint x;
    x.s.assign((size_t)c.n, R->zero());
    x.t.assign((size_t)c.n, R->zero());
    x.s[c.nu - 1] = random_unit(R, rng);
    x.t[c.mu - 1] = random_unit(R, rng);
    // constrained pair: (s_mu/s_nu)(t_nu/t_mu) = p
    int a = (int)rng.next(2);
    Zq u = random_unit(R, rng);
    x.s[c.mu - 1] = u.mul_pk(a) * x.s[c.nu - 1];
    x.t[c.nu - 1] = u.inv().mul_pk(1 - a) * x.t[c.mu - 1];
    // free s-ratios on 1..k, then the dependent t coordinates
    for (int i = 1; i <= c.k; ++i) {
        if (i != c.nu) x.s[i - 1] = random_zq(R, rng) * x.s[c.nu - 1];
        x.t[i - 1] = x.s[i - 1] * x.s[c.nu - 1].inv() * x.t[c.nu - 1];
    }
    // free t-ratios on k+1..n, then the dependent s coordinates
    for (int j = c.k + 1; j <= c.n; ++j) {
        if (j != c.mu) x.t[j - 1] = random_zq(R, rng) * x.t[c.mu - 1];
        x.s[j - 1] = x.t[j - 1] * x.t[c.mu - 1].inv() * x.s[c.mu - 1];
    }
    return x;
}

}  // namespace gsw
