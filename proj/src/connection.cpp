#include "gsw/connection.hpp"

#include <algorithm>

namespace gsw {

namespace {
Mat<TSeries> mat_derivative(const Mat<TSeries>& m) {
    Mat<TSeries> r = m;
    for (auto& v : r.a) v = v.derivative();
    return r;
}

Mat<TSeries> mul_t_pow(const Mat<TSeries>& m, int k) {
    const SeriesRing* S = m.ring();
    TSeries t = series_t(S, k);
    Mat<TSeries> r = m;
    for (auto& v : r.a) v = v * t;
    return r;
}
}  // namespace

Mat<TSeries> nabla_apply(const Connection& c, int s, const Mat<TSeries>& X) {
    int r = (int)c.C.size();
    return mat_derivative(X) + c.C[(s % r + r) % r] * X;
}

Connection solve_connection(const Window<TSeries>& w, int Nprec,
                            const std::vector<Mat<TSeries>>* seed) {
    const SeriesRing* S = w.phi.A[0].ring();
    const ZqRing* R = S->zq;
    int r = w.r(), p = (int)R->p;

    // constant part of F: B_{s+1} = -(dA_s) psi_s / p, one division by p
    std::vector<Mat<TSeries>> psi, base(r), C(r);
    for (int s = 0; s < r; ++s) psi.push_back(w.psi(s));
    int total = 0;
    for (int s = 0; s < r; ++s) {
        Mat<TSeries> b =
            (Mat<TSeries>(S, w.phi.A[s].rows, w.phi.A[s].cols) - mat_derivative(w.phi.A[s])) *
            psi[s];
        for (auto& v : b.a) v = v.div_int(p);
        base[(s + 1) % r] = b;
        C[(s + 1) % r] = seed ? (*seed)[(s + 1) % r]
                              : Mat<TSeries>(S, w.phi.rank(s + 1), w.phi.rank(s + 1));
        total += w.phi.rank(s);
    }

    Connection out;
    int maxit = std::max((S->T + p - 2) / (p - 1), Nprec * r * total);
    for (int it = 0; it < maxit; ++it) {
        // Jacobi update C' = base + t^{p-1} A tau(C) psi
        std::vector<Mat<TSeries>> next(r);
        for (int s = 0; s < r; ++s)
            next[(s + 1) % r] =
                base[(s + 1) % r] + mul_t_pow(w.phi.A[s] * mat_frob(C[s]) * psi[s], p - 1);
        bool stable = true;
        for (int s = 0; s < r && stable; ++s)
            for (size_t k = 0; k < C[s].a.size() && stable; ++k)
                if (!next[s].a[k].congruent(C[s].a[k], R->Nw - 1)) stable = false;
        C = std::move(next);
        out.iterations = it + 1;
        if (stable) break;
        if (it + 1 == maxit)
            throw ring_error("solve_connection: no convergence after " + std::to_string(maxit) +
                             " iterations");
    }

    // the fixed point is a genuine connection: entries integral
    for (int s = 0; s < r; ++s)
        for (auto& v : C[s].a) {
            v = v.normalize();
            if (v.denom > 0)
                throw ring_error("solve_connection: connection matrix not integral at degree " +
                                 std::to_string(s));
        }
    out.C = std::move(C);
    (void)Nprec;
    return out;
}

int connection_residual_val(const Window<TSeries>& w, const Connection& c) {
    const SeriesRing* S = w.phi.A[0].ring();
    const ZqRing* R = S->zq;
    int r = w.r(), best = R->Nw;
    for (int s = 0; s < r; ++s) {
        Mat<TSeries> res = mat_derivative(w.phi.A[s]) + c.C[(s + 1) % r] * w.phi.A[s] -
                           mul_t_pow(scalar_mul(series_from_zq(S, R->one().mul_pk(1)),
                                                w.phi.A[s] * mat_frob(c.C[s])),
                                     (int)R->p - 1);
        for (auto& v : res.a)
            if (!v.is_zero()) best = std::min(best, v.gauss_val());
    }
    return best;
}

bool connection_nilpotent(const Window<TSeries>& w, const Connection& c) {
    const SeriesRing* S = w.phi.A[0].ring();
    const ZqRing* R = S->zq;
    int r = w.r();
    for (int s = 0; s < r; ++s) {
        Mat<TSeries> X = Mat<TSeries>::identity(S, w.phi.rank(s));
        for (int k = 0; k < (int)R->p; ++k) X = nabla_apply(c, s, X);
        // membership in A phi(M) at degree s: p^{-1} psi_{s-1} X integral
        Mat<TSeries> Y = w.psi((s - 1 + r) % r) * X;
        for (auto& v : Y.a)
            if (!FrameOps<TSeries>::divisible_p(v)) return false;
    }
    return true;
}

Mat<TSeries> dwork_theta(const Window<TSeries>& w, const Connection& c, int degree, int D) {
    const SeriesRing* S = w.phi.A[0].ring();
    const ZqRing* R = S->zq;
    int n = w.phi.rank(degree), T = S->T;

    // v_p(i!) and the unit part of i! accumulated incrementally
    int vmax = 0, vfact = 0;
    {
        int v = 0;
        for (int i = 1; i < T; ++i) {
            int m = i;
            while (m % R->p == 0) { m /= (int)R->p; ++v; }
        }
        vmax = v;
    }
    if (vmax > D)
        throw precision_error("dwork_theta: denominator budget " + std::to_string(D) +
                              " below v_p((T-1)!) = " + std::to_string(vmax));

    std::vector<Mat<Zq>> coeff;  // nabla^i |_{t=0} / (unit part of i!)
    Mat<TSeries> X = Mat<TSeries>::identity(S, n);
    Zq ufact_inv = R->one();
    for (int i = 0; i < T; ++i) {
        if (i > 0) {
            X = nabla_apply(c, degree, X);
            int m = i;
            while (m % R->p == 0) { m /= (int)R->p; ++vfact; }
            ufact_inv = ufact_inv * R->from_int(m).inv();
        }
        Mat<Zq> at0(R, n, n);
        for (size_t k = 0; k < X.a.size(); ++k)
            at0.a[k] = X.a[k].at_t0() * ufact_inv * R->one().mul_pk(vmax - vfact);
        coeff.push_back(std::move(at0));
    }
    Mat<TSeries> theta(S, n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            std::vector<Zq> a((size_t)T, R->zero());
            for (int i = 0; i < T; ++i) a[i] = coeff[i].at(u, v);
            theta.at(u, v) = TSeries(S, std::move(a), vmax).normalize();
        }
    return theta;
}

Mat<TSeries> mat_inverse_neumann(const Mat<TSeries>& m) {
    const SeriesRing* S = m.ring();
    int n = m.rows;
    Mat<TSeries> E = m - Mat<TSeries>::identity(S, n);
    Mat<TSeries> X = Mat<TSeries>::identity(S, n), term = Mat<TSeries>::identity(S, n);
    for (int k = 1; k < S->T; ++k) {
        term = term * E;
        bool zero = mat_is_zero(term);
        if (zero) break;
        if (k % 2 == 1)
            X = X - term;
        else
            X = X + term;
    }
    return X;
}

Mat<BiSeries> descent_datum(const BiRing* B, const Mat<TSeries>& U, const Mat<TSeries>& Uinv) {
    return mat_embed(B, U, 1) * mat_embed(B, Uinv, 2);
}

VelfReport check_velf(const SymStructure& S, const DeformationSequence& seq, int T, int D,
                      int Nprec) {
    const ZqRing* R = S.N.phi.A[0].ring();
    const SymSpec& s = S.spec;
    VelfReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& wit) {
        rep.checks.push_back(AxiomCheck{name, pass, pass ? "" : wit});
    };
    if (s.z % 2 != 0) throw ring_error("check_velf: N slope must be integral");

    SeriesRing Sr(R, T);
    BiRing B(R, T);
    DeformedWindow dn = deform_N(S.N, seq, &Sr);
    DeformedWindow dm = deform_M(S, seq, &Sr);
    Connection cn = solve_connection(dn.w, Nprec);
    Connection cm = solve_connection(dm.w, Nprec);
    Mat<TSeries> ThN = dwork_theta(dn.w, cn, 0, D);
    Mat<TSeries> ThM = dwork_theta(dm.w, cm, 0, D);

    // skeleton coordinates at degree 0
    SkeletonResult J = skeleton(compose_cycle(S.N.phi), s.z / 2, Nprec);
    SkeletonResult I = skeleton(compose_cycle(S.M.phi), s.a2 / 2, Nprec);
    if (!J.full || !I.full) throw ring_error("check_velf: skeletons not full over F_{p^r}");
    QMat zeta0 = sym_zeta0(S, Nprec);

    auto to_skel = [&](const Mat<TSeries>& Th, const Mat<Zq>& skel) {
        Mat<TSeries> Sm = mat_to_series(&Sr, skel);
        Mat<TSeries> U = mat_to_series(&Sr, mat_inverse_unit(skel)) * Th;
        Mat<TSeries> Uinv = mat_inverse_neumann(Th) * Sm;
        return descent_datum(&B, U, Uinv);
    };
    Mat<BiSeries> thN = to_skel(ThN, J.basis);
    Mat<BiSeries> thM = to_skel(ThM, I.basis);
    int prec = Nprec - D;

    // theta(t,t) = identity
    {
        bool ok = true;
        for (int u = 0; u < thN.rows && ok; ++u)
            for (int v = 0; v < thN.cols && ok; ++v) {
                TSeries d = thN.at(u, v).diagonal(&Sr) -
                            (u == v ? series_one(&Sr) : series_zero(&Sr));
                ok = d.is_zero() || d.gauss_val() >= prec;
            }
        add("theta-diagonal", ok, "theta(t,t) != id");
    }
    // det theta_N = 1
    {
        BiSeries d = mat_det(thN) - bi_one(&B);
        add("det-one", d.congruent(bi_zero(&B), prec), "det theta_N != 1");
    }
    // pi(theta_N) = theta_M through zeta_0
    {
        std::vector<Mat<BiSeries>> blocks;
        for (int i = 0; i < s.c; ++i) blocks.push_back(sym_matrix(thN, s.b[i]));
        QMat zinv = qmat_inverse(zeta0.num);
        // pi(g) = p^{-zinv.denom} W g Z with zeta0 = p^{-d} Z; the p^{d}
        // factors of zeta0 and its inverse cancel
        auto embed_const = [&](const Mat<Zq>& m) {
            Mat<BiSeries> r(&B, m.rows, m.cols);
            for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = bi_from_zq(&B, m.a[k]);
            return r;
        };
        Mat<BiSeries> lhs =
            embed_const(zinv.num) * block_diag(blocks) * embed_const(zeta0.num);
        BiSeries scale = bi_from_zq(&B, R->one().mul_pk(zinv.denom));
        Mat<BiSeries> rhs = thM;
        for (auto& v : rhs.a) v = scale * v;
        bool ok = true;
        for (size_t k = 0; k < lhs.a.size(); ++k) ok = ok && lhs.a[k].congruent(rhs.a[k], prec);
        add("pi-match", ok, "pi(theta_N) != theta_M");
    }
    rep.all_pass = true;
    for (auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace gsw
