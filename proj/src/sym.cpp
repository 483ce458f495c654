#include "gsw/sym.hpp"

#include <algorithm>
#include <numeric>

namespace gsw {

bool SymSpec::in_sigma(int s) const {
    int m = (s % r + r) % r;
    return std::find(sigma.begin(), sigma.end(), m) != sigma.end();
}

bool SymSpec::in_omega(int s) const {
    int m = (s % r + r) % r;
    return std::find(omega.begin(), omega.end(), m) != omega.end();
}

int SymSpec::interval_of(int s) const {
    int m = (s % r + r) % r;
    for (int j = z - 1; j >= 0; --j)
        if (m >= sigma[j]) return j;
    return z - 1;  // wrap-around: degrees before sigma[0] belong to the last interval
}

SymSpec choose_parameters(SymSpec s) {
    if (s.c < 1 || (int)s.b.size() != s.c) throw ring_error("spec: need c >= 1 block sizes");
    if (s.z < 1 || s.a2 < 1 || s.r < 1) throw ring_error("spec: z, a, r must be positive");
    for (int bi : s.b)
        if (bi < 0) throw ring_error("spec: b_i must be non-negative");
    s.n = 0;
    for (int bi : s.b) s.n += 1 + bi;
    if ((long long)s.n * s.a2 >= 2LL * s.r) throw ring_error("spec: n < r/a violated");
    for (int bi : s.b)
        if (bi * s.z > s.a2) throw ring_error("spec: max b_i <= 2a/z violated");
    if (s.z % 2 == 0) {
        if (s.a2 % 2 != 0) throw ring_error("spec: a must be an integer for even z");
    } else {
        for (int bi : s.b)
            if ((s.a2 - bi) % 2 != 0)
                throw ring_error("spec: 2a and all b_i must share parity for odd z");
    }
    if (s.zp >= 0 || s.zpp >= 0) {
        if (s.zp < 0 || s.zpp < 0 || s.zp + s.zpp != s.z)
            throw ring_error("spec: slope pair must satisfy zp + zpp = z");
    }
    // (I): f_{i,j} >= 0 with row sum z_i = a - b_i z / 2; balanced, larger first
    if (s.f.empty()) {
        s.f.assign(s.c, std::vector<int>(s.z, 0));
        for (int i = 0; i < s.c; ++i) {
            int zi = s.zi(i), base = zi / s.z, rem = zi % s.z;
            for (int j = 0; j < s.z; ++j) s.f[i][j] = base + (j < rem ? 1 : 0);
        }
    } else {
        if ((int)s.f.size() != s.c) throw ring_error("spec: f must have c rows");
        for (int i = 0; i < s.c; ++i) {
            if ((int)s.f[i].size() != s.z) throw ring_error("spec: f rows must have z entries");
            int sum = 0;
            for (int v : s.f[i]) {
                if (v < 0) throw ring_error("spec: f entries must be non-negative");
                sum += v;
            }
            if (sum != s.zi(i)) throw ring_error("spec: row i of f must sum to a - b_i z/2");
        }
    }
    s.wj.assign(s.z, 0);
    s.w = 0;
    for (int j = 0; j < s.z; ++j) {
        int acc = 0;
        for (int i = 0; i < s.c; ++i) acc += (s.b[i] + 1) * (s.b[i] + 2 * s.f[i][j]);
        s.wj[j] = acc / 2;
        s.w += s.wj[j];
    }
    if (2 * s.w != s.a2 * s.n) throw ring_error("spec: internal w != a n");
    if (s.w >= s.r) throw ring_error("spec: Card(Omega) = a n < r violated");
    // (II): distinguished degrees; even spacing first, then proportional to w_j
    auto lengths_ok = [&](const std::vector<int>& L) {
        for (int j = 0; j < s.z; ++j)
            if (L[j] < s.wj[j]) return false;
        return true;
    };
    if (s.sigma.empty()) {
        std::vector<int> L(s.z, s.r / s.z);
        for (int j = 0; j < s.r % s.z; ++j) L[j]++;
        if (!lengths_ok(L)) {
            // proportional retry: w_j plus the slack split by largest share
            L = s.wj;
            int slack = s.r - s.w;
            for (int j = 0; slack > 0; j = (j + 1) % s.z) {
                L[j]++;
                --slack;
            }
        }
        if (!lengths_ok(L)) throw ring_error("spec: intervals cannot host their Omega quotas");
        s.sigma.assign(s.z, 0);
        for (int j = 1; j < s.z; ++j) s.sigma[j] = s.sigma[j - 1] + L[j - 1];
    } else {
        if ((int)s.sigma.size() != s.z) throw ring_error("spec: sigma must have z entries");
        for (int j = 0; j < s.z; ++j) {
            if (s.sigma[j] < 0 || s.sigma[j] >= s.r) throw ring_error("spec: sigma out of range");
            if (j > 0 && s.sigma[j] <= s.sigma[j - 1]) throw ring_error("spec: sigma not increasing");
        }
        std::vector<int> L(s.z);
        for (int j = 0; j < s.z; ++j)
            L[j] = (j + 1 < s.z ? s.sigma[j + 1] : s.sigma[0] + s.r) - s.sigma[j];
        if (!lengths_ok(L)) throw ring_error("spec: provided sigma intervals too short");
    }
    // Omega: greedy left-to-right inside each interval
    if (s.omega.empty()) {
        for (int j = 0; j < s.z; ++j)
            for (int k = 0; k < s.wj[j]; ++k) s.omega.push_back((s.sigma[j] + k) % s.r);
        std::sort(s.omega.begin(), s.omega.end());
    } else {
        std::sort(s.omega.begin(), s.omega.end());
        if ((int)s.omega.size() != s.w) throw ring_error("spec: Omega must have w elements");
        std::vector<int> cnt(s.z, 0);
        for (int m : s.omega) {
            if (m < 0 || m >= s.r) throw ring_error("spec: Omega out of range");
            cnt[s.interval_of(m)]++;
        }
        for (int j = 0; j < s.z; ++j)
            if (cnt[j] != s.wj[j]) throw ring_error("spec: Omega interval count != w_j");
    }
    return s;
}

Window<Zq> build_N(const ZqRing* R, const SymSpec& s) {
    std::vector<Mat<Zq>> A(s.r, Mat<Zq>::identity(R, 2));
    int placed = 0;
    for (int j = 0; j < s.z; ++j) {
        Mat<Zq> m(R, 2, 2);
        if (s.zp < 0) {
            // isoclinal default: swap with p
            m.at(0, 1) = R->one();
            m.at(1, 0) = R->one().mul_pk(1);
        } else if (placed < s.zp) {
            m.at(0, 0) = R->one().mul_pk(1);
            m.at(1, 1) = R->one();
        } else {
            m.at(0, 0) = R->one();
            m.at(1, 1) = R->one().mul_pk(1);
        }
        ++placed;
        A[s.sigma[j]] = m;
    }
    return window_from_graded(GradedMap<Zq>(std::move(A)));
}

GradedMap<Zq> build_Ni(const ZqRing* R, const SymSpec& s, int i) {
    std::vector<Mat<Zq>> A(s.r, Mat<Zq>::identity(R, 1));
    for (int j = 0; j < s.z; ++j) A[s.sigma[j]].at(0, 0) = R->one().mul_pk(s.f[i][j]);
    return GradedMap<Zq>(std::move(A));
}

GradedMap<Zq> ambient_map(const ZqRing* R, const SymSpec& s, const Window<Zq>& N) {
    std::vector<Mat<Zq>> A;
    for (int sg = 0; sg < s.r; ++sg) {
        std::vector<Mat<Zq>> blocks;
        for (int i = 0; i < s.c; ++i) {
            Mat<Zq> blk = sym_matrix(N.phi.A[sg], s.b[i]);
            if (s.in_sigma(sg)) {
                int j = s.interval_of(sg);
                blk = scalar_mul(R->one().mul_pk(s.f[i][j]), blk);
            }
            blocks.push_back(std::move(blk));
        }
        A.push_back(block_diag(blocks));
    }
    return GradedMap<Zq>(std::move(A));
}

namespace {
// global column index of the monomial with L-exponent b in block i
int col_of(const SymSpec& s, int i, int b) {
    int off = 0;
    for (int i2 = 0; i2 < i; ++i2) off += 1 + s.b[i2];
    return off + (s.b[i] - b);
}

// monomial-basis matrix at a distinguished degree: blockwise Sym of the
// normal decomposition of N there
Mat<Zq> restart_basis(const ZqRing* R, const SymSpec& s, const Window<Zq>& N, int sg) {
    std::vector<Mat<Zq>> blocks;
    for (int i = 0; i < s.c; ++i) blocks.push_back(sym_matrix(N.b_at(sg), s.b[i]));
    (void)R;
    return block_diag(blocks);
}
}  // namespace

SymStructure build_sym(const ZqRing* R, const SymSpec& spec0, std::uint64_t raise_seed) {
    SymSpec s = choose_parameters(spec0);
    SymStructure S;
    S.spec = s;
    S.N = build_N(R, s);
    for (int i = 0; i < s.c; ++i) S.Ni.push_back(build_Ni(R, s, i));
    S.ambient = ambient_map(R, s, S.N);
    for (int j = 0; j < s.z; ++j)
        if (S.N.l_at(s.sigma[j]) != 1)
            throw ring_error("build_sym: N has no rank-1 drop at a distinguished degree");

    int n = s.n;
    Rng rng(raise_seed);
    std::vector<Mat<Zq>> Znum(s.r + 1, Mat<Zq>(R, n, n));
    std::vector<std::vector<int>> eprof(s.r + 1, std::vector<int>(n, 0));
    Znum[0] = restart_basis(R, s, S.N, 0);
    int raise_count = 0;

    auto legal = [&](const std::vector<int>& e, int i, int b, int j) {
        int c0 = col_of(s, i, b);
        if (e[c0] + 1 > b + s.f[i][j]) return false;
        if (b < s.b[i] && !(e[c0] < e[col_of(s, i, b + 1)])) return false;
        if (b > 0 && !(e[c0] == e[col_of(s, i, b - 1)])) return false;
        return true;
    };

    for (int sg = 1; sg <= s.r; ++sg) {
        int prev = sg - 1;
        std::vector<int> e = eprof[prev];
        if (s.in_omega(prev)) {
            int j = s.interval_of(prev);
            // collect legal raises
            std::vector<std::pair<int, int>> cand;
            for (int io = 0; io < s.c; ++io) {
                int i = (raise_count + io) % s.c;
                for (int b = s.b[i]; b >= 0; --b)
                    if (legal(e, i, b, j)) cand.emplace_back(i, b);
            }
            if (cand.empty()) {
                std::string prof;
                for (int v : e) prof += std::to_string(v) + " ";
                throw ring_error("build_sym: ladder stuck at degree " + std::to_string(prev) +
                                 " with profile " + prof);
            }
            auto [ri, rb] = raise_seed ? cand[rng.next(cand.size())] : cand.front();
            e[col_of(s, ri, rb)]++;
            ++raise_count;
        }
        Mat<Zq> Y = S.ambient.A[prev % s.r] * mat_frob(Znum[prev]);
        bool boundary = (sg == s.r) || s.in_sigma(sg);
        if (boundary) {
            int j = s.interval_of(prev);
            // terminal profile must be e_{b,i} = b + f_{i,j}
            for (int i = 0; i < s.c; ++i)
                for (int b = 0; b <= s.b[i]; ++b)
                    if (e[col_of(s, i, b)] != b + s.f[i][j])
                        throw ring_error("build_sym: ladder did not reach terminal profile at degree " +
                                         std::to_string(sg % s.r));
            // consistency: phi^k of the rescaled lattice is the full lattice
            Mat<Zq> full = Y;
            for (int v = 0; v < n; ++v)
                for (int u = 0; u < n; ++u) {
                    if (!full.at(u, v).divisible_pk(e[v]))
                        throw ring_error("build_sym: closure not integral at degree " +
                                         std::to_string(sg % s.r));
                    full.at(u, v) = full.at(u, v).div_exact_p(e[v]);
                }
            if (mat_det(full).val() != 0)
                throw ring_error("build_sym: closure is not the full product lattice at degree " +
                                 std::to_string(sg % s.r));
            Znum[sg] = (sg == s.r) ? Znum[0] : restart_basis(R, s, S.N, sg);
            eprof[sg].assign(n, 0);
        } else {
            Znum[sg] = Y;
            eprof[sg] = e;
        }
    }

    // phi on M in the ladder bases: A^M_s = basis(s+1)^{-1} Phi_s tau(basis(s))
    std::vector<Mat<Zq>> AM;
    for (int sg = 0; sg < s.r; ++sg) {
        Mat<Zq> Y = S.ambient.A[sg] * mat_frob(Znum[sg]);
        QMat Wi = qmat_inverse(Znum[sg + 1]);
        Mat<Zq> num = Wi.num * Y;
        Mat<Zq> res(R, n, n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                int g = eprof[sg + 1][u] - Wi.denom - eprof[sg][v];
                Zq x = num.at(u, v);
                if (g >= 0)
                    res.at(u, v) = x.mul_pk(g);
                else {
                    if (!x.divisible_pk(-g))
                        throw ring_error("build_sym: module map not integral at degree " +
                                         std::to_string(sg));
                    res.at(u, v) = x.div_exact_p(-g);
                }
            }
        AM.push_back(std::move(res));
    }
    S.M = window_from_graded(GradedMap<Zq>(std::move(AM)));
    for (int sg = 0; sg < s.r; ++sg) {
        S.zeta_num.push_back(Znum[sg]);
        S.zeta_cden.push_back(eprof[sg]);
        S.ladder.push_back(eprof[sg]);
    }
    return S;
}

std::vector<Frac> lemma_slope_multiset(const SymSpec& s, int zp2, int zpp2) {
    std::vector<Frac> out;
    for (int i = 0; i < s.c; ++i)
        for (int b = 0; b <= s.b[i]; ++b)
            out.push_back(Frac(2LL * s.zi(i) + (long long)b * zp2 + (long long)(s.b[i] - b) * zpp2, 2));
    std::sort(out.begin(), out.end());
    return out;
}

SymReport verify_sym(const SymStructure& S, int N) {
    SymReport rep;
    const SymSpec& s = S.spec;
    const ZqRing* R = S.N.phi.A[0].ring();
    auto add = [&](const std::string& name, bool pass, const std::string& wit) {
        rep.checks.push_back(AxiomCheck{name, pass, pass ? "" : wit});
    };

    // rank/dim tables
    {
        bool ok = true;
        std::string wit;
        for (int sg = 0; sg < s.r && ok; ++sg) {
            if (S.N.phi.rank(sg) != 2) { ok = false; wit = "N rank != 2"; }
            int dimN = 2 - S.N.l[sg];
            int want = s.in_sigma(sg) ? 1 : 2;
            if (dimN != want) { ok = false; wit = "N dim table fails at degree " + std::to_string(sg); }
            if (S.M.phi.rank(sg) != s.n) { ok = false; wit = "M rank != n"; }
            int dimM = s.n - S.M.l[sg];
            int wantM = s.in_omega(sg) ? s.n - 1 : s.n;
            if (dimM != wantM) { ok = false; wit = "M dim table fails at degree " + std::to_string(sg); }
        }
        add("dim-tables", ok, wit);
    }
    // S.1: N is a rank-2 graded Dieudonne window (W.1-W.3, pM in phiM)
    {
        bool ok = true;
        std::string wit;
        WindowReport wr = verify_window(S.N, N);
        for (int k = 0; k < 3; ++k)
            if (!wr.axioms[k].pass) { ok = false; wit = wr.axioms[k].witness; }
        for (int sg = 0; sg < s.r && ok; ++sg) {
            Smith sm = smith_decompose(S.N.phi.A[sg]);
            for (int d : sm.d)
                if (d > 1) { ok = false; wit = "pN not in phi(N)"; }
        }
        add("S.1", ok, wit);
    }
    // S.2: twists are effective of slope z_i
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < s.c && ok; ++i) {
            Mat<Zq> cyc = compose_cycle(S.Ni[i]);
            if (cyc.at(0, 0).val() != s.zi(i)) {
                ok = false;
                wit = "twist " + std::to_string(i) + " has wrong slope";
            }
        }
        add("S.2", ok, wit);
    }
    // S.3: zeta intertwines phi_M with the ambient phi (quasi-isogeny)
    {
        bool ok = true;
        std::string wit;
        int emax = 0;
        for (auto& e : S.zeta_cden)
            for (int v : e) emax = std::max(emax, v);
        for (int sg = 0; sg < s.r && ok; ++sg) {
            int nx = (sg + 1) % s.r;
            Mat<Zq> lhs = S.ambient.A[sg] * mat_frob(S.zeta_num[sg]);
            for (int v = 0; v < s.n; ++v)
                for (int u = 0; u < s.n; ++u)
                    lhs.at(u, v) = lhs.at(u, v).mul_pk(emax - S.zeta_cden[sg][v]);
            Mat<Zq> zs = S.zeta_num[nx];
            for (int v = 0; v < s.n; ++v)
                for (int u = 0; u < s.n; ++u)
                    zs.at(u, v) = zs.at(u, v).mul_pk(emax - S.zeta_cden[nx][v]);
            Mat<Zq> rhs = zs * S.M.phi.A[sg];
            for (size_t k = 0; k < lhs.a.size() && ok; ++k)
                if (!lhs.a[k].congruent(rhs.a[k], N)) {
                    ok = false;
                    wit = "zeta does not intertwine at degree " + std::to_string(sg);
                }
        }
        add("S.3", ok, wit);
    }
    // S.4: at every degree with rank N/N_1 = 1 the image is the full lattice
    {
        bool ok = true;
        std::string wit;
        for (int sg = 0; sg < s.r && ok; ++sg) {
            if (S.N.l[sg] != 1) continue;
            if (!s.in_sigma(sg)) { ok = false; wit = "rank-1 drop off Sigma"; continue; }
            for (int v : S.zeta_cden[sg])
                if (v != 0) { ok = false; wit = "zeta not integral at degree " + std::to_string(sg); }
            if (ok && mat_det(S.zeta_num[sg]).val() != 0) {
                ok = false;
                wit = "zeta(M) is not the full product lattice at degree " + std::to_string(sg);
            }
        }
        add("S.4", ok, wit);
    }
    // slope multiset of M against the symmetric-power prediction
    {
        bool ok = true;
        std::string wit;
        int zp2 = s.zp < 0 ? s.z : 2 * s.zp;
        int zpp2 = s.zp < 0 ? s.z : 2 * s.zpp;
        try {
            auto got = graded_slopes_map(S.M.phi, N);
            std::sort(got.begin(), got.end());
            auto want = lemma_slope_multiset(s, zp2, zpp2);
            if (got != want) {
                ok = false;
                wit = "slope multiset mismatch";
            }
            // N itself realizes the pair
            auto gotN = graded_slopes_map(S.N.phi, N);
            std::sort(gotN.begin(), gotN.end());
            std::vector<Frac> wantN{Frac(zp2, 2), Frac(zpp2, 2)};
            std::sort(wantN.begin(), wantN.end());
            if (gotN != wantN) {
                ok = false;
                wit = "N slope pair mismatch";
            }
        } catch (const precision_error& ex) {
            ok = false;
            wit = std::string("slopes uncertifiable: ") + ex.what();
        }
        add("slopes", ok, wit);
    }
    rep.all_pass = true;
    for (auto& cck : rep.checks) rep.all_pass = rep.all_pass && cck.pass;
    (void)R;
    return rep;
}

namespace {
QMat qmat_of_inverse(const QMat& q) {
    QMat inv = qmat_inverse(q.num);
    inv.denom -= q.denom;  // (p^{-d} A)^{-1} = p^{d} A^{-1}
    if (inv.denom < 0) {
        for (auto& v : inv.num.a) v = v.mul_pk(-inv.denom);
        inv.denom = 0;
    }
    return inv.normalized();
}
}  // namespace

QMat sym_zeta0(const SymStructure& S, int Nprec) {
    const SymSpec& s = S.spec;
    const ZqRing* R = S.N.phi.A[0].ring();
    if (s.z % 2 != 0 || s.zp >= 0)
        throw ring_error("sym_zeta0: N must be isoclinal of integral slope");
    int zN = s.z / 2, a = s.a2 / 2;
    SkeletonResult J = skeleton(compose_cycle(S.N.phi), zN, Nprec);
    if (!J.full) throw ring_error("sym_zeta0: N skeleton not full over F_{p^r}");
    SkeletonResult I = skeleton(compose_cycle(S.M.phi), a, Nprec);
    if (!I.full) throw ring_error("sym_zeta0: M skeleton not full over F_{p^r}");
    std::vector<Mat<Zq>> blocks;
    for (int i = 0; i < s.c; ++i) {
        SkeletonResult Ji = skeleton(compose_cycle(S.Ni[i]), s.zi(i), Nprec);
        if (!Ji.full) throw ring_error("sym_zeta0: twist skeleton not full");
        blocks.push_back(scalar_mul(Ji.basis.at(0, 0), sym_matrix(J.basis, s.b[i])));
    }
    QMat amb_inv = qmat_of_inverse(QMat(block_diag(blocks)));
    // zeta_0 at degree 0 is integral with zero column denominators
    QMat z0 = qmat_mul(amb_inv, QMat(S.zeta_num[0] * I.basis));
    return z0;
}

QMat sym_power_rep(const SymStructure& S, const Mat<Zq>& g, const QMat& zeta0) {
    const SymSpec& s = S.spec;
    std::vector<Mat<Zq>> blocks;
    for (int i = 0; i < s.c; ++i) blocks.push_back(sym_matrix(g, s.b[i]));
    QMat mid(block_diag(blocks));
    return qmat_mul(qmat_mul(qmat_of_inverse(zeta0), mid), zeta0);
}

}  // namespace gsw
