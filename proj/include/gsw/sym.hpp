#pragma once

// Explicit Sym-structure constructor: from block data (b_i, z, a, r) build
// the rank-2 module N, the rank-1 twists N_i, and the rank-n module M cut
// out of (+)_i N_i (x) Sym^{b_i} N by the e-ladder, together with the
// identification zeta. Degrees are walked from sigma_1 = 0; inside each
// interval the lattice is rescaled one monomial at a time at the degrees
// of Omega, and at the next distinguished degree the construction is
// checked to close up onto the full product lattice.

#include "gsw/window.hpp"

namespace gsw {

struct SymSpec {
    int c = 1;
    std::vector<int> b{1};
    int z = 2;
    int a2 = 4;  // twice the target slope a (a may be a half-integer)
    int r = 5;
    // requested slope pair (zp, zpp) with zp + zpp = z; -1/-1 means the
    // isoclinal default z/2, z/2 realized by the swap matrix
    int zp = -1, zpp = -1;
    // overrides; filled deterministically by choose_parameters when empty
    std::vector<std::vector<int>> f;  // c x z, row i sums to (a2 - b_i z)/2
    std::vector<int> sigma;           // z distinguished degrees, sigma[0] = 0
    std::vector<int> omega;           // sorted, |omega ∩ interval_j| = w_j
    // computed
    std::vector<int> wj;
    int w = 0, n = 0;

    int zi(int i) const { return (a2 - b[i] * z) / 2; }
    bool in_sigma(int s) const;
    bool in_omega(int s) const;
    int interval_of(int s) const;  // j with s in [sigma_j, sigma_{j+1})
};

// validates the numerical conditions and fills f, sigma, omega, w_j;
// throws ring_error on infeasible input
SymSpec choose_parameters(SymSpec s);

// rank-2 window: identity off Sigma; at sigma_j the swap [[0,1],[p,0]]
// (isoclinal default) or diag(p,1)/diag(1,p) placements realizing (zp,zpp)
Window<Zq> build_N(const ZqRing* R, const SymSpec& s);

// rank-1 twist N_i: tau off Sigma, p^{f_{i,j}} tau at sigma_j
GradedMap<Zq> build_Ni(const ZqRing* R, const SymSpec& s, int i);

// phi on the ambient product (+)_i N_i (x) Sym^{b_i} N
GradedMap<Zq> ambient_map(const ZqRing* R, const SymSpec& s, const Window<Zq>& N);

struct SymStructure {
    SymSpec spec;
    Window<Zq> N;
    std::vector<GradedMap<Zq>> Ni;
    GradedMap<Zq> ambient;
    Window<Zq> M;
    // zeta_sigma: M-coordinates -> ambient coordinates; column j of
    // zeta_num[s] scaled by p^{-zeta_cden[s][j]}
    std::vector<Mat<Zq>> zeta_num;
    std::vector<std::vector<int>> zeta_cden;
    // ladder trace: e-profile per degree, indexed by ambient column
    std::vector<std::vector<int>> ladder;
};

// raise_seed = 0: deterministic round-robin over blocks, top monomial first;
// otherwise raises are picked uniformly among the legal ones (seeded)
SymStructure build_sym(const ZqRing* R, const SymSpec& s, std::uint64_t raise_seed = 0);

struct SymReport {
    bool all_pass = false;
    std::vector<AxiomCheck> checks;
};

// rank/dim tables, (S.1)-(S.4), and the slope multiset
// {z_i + b zp + (b_i - b) zpp : i, 0 <= b <= b_i}
SymReport verify_sym(const SymStructure& S, int N);

// expected slope multiset of M for a realized pair (zp2, zpp2) given in
// HALVES (2*zp, 2*zpp); entries are exact rationals
std::vector<Frac> lemma_slope_multiset(const SymSpec& s, int zp2, int zpp2);

// zeta at degree 0 in skeleton coordinates: I -> (+)_i J_i (x) Sym^{b_i} J,
// where I, J, J_i are the skeletons of M, N, N_i. Requires all skeletons to
// exist over F_{p^r} (throws ring_error when the base field is too small).
QMat sym_zeta0(const SymStructure& S, int Nprec);

// the representation pi: g acting on J mapped to its action on I through
// zeta0; multiplicative in g
QMat sym_power_rep(const SymStructure& S, const Mat<Zq>& g, const QMat& zeta0);

}  // namespace gsw
