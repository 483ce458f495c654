#pragma once

// One-parameter deformations over the series frame: deformation sequences
// e_sigma on the rank-2 module N, the unipotent twists u_sigma = 1 + t v_sigma,
// the induced deformation of M through zeta, and the verifier for the
// sufficiency lemma (special fibre unchanged, nilpotence, generic slopes
// {0, z} for N-tilde and the arithmetic progressions for M-tilde).

#include "gsw/sym.hpp"

namespace gsw {

enum class DefStep { Congruent, Drops };

// flag[s] describes the step into degree s: either phi(e_{s-1}) = e_s mod p
// (Congruent, v_s = 0) or phi(e_{s-1}) lies in N_{s,1} (Drops, forcing a
// rank-1 quotient at s and a fresh e_s)
struct DeformationSequence {
    std::vector<Mat<Zq>> e;  // column vectors, e_s in N_s - N_{s,1}
    std::vector<DefStep> flag;

    int drops() const {
        int d = 0;
        for (auto f : flag) d += (f == DefStep::Drops);
        return d;
    }
};

// deterministic propagation search over at most rank * r seeds (the scan
// starts at seed_start, so different offsets exercise different sequences);
// throws ring_error when the preconditions fail (some slope of N vanishes or
// some quotient N/N_1 is trivial) or when no seed closes the cycle
DeformationSequence find_deformation_sequence(const Window<Zq>& N, int Nprec, int seed_start = 0);

struct DeformedWindow {
    Window<TSeries> w;
    std::vector<Mat<TSeries>> u;  // the unipotent at each target degree (identity off Sigma)
};

// phi-tilde = u_s o phi into the Drops degrees, phi elsewhere; u_s = 1 + t v_s
// with v_s the rank-one map phi(e_{s-1}) -> e_s, e_s -> 0
DeformedWindow deform_N(const Window<Zq>& N, const DeformationSequence& seq, const SeriesRing* S);

// the same unipotents pushed through zeta: u on M acts as the block sum of
// Sym^{b_i}(u) read in the zeta coordinates (integral by (S.4))
DeformedWindow deform_M(const SymStructure& S, const DeformationSequence& seq, const SeriesRing* Sr);

struct SuffReport {
    bool all_pass = false;
    std::vector<AxiomCheck> checks;
    std::vector<Frac> special_m, generic_n, generic_m;
};

// verifies, at truncation T and at 2T (throws precision_error when the two
// disagree): generic slopes {0,z} for N-tilde, the multiset
// {z_i + (b_i - b) z} for M-tilde, the window axioms including nilpotence
// for M-tilde, and that t = 0 recovers the special fibre exactly
SuffReport check_suff(const SymStructure& S, const DeformationSequence& seq, int T, int Nprec);

}  // namespace gsw
