#pragma once

// The Dieudonne connection nabla on a series-frame window, solved as the
// unique fixed point of the contraction F; the Dwork trivialization Theta by
// the truncated Taylor formula; the bivariate descent datum
// theta(t1,t2) = Theta(t1) Theta(t2)^{-1}; and the comparison
// pi(theta_N) = theta_M through the skeleton identification.

#include "gsw/deform.hpp"

namespace gsw {

// per-degree connection matrices: nabla on degree s acts on coordinate
// vectors f as df/dt + C[s] f
struct Connection {
    std::vector<Mat<TSeries>> C;
    int iterations = 0;
};

inline Mat<TSeries> mat_to_series(const SeriesRing* S, const Mat<Zq>& m) {
    Mat<TSeries> r(S, m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = series_from_zq(S, m.a[k]);
    return r;
}

inline Mat<BiSeries> mat_embed(const BiRing* B, const Mat<TSeries>& m, int slot) {
    Mat<BiSeries> r(B, m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = bi_embed(B, m.a[k], slot);
    return r;
}

// nabla applied columnwise: X -> dX/dt + C[s] X
Mat<TSeries> nabla_apply(const Connection& c, int s, const Mat<TSeries>& X);

// fixed-point solve of C_{s+1} A_s = -dA_s/dt + p t^{p-1} A_s tau(C_s); the
// result is integral (asserted). An optional integral seed exercises
// uniqueness. Throws ring_error on non-convergence or integrality failure.
Connection solve_connection(const Window<TSeries>& w, int Nprec,
                            const std::vector<Mat<TSeries>>* seed = nullptr);

// minimal Gauss valuation over all degrees of the defining-relation residual
// dA + C A - p t^{p-1} A tau(C); Nw when identically zero
int connection_residual_val(const Window<TSeries>& w, const Connection& c);

// nabla^p(M) contained in A phi(M) at every degree
bool connection_nilpotent(const Window<TSeries>& w, const Connection& c);

// truncated Taylor frame at the given degree: sum_i nabla^i|_{t=0} t^i / i!;
// denominators bounded by v_p((T-1)!) <= D (throws precision_error otherwise)
Mat<TSeries> dwork_theta(const Window<TSeries>& w, const Connection& c, int degree, int D);

// exact inverse of a matrix with constant term the identity (Neumann series
// in the truncated ring)
Mat<TSeries> mat_inverse_neumann(const Mat<TSeries>& m);

// theta(t1,t2)[i,j] = sum_k U(t1)[i,k] * Uinv(t2)[k,j]
Mat<BiSeries> descent_datum(const BiRing* B, const Mat<TSeries>& U, const Mat<TSeries>& Uinv);

struct VelfReport {
    bool all_pass = false;
    std::vector<AxiomCheck> checks;
};

// full pipeline on an isoclinal integral-slope instance: deform N and M,
// solve both connections, build both descent data in skeleton coordinates,
// and check theta(t,t) = id, det theta_N = 1, and pi(theta_N) = theta_M
// at congruence p^{Nprec - D}
VelfReport check_velf(const SymStructure& S, const DeformationSequence& seq, int T, int D,
                      int Nprec);

}  // namespace gsw
