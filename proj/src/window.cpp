#include "gsw/window.hpp"

namespace gsw {

Window<Zq> window_from_graded(const GradedMap<Zq>& phi) {
    int r = phi.r();
    Window<Zq> w;
    w.phi = phi;
    for (int s = 0; s < r; ++s) {
        auto [K, l] = modp_kernel_decomposition(phi.A[s]);
        // kernel condition applies to tau(x): pull back through tau
        Mat<Zq> B = K;
        for (auto& v : B.a) v = v.frob_pow(B.ring()->r - 1);
        w.B.push_back(std::move(B));
        w.l.push_back(l);
    }
    return w;
}

Window<Zq> window_from_dieudonne(const GradedMap<Zq>& phi) {
    for (int s = 0; s < phi.r(); ++s) {
        Smith sm = smith_decompose(phi.A[s]);
        for (int d : sm.d)
            if (d > 1)
                throw ring_error("window_from_dieudonne: pM not contained in phi(M) at degree " +
                                 std::to_string(s));
    }
    return window_from_graded(phi);
}

GradedMap<Zq> dieudonne_from_window(const Window<Zq>& w) {
    for (int s = 0; s < w.r(); ++s) {
        Smith sm = smith_decompose(w.phi.A[s]);
        for (int d : sm.d)
            if (d > 1) throw ring_error("dieudonne_from_window: pM not contained in phi(M)");
    }
    return w.phi;
}

Window<TSeries> window_to_series(const Window<Zq>& w, const SeriesRing* S) {
    Window<TSeries> out;
    auto lift = [&](const Mat<Zq>& m) {
        Mat<TSeries> res(S, m.rows, m.cols);
        for (size_t i = 0; i < m.a.size(); ++i) res.a[i] = series_from_zq(S, m.a[i]);
        return res;
    };
    std::vector<Mat<TSeries>> A;
    for (auto& m : w.phi.A) A.push_back(lift(m));
    out.phi = GradedMap<TSeries>(std::move(A));
    for (auto& m : w.B) out.B.push_back(lift(m));
    out.l = w.l;
    return out;
}

Window<Zq> window_at_t0(const Window<TSeries>& w) {
    Window<Zq> out;
    auto drop = [](const Mat<TSeries>& m) {
        const ZqRing* R = m.ring()->zq;
        Mat<Zq> res(R, m.rows, m.cols);
        for (size_t i = 0; i < m.a.size(); ++i) res.a[i] = m.a[i].at_t0();
        return res;
    };
    std::vector<Mat<Zq>> A;
    for (auto& m : w.phi.A) A.push_back(drop(m));
    out.phi = GradedMap<Zq>(std::move(A));
    for (auto& m : w.B) out.B.push_back(drop(m));
    out.l = w.l;
    return out;
}

}  // namespace gsw
