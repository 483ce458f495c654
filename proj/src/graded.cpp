#include "gsw/graded.hpp"

#include <algorithm>

namespace gsw {

NewtonPolygon newton_polygon(const std::vector<long long>& vals, long long vinf) {
    std::vector<std::pair<long long, long long>> pts;
    for (size_t i = 0; i < vals.size(); ++i)
        if (vals[i] < vinf) pts.emplace_back((long long)i, vals[i]);
    // lower convex hull, left to right (monotone chain)
    std::vector<std::pair<long long, long long>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // drop b if it lies on or above segment a-p
            if ((b.second - a.second) * (p.first - a.first) >=
                (p.second - a.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return NewtonPolygon{std::move(hull)};
}

std::vector<Frac> polygon_slopes(const NewtonPolygon& np, int /*degree*/) {
    std::vector<Frac> out;
    for (size_t k = 1; k < np.vertices.size(); ++k) {
        auto [i1, v1] = np.vertices[k - 1];
        auto [i2, v2] = np.vertices[k];
        long long width = i2 - i1;
        Frac val((long long)(v1 - v2), width);  // eigenvalue valuation = -slope
        for (long long m = 0; m < width; ++m) out.push_back(val);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
std::vector<Frac> slopes_from_vals(std::vector<long long> vals, long long vinf, int n,
                                   int N, int denom_total) {
    if (denom_total != 0)
        for (int i = 0; i <= n; ++i)
            if (vals[i] < vinf) vals[i] -= (long long)denom_total * (n - i);
    NewtonPolygon np = newton_polygon(vals, vinf);
    if (np.vertices.empty() || np.vertices.front().first != 0)
        throw precision_error("slopes: constant coefficient vanishes at working precision");
    for (auto& [i, v] : np.vertices)
        if (v > N - 2)
            throw precision_error("slopes: polygon vertex valuation " + std::to_string(v) +
                                  " at index " + std::to_string(i) + " exceeds guard " +
                                  std::to_string(N - 2));
    return polygon_slopes(np, n);
}
}  // namespace

std::vector<Frac> graded_slopes(const Mat<Zq>& cycle, int N, int denom_total) {
    int n = cycle.rows;
    auto c = char_poly(cycle);
    const ZqRing* R = cycle.ring();
    std::vector<long long> vals(n + 1);
    for (int i = 0; i <= n; ++i) vals[i] = c[i].is_zero() ? (long long)R->Nw + 1 : c[i].val();
    return slopes_from_vals(std::move(vals), R->Nw + 1, n, N, denom_total);
}

std::vector<Frac> graded_slopes_series(const Mat<TSeries>& cycle, int N, int denom_total) {
    int n = cycle.rows;
    auto c = char_poly(cycle);
    const ZqRing* R = cycle.ring()->zq;
    std::vector<long long> vals(n + 1);
    for (int i = 0; i <= n; ++i)
        vals[i] = c[i].is_zero() ? (long long)R->Nw + 1 : c[i].gauss_val();
    return slopes_from_vals(std::move(vals), R->Nw + 1, n, N, denom_total);
}

SkeletonResult skeleton(const Mat<Zq>& cycle, int z, int N) {
    auto slopes = graded_slopes(cycle, N);
    for (auto& s : slopes)
        if (!(s == Frac(z, 1)))
            throw ring_error("skeleton: not isoclinal at z = " + std::to_string(z) +
                             " (found slope " + s.str() + ")");
    const ZqRing* R = cycle.ring();
    int n = cycle.rows;
    Mat<Zq> B = cycle;
    for (int i = 0; i < n; ++i) B.at(i, i) = B.at(i, i) - R->one().mul_pk(z);
    Mat<Zq> K = kernel_free(B, N - z);
    return SkeletonResult{K, K.cols == n};
}

GradedMap<Zq> dual(const GradedMap<Zq>& x) {
    std::vector<Mat<Zq>> A;
    std::vector<int> denom;
    for (int s = 0; s < x.r(); ++s) {
        QMat q = qmat_inverse(mat_transpose(x.A[s]));
        A.push_back(q.num);
        denom.push_back(q.denom - x.denom[s]);
    }
    GradedMap<Zq> res(std::move(A));
    res.denom = std::move(denom);
    return res;
}

}  // namespace gsw
