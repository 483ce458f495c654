#include "gsw/json_io.hpp"

#include <fstream>

#ifndef GSW_GIT_DESCRIBE
#define GSW_GIT_DESCRIBE "unknown"
#endif

namespace gsw {

json zq_to_json(const Zq& x) { return json(x.c); }

Zq zq_from_json(const ZqRing* R, const json& j) {
    std::vector<u64> c = j.get<std::vector<u64>>();
    if ((int)c.size() != R->r) throw ring_error("zq_from_json: wrong coordinate count");
    for (u64 v : c)
        if (v >= R->pNw) throw ring_error("zq_from_json: residue out of range");
    return Zq(R, std::move(c));
}

json series_to_json(const TSeries& x) {
    json terms = json::array();
    for (auto& c : x.a) terms.push_back(zq_to_json(c));
    return json{{"denom_exp", x.denom}, {"terms", terms}};
}

TSeries series_from_json(const SeriesRing* S, const json& j) {
    std::vector<Zq> a;
    for (auto& t : j.at("terms")) a.push_back(zq_from_json(S->zq, t));
    if ((int)a.size() != S->T) throw ring_error("series_from_json: wrong term count");
    return TSeries(S, std::move(a), j.at("denom_exp").get<int>());
}

template <>
json mat_to_json(const Mat<Zq>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(zq_to_json(m.at(i, j2)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

template <>
json mat_to_json(const Mat<TSeries>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(series_to_json(m.at(i, j2)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

Mat<Zq> zq_mat_from_json(const ZqRing* R, const json& j) {
    Mat<Zq> m(R, j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& e = j.at("entries");
    for (int i = 0; i < m.rows; ++i)
        for (int j2 = 0; j2 < m.cols; ++j2) m.at(i, j2) = zq_from_json(R, e.at(i).at(j2));
    return m;
}

Mat<TSeries> series_mat_from_json(const SeriesRing* S, const json& j) {
    Mat<TSeries> m(S, j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& e = j.at("entries");
    for (int i = 0; i < m.rows; ++i)
        for (int j2 = 0; j2 < m.cols; ++j2) m.at(i, j2) = series_from_json(S, e.at(i).at(j2));
    return m;
}

template <class S>
json graded_to_json(const GradedMap<S>& g) {
    json ranks = json::array(), mats = json::array();
    bool quasi = false;
    for (int s = 0; s < g.r(); ++s) {
        ranks.push_back(g.rank(s));
        mats.push_back(mat_to_json(g.A[s]));
        quasi = quasi || g.denom[s] != 0;
    }
    json out{{"ranks", ranks}, {"matrices", mats}, {"quasi", quasi}};
    if (quasi) out["denoms"] = g.denom;
    return out;
}
template json graded_to_json(const GradedMap<Zq>&);
template json graded_to_json(const GradedMap<TSeries>&);

GradedMap<Zq> zq_graded_from_json(const ZqRing* R, const json& j) {
    std::vector<Mat<Zq>> mats;
    for (auto& m : j.at("matrices")) mats.push_back(zq_mat_from_json(R, m));
    GradedMap<Zq> g(std::move(mats));
    if (j.value("quasi", false)) g.denom = j.at("denoms").get<std::vector<int>>();
    return g;
}

template <class S>
json window_to_json(const Window<S>& w) {
    json basis = json::array();
    for (auto& b : w.B) basis.push_back(mat_to_json(b));
    return json{{"phi", graded_to_json(w.phi)}, {"basis", basis}, {"l", w.l}};
}
template json window_to_json(const Window<Zq>&);
template json window_to_json(const Window<TSeries>&);

Window<Zq> zq_window_from_json(const ZqRing* R, const json& j) {
    Window<Zq> w;
    w.phi = zq_graded_from_json(R, j.at("phi"));
    for (auto& b : j.at("basis")) w.B.push_back(zq_mat_from_json(R, b));
    w.l = j.at("l").get<std::vector<int>>();
    return w;
}

json report_to_json(const std::vector<AxiomCheck>& checks, bool all_pass) {
    json arr = json::array();
    for (auto& c : checks)
        arr.push_back(json{{"axiom", c.axiom}, {"pass", c.pass}, {"witness", c.witness}});
    return json{{"all_pass", all_pass}, {"checks", arr}};
}

json provenance(const RingParams& rp, unsigned long long seed) {
    return json{{"p", rp.p},       {"r", rp.r},       {"N", rp.N},
                {"T", rp.T},       {"D", rp.D},       {"seed", seed},
                {"git-describe", GSW_GIT_DESCRIBE}};
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ring_error("write_json: cannot open " + path);
    f << j.dump(2) << "\n";
}

json read_json(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ring_error("read_json: cannot open " + path);
    return json::parse(f);
}

}  // namespace gsw
