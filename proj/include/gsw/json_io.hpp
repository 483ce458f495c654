#pragma once

// JSON serialization for ring elements, series, matrices, graded maps,
// windows, and verification reports. Elements are arrays of r residues in
// the power basis; series are {"denom_exp", "terms"}. All dumps are
// deterministic (no timestamps), so fixed inputs give byte-identical files.

#include <json.hpp>

#include "gsw/window.hpp"

namespace gsw {

using json = nlohmann::ordered_json;

json zq_to_json(const Zq& x);
Zq zq_from_json(const ZqRing* R, const json& j);

json series_to_json(const TSeries& x);
TSeries series_from_json(const SeriesRing* S, const json& j);

template <class S>
json mat_to_json(const Mat<S>& m);
template <>
json mat_to_json(const Mat<Zq>& m);
template <>
json mat_to_json(const Mat<TSeries>& m);

Mat<Zq> zq_mat_from_json(const ZqRing* R, const json& j);
Mat<TSeries> series_mat_from_json(const SeriesRing* S, const json& j);

template <class S>
json graded_to_json(const GradedMap<S>& g);
GradedMap<Zq> zq_graded_from_json(const ZqRing* R, const json& j);

template <class S>
json window_to_json(const Window<S>& w);
Window<Zq> zq_window_from_json(const ZqRing* R, const json& j);

json report_to_json(const std::vector<AxiomCheck>& checks, bool all_pass);

// {"p","r","N","T","D","seed","git-describe"} header carried by every report
json provenance(const RingParams& rp, unsigned long long seed);

void write_json(const std::string& path, const json& j);
json read_json(const std::string& path);

}  // namespace gsw
