// Command-line front door: builds structures, runs deformations,
// connections, Dwork frames, exterior powers, local-model checks, and
// parameter sweeps, emitting deterministic JSON reports.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error,
// 3 precision exhausted.

#include <CLI11.hpp>

#include "gsw/connection.hpp"
#include "gsw/extpow.hpp"
#include "gsw/json_io.hpp"
#include "gsw/localmodel.hpp"
#include "gsw/sweep.hpp"

using namespace gsw;

namespace {

struct Common {
    long long p = 3;
    int r = 5;
    int N = 5;       // reported p-adic precision
    int T = 9;       // t-adic truncation
    int D = 3;       // denominator budget
    unsigned long long seed = 0;
    std::string out = ".";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "prime");
    cmd->add_option("--r", c.r, "grading period / residue degree");
    cmd->add_option("--precision", c.N, "reported p-adic precision N");
    cmd->add_option("--truncation", c.T, "t-adic truncation T");
    cmd->add_option("--denominator-budget", c.D, "denominator budget D");
    cmd->add_option("--seed", c.seed, "deterministic seed");
    cmd->add_option("--out", c.out, "output directory");
}

RingParams params_of(const Common& c) {
    RingParams rp;
    rp.p = c.p;
    rp.r = c.r;
    rp.N = c.N;
    rp.T = c.T;
    rp.D = c.D;
    return rp;
}

// working precision: headroom above N for the one p-division, denominators,
// and determinant arithmetic, capped so p^Nw stays below 2^61
int working_precision(const Common& c) {
    int nw = c.N + c.D + 2;
    while (nw > c.N && 61.0 < (double)nw * std::log2((double)c.p)) --nw;
    return nw;
}

// internal certification precision: the slope guard needs headroom above the
// total slope valuation (bounded by n * a2); reports still state N
int verify_precision(const Common& c, const SymSpec& s) {
    int nw = working_precision(c);
    return std::min(nw - 2, std::max(c.N + 1, s.n * s.a2));
}

SymSpec spec_from_json(const json& j) {
    SymSpec s;
    s.c = j.at("c").get<int>();
    s.b = j.at("b").get<std::vector<int>>();
    s.z = j.at("z").get<int>();
    s.a2 = j.at("a2").get<int>();
    s.r = j.at("r").get<int>();
    s.zp = j.value("zp", -1);
    s.zpp = j.value("zpp", -1);
    return s;
}

json spec_to_json(const SymSpec& s) {
    return json{{"c", s.c},         {"b", s.b},   {"z", s.z},   {"a2", s.a2},
                {"r", s.r},         {"zp", s.zp}, {"zpp", s.zpp},
                {"f", s.f},         {"sigma", s.sigma}, {"omega", s.omega},
                {"wj", s.wj},       {"w", s.w},   {"n", s.n}};
}

struct LoadedStructure {
    Common c;
    std::unique_ptr<ZqRing> R;
    SymStructure S;
};

// deform/connection/dwork/extpow rebuild the structure deterministically
// from the spec stored in structure.json and cross-check the stored module
// operator against the rebuild
LoadedStructure load_structure(const std::string& path, const Common& cli) {
    json j = read_json(path);
    LoadedStructure L;
    L.c = cli;
    L.c.p = j.at("provenance").at("p").get<long long>();
    L.c.r = j.at("provenance").at("r").get<int>();
    L.c.N = j.at("provenance").at("N").get<int>();
    L.c.T = j.at("provenance").at("T").get<int>();
    L.c.D = j.at("provenance").at("D").get<int>();
    SymSpec s = spec_from_json(j.at("spec"));
    L.R = std::make_unique<ZqRing>(L.c.p, L.c.r, working_precision(L.c));
    L.S = build_sym(L.R.get(), s, (unsigned)j.value("raise_seed", 0));
    GradedMap<Zq> stored = zq_graded_from_json(L.R.get(), j.at("M").at("phi"));
    for (int sg = 0; sg < s.r; ++sg)
        if (!mat_is_zero(stored.at(sg) - L.S.M.phi.at(sg)))
            throw ring_error("structure file does not match its spec (stale artifact?)");
    return L;
}

int from_pass(bool all_pass) { return all_pass ? 0 : 1; }

int cmd_ring_info(const Common& c) {
    ZqRing R(c.p, c.r, working_precision(c));
    Rng rng(c.seed);
    bool laws = true;
    for (int i = 0; i < 200 && laws; ++i) {
        Zq a = random_zq(&R, rng), b = random_zq(&R, rng);
        laws = laws && ((a + b).frob() == a.frob() + b.frob());
        laws = laws && ((a * b).frob() == a.frob() * b.frob());
        laws = laws && a.frob_pow(R.r) == a;
    }
    json out{{"provenance", provenance(params_of(c), c.seed)},
             {"working_precision", R.Nw},
             {"modulus", R.modulus},
             {"tau_of_generator", zq_to_json(R.gen().frob())},
             {"tau_laws_sampled", laws}};
    write_json(c.out + "/ring.json", out);
    return from_pass(laws);
}

int cmd_sym_build(const Common& c, std::vector<int> b, int z, int a, int zp, int zpp,
                  unsigned raise_seed) {
    SymSpec s;
    s.c = (int)b.size();
    s.b = std::move(b);
    s.z = z;
    s.a2 = 2 * a;
    s.r = c.r;
    s.zp = zp;
    s.zpp = zpp;
    ZqRing R(c.p, c.r, working_precision(c));
    SymStructure S = build_sym(&R, s, raise_seed);
    SymReport rep = verify_sym(S, verify_precision(c, S.spec));
    json zeta = json::array();
    for (int sg = 0; sg < s.r; ++sg)
        zeta.push_back(json{{"num", mat_to_json(S.zeta_num[sg])}, {"cden", S.zeta_cden[sg]}});
    json out{{"provenance", provenance(params_of(c), c.seed)},
             {"raise_seed", raise_seed},
             {"spec", spec_to_json(S.spec)},
             {"N", window_to_json(S.N)},
             {"M", window_to_json(S.M)},
             {"zeta", zeta},
             {"slopes_M", json::array()},
             {"report", report_to_json(rep.checks, rep.all_pass)}};
    for (auto& f : graded_slopes_map(S.M.phi, verify_precision(c, S.spec)))
        out["slopes_M"].push_back(f.str());
    write_json(c.out + "/structure.json", out);
    write_json(c.out + "/verify_report.json",
               json{{"provenance", provenance(params_of(c), c.seed)},
                    {"report", report_to_json(rep.checks, rep.all_pass)}});
    return from_pass(rep.all_pass);
}

int cmd_deform(const Common& cli, const std::string& structure) {
    LoadedStructure L = load_structure(structure, cli);
    DeformationSequence seq = find_deformation_sequence(L.S.N, L.c.N, (int)cli.seed);
    SuffReport rep = check_suff(L.S, seq, L.c.T, verify_precision(L.c, L.S.spec));
    json flags = json::array(), evecs = json::array();
    for (int s = 0; s < L.S.spec.r; ++s) {
        flags.push_back(seq.flag[s] == DefStep::Drops ? "drops" : "congruent");
        evecs.push_back(mat_to_json(seq.e[s]));
    }
    auto fracs = [](const std::vector<Frac>& v) {
        json a = json::array();
        for (auto& f : v) a.push_back(f.str());
        return a;
    };
    json out{{"provenance", provenance(params_of(L.c), cli.seed)},
             {"flags", flags},
             {"e", evecs},
             {"special_slopes_M", fracs(rep.special_m)},
             {"generic_slopes_N", fracs(rep.generic_n)},
             {"generic_slopes_M", fracs(rep.generic_m)},
             {"report", report_to_json(rep.checks, rep.all_pass)}};
    write_json(cli.out + "/deform_report.json", out);
    return from_pass(rep.all_pass);
}

int cmd_slopes(const Common& c, const std::string& matrix_file) {
    json j = read_json(matrix_file);
    long long p = j.at("ring").at("p").get<long long>();
    int r = j.at("ring").at("r").get<int>();
    int Nw = j.at("ring").at("N").get<int>();
    ZqRing R(p, r, Nw);
    GradedMap<Zq> g = zq_graded_from_json(&R, j.at("graded"));
    Mat<Zq> cyc = compose_cycle(g);
    auto cp = char_poly(cyc);
    std::vector<long long> vals;
    for (auto& x : cp) vals.push_back(x.is_zero() ? (long long)R.Nw + 1 : x.val());
    NewtonPolygon np = newton_polygon(vals, R.Nw + 1);
    auto slopes = graded_slopes_map(g, c.N);
    json out{{"provenance", provenance(params_of(c), c.seed)},
             {"vertices", json::array()},
             {"slopes", json::array()}};
    for (auto& [i, v] : np.vertices) out["vertices"].push_back(json::array({i, v}));
    for (auto& f : slopes) out["slopes"].push_back(f.str());
    write_json(c.out + "/slopes.json", out);
    return 0;
}

int cmd_connection(const Common& cli, const std::string& structure) {
    LoadedStructure L = load_structure(structure, cli);
    SeriesRing Sr(L.R.get(), L.c.T);
    DeformationSequence seq = find_deformation_sequence(L.S.N, L.c.N, (int)cli.seed);
    DeformedWindow dn = deform_N(L.S.N, seq, &Sr);
    DeformedWindow dm = deform_M(L.S, seq, &Sr);
    json out{{"provenance", provenance(params_of(L.c), cli.seed)}};
    bool pass = true;
    for (auto [name, w] : {std::pair<const char*, const Window<TSeries>*>{"N", &dn.w},
                           {"M", &dm.w}}) {
        Connection con = solve_connection(*w, L.c.N);
        int resid = connection_residual_val(*w, con);
        bool nil = connection_nilpotent(*w, con);
        pass = pass && resid >= L.c.N - L.c.D && nil;
        json cm = json::array();
        for (auto& m : con.C) cm.push_back(mat_to_json(m));
        out[name] = json{{"iterations", con.iterations},
                         {"residual_valuation", resid},
                         {"integral", true},
                         {"nilpotent", nil},
                         {"C", cm}};
    }
    write_json(cli.out + "/connection_report.json", out);
    return from_pass(pass);
}

int cmd_dwork(const Common& cli, const std::string& structure) {
    LoadedStructure L = load_structure(structure, cli);
    DeformationSequence seq = find_deformation_sequence(L.S.N, L.c.N, (int)cli.seed);
    VelfReport rep = check_velf(L.S, seq, L.c.T, L.c.D, verify_precision(L.c, L.S.spec));
    json velf{{"det_ok", false}, {"pi_theta_ok", false}, {"diagonal_ok", false}};
    for (auto& c : rep.checks) {
        if (c.axiom == "det-one") velf["det_ok"] = c.pass;
        if (c.axiom == "pi-match") velf["pi_theta_ok"] = c.pass;
        if (c.axiom == "theta-diagonal") velf["diagonal_ok"] = c.pass;
    }
    json out{{"provenance", provenance(params_of(L.c), cli.seed)},
             {"velf", velf},
             {"report", report_to_json(rep.checks, rep.all_pass)}};
    write_json(cli.out + "/dwork_report.json", out);
    return from_pass(rep.all_pass);
}

int cmd_extpow(const Common& cli, const std::string& structure, int k) {
    LoadedStructure L = load_structure(structure, cli);
    auto tw = trivial_twist<Zq>(L.R.get(), L.c.r);
    Window<Zq> e = exterior_power(L.S.N, k, tw);
    WindowReport wrep = verify_window(e, L.c.N);
    IndepReport irep = independence_check(L.S.N, k, tw, 20, (unsigned)cli.seed + 1);
    json out{{"provenance", provenance(params_of(L.c), cli.seed)},
             {"k", k},
             {"window", window_to_json(e)},
             {"verify", report_to_json(wrep.axioms, wrep.all_pass)},
             {"independence", report_to_json(irep.checks, irep.all_pass)}};
    write_json(cli.out + "/extpow.json", out);
    return from_pass(wrep.all_pass && irep.all_pass);
}

int cmd_localmodel(const Common& c, int n, int k, int nu, int mu, int samples) {
    ChartSpec cs{n, k, nu, mu};
    ChartPresentation pr = chart_presentation(cs);
    ZqRing R(c.p, 1, c.N);
    Rng rng(c.seed);
    int disagreements = 0, rejected = 0;
    for (int i = 0; i < samples; ++i) {
        LocalPoint x = sample_chart_point(cs, &R, rng);
        MembershipResult m = membership_check(cs, x);
        if (!m.agree || !m.kernel_ok) ++disagreements;
        LocalPoint y = x;
        y.s[cs.mu - 1] = y.s[cs.mu - 1] + y.s[cs.nu - 1];
        MembershipResult mp = membership_check(cs, y);
        if (!mp.agree) ++disagreements;
        if (!mp.kernel_ok) ++rejected;
    }
    json eq = [&](const VectorEquation& e) {
        return json{{"scaled", e.scaled}, {"p_exponents", e.pexp}, {"scalar", e.scalar},
                    {"reference", e.reference}};
    }(pr.eq1);
    json out{{"provenance", provenance(params_of(c), c.seed)},
             {"chart", json{{"n", n}, {"k", k}, {"nu", nu}, {"mu", mu}}},
             {"variables", pr.variables},
             {"relation", pr.relation},
             {"eq1", eq},
             {"samples", samples},
             {"disagreements", disagreements},
             {"perturbations_rejected", rejected}};
    write_json(c.out + "/localmodel_report.json", out);
    return from_pass(disagreements == 0 && rejected == samples);
}

int cmd_sweep(const Common& c, bool inject_corrupt) {
    std::vector<SweepRow> rows = run_sweep(SweepCaps{}, 10, 13, inject_corrupt);
    json table = json::array();
    int failures = 0;
    for (auto& row : rows) {
        if (!row.pass) ++failures;
        table.push_back(json{{"p", row.p}, {"r", row.r}, {"b", row.b}, {"z", row.z},
                             {"a2", row.a2}, {"n", row.n}, {"pass", row.pass},
                             {"message", row.message}});
    }
    json out{{"provenance", provenance(params_of(c), c.seed)},
             {"instances", rows.size()},
             {"failures", failures},
             {"rows", table}};
    write_json(c.out + "/sweep.json", out);
    return from_pass(failures == 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded sigma-linear algebra workbench"};
    app.require_subcommand(1);

    Common c;
    std::vector<int> b{1};
    int z = 2, a = 2, zp = -1, zpp = -1, k = 2;
    unsigned raise_seed = 0;
    int lm_n = 2, lm_k = 1, lm_nu = 1, lm_mu = 2, samples = 200;
    std::string structure = "structure.json", matrix_file;
    bool inject_corrupt = false;

    auto* ring = app.add_subcommand("ring-info", "ring parameters and sampled tau laws");
    add_common(ring, c);
    auto* sym = app.add_subcommand("sym-build", "build and verify the Sym-structure");
    add_common(sym, c);
    sym->add_option("--b", b, "symmetric-power block sizes");
    sym->add_option("--z", z, "twist slope pair total");
    sym->add_option("--a", a, "target isoclinal slope (a2 = 2a)");
    sym->add_option("--zp", zp, "override: first N slope (doubled)");
    sym->add_option("--zpp", zpp, "override: second N slope (doubled)");
    sym->add_option("--raise-seed", raise_seed, "ladder raise-order seed");
    auto* def = app.add_subcommand("deform", "sufficient deformation and generic slopes");
    add_common(def, c);
    def->add_option("--structure", structure, "structure.json from sym-build");
    auto* slo = app.add_subcommand("slopes", "Newton polygon of a graded map file");
    add_common(slo, c);
    slo->add_option("--matrix", matrix_file, "graded map JSON file")->required();
    auto* con = app.add_subcommand("connection", "solve the differential structure");
    add_common(con, c);
    con->add_option("--structure", structure, "structure.json from sym-build");
    auto* dwo = app.add_subcommand("dwork", "Taylor frame, descent datum, comparison");
    add_common(dwo, c);
    dwo->add_option("--structure", structure, "structure.json from sym-build");
    auto* ext = app.add_subcommand("extpow", "exterior power of the rank-2 window");
    add_common(ext, c);
    ext->add_option("--structure", structure, "structure.json from sym-build");
    ext->add_option("--k", k, "exterior power degree");
    auto* loc = app.add_subcommand("localmodel", "chart presentation and membership");
    add_common(loc, c);
    loc->add_option("--n", lm_n, "ambient rank");
    loc->add_option("--k", lm_k, "decomposition size");
    loc->add_option("--nu", lm_nu, "s-pivot index");
    loc->add_option("--mu", lm_mu, "t-pivot index");
    loc->add_option("--samples", samples, "sample count");
    auto* swp = app.add_subcommand("sweep", "verify every feasible spec within caps");
    add_common(swp, c);
    swp->add_flag("--inject-corrupt", inject_corrupt, "tamper with one instance (self-test)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ring->parsed()) return cmd_ring_info(c);
        if (sym->parsed()) return cmd_sym_build(c, b, z, a, zp, zpp, raise_seed);
        if (def->parsed()) return cmd_deform(c, structure);
        if (slo->parsed()) return cmd_slopes(c, matrix_file);
        if (con->parsed()) return cmd_connection(c, structure);
        if (dwo->parsed()) return cmd_dwork(c, structure);
        if (ext->parsed()) return cmd_extpow(c, structure, k);
        if (loc->parsed()) return cmd_localmodel(c, lm_n, lm_k, lm_nu, lm_mu, samples);
        if (swp->parsed()) return cmd_sweep(c, inject_corrupt);
    } catch (const precision_error& e) {
        json err{{"error", "precision"}, {"what", e.what()}};
        fprintf(stderr, "%s\n", err.dump().c_str());
        return 3;
    } catch (const std::exception& e) {
        json err{{"error", "input"}, {"what", e.what()}};
        fprintf(stderr, "%s\n", err.dump().c_str());
        return 2;
    }
    return 2;
}
