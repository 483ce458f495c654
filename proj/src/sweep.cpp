#include "gsw/sweep.hpp"

namespace gsw {

namespace {
// non-increasing b vectors of length c with entries 0..bmax
void b_vectors(int c, int bmax, int lead, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == c) {
        out.push_back(cur);
        return;
    }
    for (int b = lead; b >= 0; --b) {
        cur.push_back(b);
        b_vectors(c, bmax, b, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::pair<long long, SymSpec>> enumerate_feasible(const SweepCaps& caps) {
    std::vector<std::pair<long long, SymSpec>> out;
    for (long long p : caps.primes)
        for (int c = 1; c <= caps.cmax; ++c) {
            std::vector<std::vector<int>> bs;
            std::vector<int> cur;
            b_vectors(c, caps.bmax, caps.bmax, cur, bs);
            for (auto& b : bs) {
                int n = 0;
                for (int bi : b) n += bi + 1;
                if (n > caps.nmax) continue;
                for (int z = 1; z <= caps.zmax; ++z)
                    for (int a = 1; a <= caps.amax; ++a)
                        for (int r = 2; r <= caps.rmax; ++r) {
                            SymSpec s;
                            s.c = c;
                            s.b = b;
                            s.z = z;
                            s.a2 = 2 * a;
                            s.r = r;
                            try {
                                out.emplace_back(p, choose_parameters(s));
                            } catch (const ring_error&) {
                                // infeasible combination; skip
                            }
                        }
            }
        }
    return out;
}

std::vector<SweepRow> run_sweep(const SweepCaps& caps, int N, int Nw, bool inject_corrupt) {
    std::vector<SweepRow> rows;
    for (auto& [p, spec] : enumerate_feasible(caps)) {
        SweepRow row;
        row.p = p;
        row.r = spec.r;
        row.b = spec.b;
        row.z = spec.z;
        row.a2 = spec.a2;
        row.n = spec.n;
        try {
            ZqRing R(p, spec.r, Nw);
            SymStructure S = build_sym(&R, spec);
            if (inject_corrupt && rows.empty())
                S.M.phi.at(0).at(0, 0) += R.one();
            SymReport rep = verify_sym(S, N);
            row.pass = rep.all_pass;
            if (!rep.all_pass)
                for (auto& c : rep.checks)
                    if (!c.pass) row.message += c.axiom + ": " + c.witness + "; ";
        } catch (const std::exception& e) {
            row.pass = false;
            row.message = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gsw
