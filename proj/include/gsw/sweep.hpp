#pragma once

// Parameter sweep over feasible constructor specs: enumerate (p, r, c, b, z,
// a) within caps, run the full structure verification on each feasible spec,
// and collect one pass/fail row per instance.

#include "gsw/sym.hpp"

namespace gsw {

struct SweepCaps {
    std::vector<long long> primes = {3, 5};
    int rmax = 8;
    int cmax = 2;
    int bmax = 2;
    int zmax = 2;
    int amax = 2;
    int nmax = 4;
};

struct SweepRow {
    long long p = 0;
    int r = 0;
    std::vector<int> b;
    int z = 0, a2 = 0, n = 0;
    bool pass = false;
    std::string message;
};

// enumerate feasible specs (those accepted by parameter selection) with the
// isoclinal default placement; b multisets are non-increasing to avoid
// duplicates
std::vector<std::pair<long long, SymSpec>> enumerate_feasible(const SweepCaps& caps);

// build + verify each instance at verification precision N over a working
// ring of precision Nw; with inject_corrupt the first instance's module
// operator is tampered with and must fail
std::vector<SweepRow> run_sweep(const SweepCaps& caps, int N, int Nw, bool inject_corrupt = false);

}  // namespace gsw
