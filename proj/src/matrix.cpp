#include "gsw/matrix.hpp"

namespace gsw {

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> k_monomials(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    // exponent of variable 0 descending first: recurse greedily
    std::function<void(int, int)> rec = [&](int v, int rem) {
        if (v == n - 1) {
            cur[v] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[v] = e;
            rec(v + 1, rem - e);
        }
    };
    if (n > 0) rec(0, k);
    return out;
}

}  // namespace gsw
