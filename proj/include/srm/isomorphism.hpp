#pragma once

// Brute-force labeled-permutation isomorphism for small graphs. Only needed
// by property checks that compare a graph against its shifted image, so the
// permutation search is capped at n <= 8.

#include <algorithm>
#include <numeric>
#include <vector>

#include "srm/graph.hpp"

namespace srm {

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    const int n = a.n();
    if (n > 8) throw std::invalid_argument("are_isomorphic: permutation search capped at n <= 8");

    if (edge_count(a) != edge_count(b)) return false;
    std::vector<int> da(n), db(n);
    for (int v = 1; v <= n; ++v) {
        da[v - 1] = a.degree(v);
        db[v - 1] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    const auto ea = edges(a);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v0 = 0; v0 < n && ok; ++v0) ok = da[v0] == db[perm[v0]];
        for (std::size_t k = 0; k < ea.size() && ok; ++k)
            ok = b.has_edge(perm[ea[k].first - 1] + 1, perm[ea[k].second - 1] + 1);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace srm
