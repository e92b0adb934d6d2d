#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// computation paths: box complexes are enumerated straight from their
// definitions over all signed vertex subsets, ranks are taken with naive
// dense elimination, and graph isomorphism is a permutation search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "chromatopo/complex.hpp"
#include "chromatopo/graph.hpp"

namespace oracle {

using chromatopo::Graph;
using chromatopo::Z2Complex;

// A simplex as a set of (sign, graph vertex) pairs.
using Signed = std::set<std::pair<int, int>>;

inline bool cross_complete(const Graph& g, const std::vector<int>& a,
                           const std::vector<int>& b) {
    for (int u : a)
        for (int v : b)
            if (!g.adjacent(u, v)) return false;
    return true;
}

inline bool has_common_neighbor(const Graph& g, const std::vector<int>& a) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : a)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

// All non-empty simplices of B(G) (with the common-neighbor conditions) or
// B0(G) (without), enumerated over all 3^n sign patterns.
inline std::set<Signed> box_simplices(const Graph& g, bool with_cn_conditions) {
    const int n = g.vertex_count();
    std::set<Signed> out;
    std::vector<int> state(n, 0);  // 0 absent, 1 in A', 2 in A''
    for (;;) {
        std::vector<int> aprime, asecond;
        for (int v = 0; v < n; ++v) {
            if (state[v] == 1) aprime.push_back(v);
            if (state[v] == 2) asecond.push_back(v);
        }
        bool admissible = cross_complete(g, aprime, asecond);
        if (admissible && with_cn_conditions)
            admissible = has_common_neighbor(g, aprime) && has_common_neighbor(g, asecond);
        if (admissible && !(aprime.empty() && asecond.empty())) {
            Signed s;
            for (int v : aprime) s.insert({1, v});
            for (int v : asecond) s.insert({-1, v});
            out.insert(s);
        }
        int i = 0;
        while (i < n && state[i] == 2) state[i++] = 0;
        if (i == n) break;
        ++state[i];
    }
    return out;
}

inline std::set<Signed> maximal_elements(const std::set<Signed>& simplices) {
    std::set<Signed> out;
    for (const auto& s : simplices) {
        bool contained = false;
        for (const auto& t : simplices)
            if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                contained = true;
                break;
            }
        if (!contained) out.insert(s);
    }
    return out;
}

// Signed view of a box complex built by the library, for comparison.
inline std::set<Signed> signed_simplices(const Z2Complex& k, const Graph& g) {
    std::map<std::string, int> index;
    for (int v = 0; v < g.vertex_count(); ++v) index[g.label(v)] = v;
    std::set<Signed> out;
    for (int d = 0; d < k.num_dims(); ++d)
        for (const auto& simplex : k.simplices(d)) {
            Signed s;
            for (int v : simplex) {
                const std::string& l = k.label(v);
                s.insert({l[0] == '+' ? 1 : -1, index.at(l.substr(1))});
            }
            out.insert(s);
        }
    return out;
}

inline std::set<Signed> signed_facets(const Z2Complex& k, const Graph& g) {
    std::map<std::string, int> index;
    for (int v = 0; v < g.vertex_count(); ++v) index[g.label(v)] = v;
    std::set<Signed> out;
    for (const auto& facet : k.facets()) {
        Signed s;
        for (int v : facet) {
            const std::string& l = k.label(v);
            s.insert({l[0] == '+' ? 1 : -1, index.at(l.substr(1))});
        }
        out.insert(s);
    }
    return out;
}

// Naive dense GF(2) rank, independent of the bitset path.
inline int dense_gf2_rank(std::vector<std::vector<std::uint8_t>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
        ++rank;
    }
    return rank;
}

// Reduced GF(2) Betti numbers recomputed with naive dense elimination on the
// augmented boundary matrices.
inline std::vector<int> dense_betti_gf2(const Z2Complex& k) {
    const int top = k.num_dims();
    std::vector<int> ranks(top + 1, 0);
    if (top > 0) ranks[0] = 1;
    for (int d = 1; d < top; ++d) {
        const auto& level = k.simplices(d);
        const auto& prev = k.simplices(d - 1);
        std::vector<std::vector<std::uint8_t>> m(level.size(),
                                                 std::vector<std::uint8_t>(prev.size(), 0));
        for (std::size_t j = 0; j < level.size(); ++j) {
            const auto& s = level[j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto it = std::lower_bound(prev.begin(), prev.end(), face);
                m[j][it - prev.begin()] ^= 1;
            }
        }
        ranks[d] = dense_gf2_rank(std::move(m));
    }
    std::vector<int> betti(top, 0);
    for (int d = 0; d < top; ++d)
        betti[d] = static_cast<int>(k.simplices(d).size()) - ranks[d] - ranks[d + 1];
    return betti;
}

// Permutation search; feasible for the corpus sizes used in tests.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// The standard 6-vertex triangulation of the real projective plane.
inline Z2Complex projective_plane() {
    std::vector<std::string> labels{"1", "2", "3", "4", "5", "6"};
    std::vector<std::vector<int>> facets{{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                         {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
    return Z2Complex(std::move(labels), std::move(facets));
}

}  // namespace oracle
