#include "chromatopo/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chromatopo/homology.hpp"
#include "chromatopo/z2tools.hpp"

namespace chromatopo {

SizeCaps parse_size_caps(const std::string& spec, SizeCaps base) {
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("size cap entry needs field=value");
        std::string field = item.substr(0, eq);
        int value = std::stoi(item.substr(eq + 1));
        if (field == "zig")
            base.zig_max_vertices = value;
        else if (field == "xind")
            base.xind_max_elements = value;
        else if (field == "cd")
            base.cd_max_ground = value;
        else if (field == "chi" || field == "omega")
            base.chromatic_max_vertices = value;
        else
            throw std::invalid_argument("unknown size cap field '" + field + "'");
    }
    return base;
}

namespace {

// Greedy coloring of the candidate set; the class count bounds the largest
// clique inside it.
int greedy_color_bound(const Graph& g, const BitVec& candidates) {
    std::vector<BitVec> classes;
    for (int v : candidates.to_indices()) {
        bool placed = false;
        for (auto& cls : classes) {
            BitVec clash = cls;
            clash.and_with(g.neighbors(v));
            if (!clash.any()) {
                cls.set(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            BitVec cls(g.vertex_count());
            cls.set(v);
            classes.push_back(std::move(cls));
        }
    }
    return static_cast<int>(classes.size());
}

void clique_rec(const Graph& g, BitVec candidates, int size, int& best) {
    if (size + greedy_color_bound(g, candidates) <= best) return;
    if (!candidates.any()) {
        best = std::max(best, size);
        return;
    }
    while (candidates.any()) {
        if (size + candidates.count() <= best) return;
        int v = candidates.first_set();
        candidates.reset(v);
        BitVec next = candidates;
        next.and_with(g.neighbors(v));
        clique_rec(g, next, size + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    BitVec all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    int best = 0;
    clique_rec(g, all, 0, best);
    return best;
}

namespace {

// DSATUR-style exact t-colorability.
bool colorable_rec(const Graph& g, int t, std::vector<int>& color, int uncolored, int max_used) {
    if (uncolored == 0) return true;
    const int n = g.vertex_count();
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        BitVec seen(t);
        for (int u : g.neighbors(v).to_indices())
            if (color[u] >= 0) seen.set(color[u]);
        int sat = seen.count();
        int deg = g.degree(v);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    BitVec forbidden(t);
    for (int u : g.neighbors(pick).to_indices())
        if (color[u] >= 0) forbidden.set(color[u]);
    // Never open more than one fresh color: canonical symmetry breaking.
    int limit = std::min(t - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
        if (forbidden.test(c)) continue;
        color[pick] = c;
        if (colorable_rec(g, t, color, uncolored - 1, std::max(max_used, c))) return true;
        color[pick] = -1;
    }
    return false;
}

}  // namespace

int chromatic_number(const Graph& g, const SizeCaps& caps) {
    const int n = g.vertex_count();
    if (n > caps.chromatic_max_vertices)
        throw SizeCapError("chromatic number: graph exceeds size cap");
    if (n == 0) return 0;
    int lb = clique_number(g);
    for (int t = std::max(lb, 1);; ++t) {
        std::vector<int> color(n, -1);
        if (colorable_rec(g, t, color, n, -1)) return t;
    }
}

namespace {

// Max |CN(B)| over vertex sets B of the given size.
int max_common_neighbors(const Graph& g, int size) {
    const int n = g.vertex_count();
    if (size > n) return 0;
    int best = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int next, BitVec cn) -> void {
        if (static_cast<int>(chosen.size()) == size) {
            best = std::max(best, cn.count());
            return;
        }
        for (int v = next; v < n; ++v) {
            BitVec cn2 = cn;
            cn2.and_with(g.neighbors(v));
            if (cn2.count() <= best && static_cast<int>(chosen.size()) + 1 == size) continue;
            chosen.push_back(v);
            self(self, v + 1, cn2);
            chosen.pop_back();
        }
    };
    BitVec full(n);
    for (int v = 0; v < n; ++v) full.set(v);
    rec(rec, 0, full);
    return best;
}

}  // namespace

int biclique_parameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw SizeCapError("biclique parameter: graph too large for exact search");
    std::vector<int> maxcn(n + 1, 0);
    for (int l = 1; l <= n; ++l) maxcn[l] = max_common_neighbors(g, l);
    int b = 1;  // n = 1 holds vacuously
    for (int cand = 2; cand <= 2 * n; ++cand) {
        bool ok = true;
        for (int l = 1; l < cand && ok; ++l)
            if (l > n || maxcn[l] < cand - l) ok = false;
        if (ok)
            b = cand;
        else
            break;
    }
    return b;
}

namespace {

bool two_colorable(int ground, const std::vector<std::vector<int>>& edges) {
    for (const auto& e : edges)
        if (e.size() == 1) return false;
    std::vector<int> color(ground, -1);
    // Backtracking with unit propagation on the not-all-equal constraints.
    auto rec = [&](auto&& self) -> bool {
        for (;;) {
            bool forced_something = false;
            for (const auto& e : edges) {
                int unassigned = -1, count_unassigned = 0, c0 = 0, c1 = 0;
                for (int v : e) {
                    if (color[v] < 0) {
                        unassigned = v;
                        ++count_unassigned;
                    } else {
                        ++(color[v] ? c1 : c0);
                    }
                }
                if (count_unassigned == 0 && (c0 == 0 || c1 == 0)) return false;
                if (count_unassigned == 1 && (c0 == 0 || c1 == 0) &&
                    c0 + c1 + 1 == static_cast<int>(e.size())) {
                    color[unassigned] = c0 == 0 ? 0 : 1;
                    forced_something = true;
                }
            }
            if (!forced_something) break;
        }
        int branch = -1;
        for (const auto& e : edges) {
            bool mono = true;
            int seen = -1;
            for (int v : e) {
                if (color[v] < 0) continue;
                if (seen >= 0 && color[v] != seen) mono = false;
                seen = color[v];
            }
            if (!mono) continue;
            for (int v : e)
                if (color[v] < 0) {
                    branch = v;
                    break;
                }
            if (branch >= 0) break;
        }
        if (branch < 0) return true;  // every edge already has two colors
        auto saved = color;
        for (int c : {0, 1}) {
            color[branch] = c;
            if (self(self)) return true;
            color = saved;
        }
        return false;
    };
    return rec(rec);
}

}  // namespace

int colorability_defect(const Hypergraph& h, const SizeCaps& caps) {
    if (h.ground_size > caps.cd_max_ground)
        throw SizeCapError("colorability defect: ground set exceeds size cap");
    std::vector<int> covered;
    {
        std::vector<char> used(h.ground_size, 0);
        for (const auto& e : h.edges)
            for (int v : e) used[v] = 1;
        for (int v = 0; v < h.ground_size; ++v)
            if (used[v]) covered.push_back(v);
    }
    const int m = static_cast<int>(covered.size());
    for (int u = 0;; ++u) {
        if (u > m) return m;  // removing all covered vertices kills every edge
        std::vector<int> pick(u);
        std::vector<char> removed(h.ground_size, 0);
        auto try_subsets = [&](auto&& self, int idx, int next) -> bool {
            if (idx == u) {
                std::vector<std::vector<int>> surviving;
                for (const auto& e : h.edges) {
                    bool hit = false;
                    for (int v : e)
                        if (removed[v]) {
                            hit = true;
                            break;
                        }
                    if (!hit) surviving.push_back(e);
                }
                return two_colorable(h.ground_size, surviving);
            }
            for (int i = next; i < m; ++i) {
                removed[covered[i]] = 1;
                if (self(self, idx + 1, i + 1)) return true;
                removed[covered[i]] = 0;
            }
            return false;
        };
        if (try_subsets(try_subsets, 0, 0)) return u;
    }
}

namespace {

// Largest zigzag in one fixed coloring, early-exiting at `enough`.
struct ZigzagSearch {
    const Graph& g;
    const std::vector<int>& color;  // 1-based colors
    int t;
    int best = 0;
    int enough;

    void run() {
        best = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            BitVec a(g.vertex_count());
            a.set(v);
            extend(color[v], a, BitVec(g.vertex_count()), 1);
            if (best >= enough) return;
        }
    }

    // `grow_side` is the side the next vertex joins; it must be adjacent to
    // every vertex of the other side, and colors increase strictly.
    void extend(int last_color, const BitVec& just_grew, const BitVec& other, int len) {
        best = std::max(best, len);
        if (best >= enough) return;
        if (len + (t - last_color) <= best) return;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] <= last_color) continue;
            // v joins `other`'s side; must see all of just_grew.
            BitVec need = just_grew;
            need.and_with(g.neighbors(v));
            if (need != just_grew) continue;
            BitVec next_other = other;
            next_other.set(v);
            extend(color[v], next_other, just_grew, len + 1);
            if (best >= enough) return;
        }
    }
};

}  // namespace

int zigzag_number(const Graph& g, const SizeCaps& caps) {
    const int n = g.vertex_count();
    if (n > caps.zig_max_vertices) throw SizeCapError("zigzag number: graph exceeds size cap");
    if (n == 0) return 0;
    const int floor_value = g.edge_count() > 0 ? 2 : 1;
    int global_min = n + 1;
    std::vector<BitVec> classes;
    std::vector<int> color(n, 0);
    auto evaluate_partition = [&]() {
        const int t = static_cast<int>(classes.size());
        std::vector<int> perm(t);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (int c = 0; c < t; ++c)
                for (int v : classes[perm[c]].to_indices()) color[v] = c + 1;
            ZigzagSearch search{g, color, t, 0, global_min};
            search.run();
            global_min = std::min(global_min, search.best);
            if (global_min <= floor_value) return;
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (global_min <= floor_value) return;
        if (v == n) {
            evaluate_partition();
            return;
        }
        const std::size_t existing = classes.size();
        for (std::size_t i = 0; i < existing; ++i) {
            BitVec clash = classes[i];
            clash.and_with(g.neighbors(v));
            if (clash.any()) continue;
            classes[i].set(v);
            self(self, v + 1);
            classes[i].reset(v);
            if (global_min <= floor_value) return;
        }
        classes.emplace_back(n);
        classes.back().set(v);
        self(self, v + 1);
        classes.pop_back();
    };
    rec(rec, 0);
    return global_min;
}

namespace {

// Q_t order on encoded values: val = 2*(level-1) + (sign < 0).
struct QtTable {
    int t;
    int values() const { return 2 * (t + 1); }
    static int level(int val) { return val / 2; }
    static int negate(int val) { return val ^ 1; }
    static bool q_leq(int a, int b) { return a == b || level(a) < level(b); }
};

struct XindSearch {
    const Poset& p;
    QtTable q;
    std::vector<int> rep, mate;                  // per orbit
    std::vector<std::vector<int>> neighbors;     // orbit constraint graph
    // allowed[i][j] as flat bitsets over value pairs, built per orbit pair
    std::vector<std::vector<std::vector<char>>> allowed;  // [edge][va][vb]
    std::vector<std::pair<int, int>> edge_of;              // constraint edges (i<j)
    std::vector<std::vector<int>> edge_index;               // orbit -> incident edge ids
    std::vector<unsigned> domain;

    bool value_pair_ok(int oi, int oj, int vi, int vj) const {
        int xi = rep[oi], xi2 = mate[oi], xj = rep[oj], xj2 = mate[oj];
        int wi = vi, wi2 = QtTable::negate(vi), wj = vj, wj2 = QtTable::negate(vj);
        auto chk = [&](int a, int va, int b, int vb) {
            if (p.less(a, b) && !QtTable::q_leq(va, vb)) return false;
            if (p.less(b, a) && !QtTable::q_leq(vb, va)) return false;
            return true;
        };
        return chk(xi, wi, xj, wj) && chk(xi, wi, xj2, wj2) && chk(xi2, wi2, xj, wj) &&
               chk(xi2, wi2, xj2, wj2);
    }

    bool propagate(std::vector<unsigned>& dom, std::vector<int> queue) {
        while (!queue.empty()) {
            int o = queue.back();
            queue.pop_back();
            for (int e : edge_index[o]) {
                auto [a, b] = edge_of[e];
                int other = a == o ? b : a;
                unsigned pruned = 0;
                for (int vo = 0; vo < q.values(); ++vo) {
                    if (!(dom[other] >> vo & 1u)) continue;
                    bool supported = false;
                    for (int vs = 0; vs < q.values() && !supported; ++vs)
                        if (dom[o] >> vs & 1u)
                            supported = a == o ? allowed[e][vs][vo] : allowed[e][vo][vs];
                    if (!supported) pruned |= 1u << vo;
                }
                if (pruned) {
                    dom[other] &= ~pruned;
                    if (!dom[other]) return false;
                    queue.push_back(other);
                }
            }
        }
        return true;
    }

    bool search(std::vector<unsigned> dom, std::vector<int>& solution) {
        int pick = -1, pick_size = q.values() + 1;
        for (std::size_t o = 0; o < dom.size(); ++o) {
            int size = __builtin_popcount(dom[o]);
            if (size > 1 && size < pick_size) {
                pick = static_cast<int>(o);
                pick_size = size;
            }
        }
        if (pick < 0) {
            solution.resize(dom.size());
            for (std::size_t o = 0; o < dom.size(); ++o)
                solution[o] = __builtin_ctz(dom[o]);
            return true;
        }
        for (int v = 0; v < q.values(); ++v) {
            if (!(dom[pick] >> v & 1u)) continue;
            auto next = dom;
            next[pick] = 1u << v;
            if (propagate(next, {pick}) && search(std::move(next), solution)) return true;
        }
        return false;
    }

    // Any found assignment is re-verified against the raw definition.
    void verify_witness(const std::vector<int>& solution) const {
        const int n = p.size();
        std::vector<int> value(n);
        for (std::size_t o = 0; o < solution.size(); ++o) {
            value[rep[o]] = solution[o];
            value[mate[o]] = QtTable::negate(solution[o]);
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (p.less(a, b) && !QtTable::q_leq(value[a], value[b]))
                    throw std::logic_error("cross-index witness fails verification");
    }

    bool feasible() {
        const int orbits = static_cast<int>(rep.size());
        edge_of.clear();
        edge_index.assign(orbits, {});
        allowed.clear();
        for (int i = 0; i < orbits; ++i)
            for (int j = i + 1; j < orbits; ++j) {
                bool related = p.less(rep[i], rep[j]) || p.less(rep[j], rep[i]) ||
                               p.less(rep[i], mate[j]) || p.less(mate[j], rep[i]);
                if (!related) continue;
                std::vector<std::vector<char>> table(q.values(),
                                                     std::vector<char>(q.values(), 0));
                for (int vi = 0; vi < q.values(); ++vi)
                    for (int vj = 0; vj < q.values(); ++vj)
                        table[vi][vj] = value_pair_ok(i, j, vi, vj);
                edge_index[i].push_back(static_cast<int>(edge_of.size()));
                edge_index[j].push_back(static_cast<int>(edge_of.size()));
                edge_of.emplace_back(i, j);
                allowed.push_back(std::move(table));
            }
        std::vector<unsigned> dom(orbits, (1u << q.values()) - 1);
        std::vector<int> all(orbits);
        std::iota(all.begin(), all.end(), 0);
        if (!propagate(dom, all)) return false;
        std::vector<int> solution;
        if (!search(std::move(dom), solution)) return false;
        verify_witness(solution);
        return true;
    }
};

}  // namespace

int cross_index(const Poset& p, const SizeCaps& caps) {
    if (p.size() == 0) return -1;
    if (p.size() > caps.xind_max_elements)
        throw SizeCapError("cross-index: poset exceeds size cap");
    if (!p.has_involution()) throw std::invalid_argument("cross-index needs a free Z2-poset");
    const int ub = p.height() - 1;
    // ch-ind of the order complex is a lower bound: a Q_t map induces an
    // equivariant simplicial map into Delta(Q_t), a t-sphere.
    const int lb = std::max(0, cohomological_index(order_complex(p)));
    if (lb > ub) throw std::logic_error("cross-index bounds crossed");
    XindSearch s{p, QtTable{0}, {}, {}, {}, {}, {}, {}, {}};
    const int n = p.size();
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        seen[x] = seen[p.involution(x)] = 1;
        s.rep.push_back(x);
        s.mate.push_back(p.involution(x));
    }
    for (int t = lb; t < ub; ++t) {
        s.q = QtTable{t};
        if (s.feasible()) return t;
    }
    return ub;
}

int cross_index_upper(const Poset& p) {
    if (p.size() == 0) return -1;
    if (!p.has_involution()) throw std::invalid_argument("cross-index needs a free Z2-poset");
    auto heights = p.chain_heights();
    // Witness map: level = longest chain ending at x, sign fixed per orbit.
    std::vector<int> sign(p.size(), 0);
    for (int x = 0; x < p.size(); ++x)
        if (sign[x] == 0) {
            sign[x] = 1;
            sign[p.involution(x)] = -1;
        }
    for (int a = 0; a < p.size(); ++a) {
        if (heights[a] != heights[p.involution(a)])
            throw std::logic_error("height witness is not equivariant");
        for (int b = 0; b < p.size(); ++b)
            if (p.less(a, b) && heights[a] >= heights[b])
                throw std::logic_error("height witness is not monotone");
    }
    return p.height() - 1;
}

int conn_b0(const Graph& g) {
    if (g.vertex_count() == 0) return -2;
    if (g.edge_count() == 0) return -1;
    if (!g.is_connected() || g.is_bipartite()) return 0;
    return homological_connectivity(box0_complex(g), Ring::Z);
}

namespace {

BoundsField skipped() { return {std::nullopt, "skipped:size"}; }

template <typename F>
BoundsField capped(F&& f) {
    try {
        return {std::forward<F>(f)(), ""};
    } catch (const SizeCapError&) {
        return skipped();
    }
}

void require(std::vector<std::string>& violations, bool ok, const std::string& what) {
    if (!ok) violations.push_back(what);
}

std::string show(const BoundsField& f) {
    return f.present() ? std::to_string(*f.value) : f.note;
}

}  // namespace

BoundsReport bounds_ladder(const Graph& g, const Hypergraph* repr, const SizeCaps& caps,
                           const std::string& name) {
    if (g.vertex_count() == 0) throw std::invalid_argument("bounds ladder needs a non-empty graph");
    BoundsReport r;
    r.graph_name = name;
    r.omega = capped([&] {
        if (g.vertex_count() > caps.chromatic_max_vertices)
            throw SizeCapError("omega cap");
        return clique_number(g); });
    r.chi = capped([&] { return chromatic_number(g, caps); });
    r.b_param = capped([&] { return biclique_parameter(g); });
    r.zig = capped([&] { return zigzag_number(g, caps); });
    if (repr) r.cd = capped([&] { return colorability_defect(*repr, caps); });
    r.conn_b0_z = {conn_b0(g), ""};

    Z2Complex b = box_complex(g);
    Z2Complex b0 = box0_complex(g);
    r.connz2_b = {homological_connectivity(b, Ring::GF2), ""};
    r.connz2_b0 = {homological_connectivity(b0, Ring::GF2), ""};
    r.hconnz_b = {homological_connectivity(b, Ring::Z), "surrogate"};
    // ch-ind of the empty complex is reported as -1, matching the index and
    // coindex conventions for the empty Z2-space.
    r.chind_b = b.empty() ? BoundsField{-1, "empty-complex"}
                          : BoundsField{cohomological_index(b), ""};
    r.chind_b0 = b0.empty() ? BoundsField{-1, "empty-complex"}
                            : BoundsField{cohomological_index(b0), ""};

    std::size_t hom_size = hom_poset_size(g);
    if (hom_size > static_cast<std::size_t>(caps.xind_max_elements)) {
        r.xind_hom = skipped();
        r.xind_upper = skipped();
    } else if (hom_size == 0) {
        r.xind_hom = {-1, "empty-poset"};
        r.xind_upper = {-1, "empty-poset"};
    } else {
        Poset hom = hom_poset(g);
        r.xind_hom = {cross_index(hom, caps), ""};
        r.xind_upper = {cross_index_upper(hom), ""};
    }

    if (r.omega.present() && r.chind_b.present())
        r.coind_b_interval = {{*r.omega.value - 2, *r.chind_b.value}};
    if (r.chind_b.present()) r.ind_b_interval = {{*r.chind_b.value, b.dim()}};

    auto& v = r.violations;
    if (r.omega.present() && r.chi.present())
        require(v, *r.omega.value <= *r.chi.value, "omega<=chi: " + show(r.omega) + ">" + show(r.chi));
    require(v, *r.connz2_b.value + 3 == *r.connz2_b0.value + 2,
            "connZ2(B)+3=connZ2(B0)+2: " + show(r.connz2_b) + "," + show(r.connz2_b0));
    require(v, *r.connz2_b0.value + 2 <= *r.chind_b0.value + 1,
            "connZ2(B0)+2<=chind(B0)+1: " + show(r.connz2_b0) + "," + show(r.chind_b0));
    require(v, *r.chind_b0.value + 1 == *r.chind_b.value + 2,
            "chind(B0)+1=chind(B)+2: " + show(r.chind_b0) + "," + show(r.chind_b));
    if (r.b_param.present())
        require(v, *r.chind_b.value + 2 <= *r.b_param.value,
                "chind(B)+2<=b: " + show(r.chind_b) + "," + show(r.b_param));
    if (r.xind_hom.present() && r.xind_hom.note.empty()) {
        require(v, *r.chind_b.value <= *r.xind_hom.value,
                "chind(B)<=Xind: " + show(r.chind_b) + "," + show(r.xind_hom));
        if (r.zig.present())
            require(v, *r.xind_hom.value + 2 <= *r.zig.value,
                    "Xind+2<=zig: " + show(r.xind_hom) + "," + show(r.zig));
        if (r.xind_upper.present())
            require(v, *r.xind_hom.value <= *r.xind_upper.value,
                    "Xind<=height-1: " + show(r.xind_hom) + "," + show(r.xind_upper));
    }
    if (r.zig.present() && r.chi.present())
        require(v, *r.zig.value <= *r.chi.value, "zig<=chi: " + show(r.zig) + "," + show(r.chi));
    if (r.cd.present() && r.chi.present())
        require(v, *r.cd.value <= *r.chi.value, "cd<=chi: " + show(r.cd) + "," + show(r.chi));
    if (r.chi.present())
        require(v, *r.conn_b0_z.value + 2 <= *r.chi.value,
                "conn(B0)+2<=chi: " + show(r.conn_b0_z) + "," + show(r.chi));
    if (r.omega.present())
        require(v, *r.omega.value - 2 <= *r.chind_b.value,
                "omega-2<=chind(B): " + show(r.omega) + "," + show(r.chind_b));
    if (!b.empty())
        require(v, *r.chind_b.value <= b.dim(),
                "chind(B)<=dim(B): " + show(r.chind_b) + "," + std::to_string(b.dim()));
    return r;
}

namespace {

void json_field(std::ostringstream& out, const char* key, const BoundsField& f, bool& first) {
    if (!first) out << ',';
    first = false;
    out << '"' << key << "\":";
    if (f.present())
        out << *f.value;
    else
        out << '"' << f.note << '"';
    if (f.present() && !f.note.empty()) out << ",\"" << key << "_note\":\"" << f.note << '"';
}

}  // namespace

std::string bounds_report_json(const BoundsReport& r) {
    std::ostringstream out;
    out << "{\"graph\":\"" << r.graph_name << "\",";
    bool first = true;
    json_field(out, "omega", r.omega, first);
    json_field(out, "chi", r.chi, first);
    json_field(out, "b", r.b_param, first);
    json_field(out, "zig", r.zig, first);
    json_field(out, "cd", r.cd.present() || !r.cd.note.empty() ? r.cd
                                                               : BoundsField{std::nullopt, "absent"},
               first);
    json_field(out, "conn_b0", r.conn_b0_z, first);
    json_field(out, "connz2_b", r.connz2_b, first);
    json_field(out, "connz2_b0", r.connz2_b0, first);
    json_field(out, "chind_b", r.chind_b, first);
    json_field(out, "chind_b0", r.chind_b0, first);
    json_field(out, "xind_hom", r.xind_hom, first);
    json_field(out, "xind_upper", r.xind_upper, first);
    json_field(out, "hconnz_b", r.hconnz_b, first);
    auto interval = [&](const char* key, const std::optional<std::pair<int, int>>& iv) {
        out << ",\"" << key << "\":";
        if (iv)
            out << '[' << iv->first << ',' << iv->second << ']';
        else
            out << "\"skipped:size\"";
    };
    interval("coind_b_interval", r.coind_b_interval);
    interval("ind_b_interval", r.ind_b_interval);
    out << ",\"violations\":[";
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        if (i) out << ',';
        out << '"' << r.violations[i] << '"';
    }
    out << "]}";
    return out.str();
}

namespace {

const char* kCsvColumns[] = {"graph",    "omega",   "chi",       "b",        "zig",
                             "cd",       "conn_b0", "connz2_b",  "connz2_b0", "chind_b",
                             "chind_b0", "xind_hom", "xind_upper", "hconnz_b", "coind_b",
                             "ind_b",    "violations"};

}  // namespace

std::string bounds_report_csv_header() {
    std::string out;
    for (std::size_t i = 0; i < std::size(kCsvColumns); ++i) {
        if (i) out += ',';
        out += kCsvColumns[i];
    }
    return out + "\n";
}

std::string bounds_report_csv_row(const BoundsReport& r) {
    auto cell = [](const BoundsField& f) { return show(f); };
    std::ostringstream out;
    out << r.graph_name << ',' << cell(r.omega) << ',' << cell(r.chi) << ',' << cell(r.b_param)
        << ',' << cell(r.zig) << ',' << (r.cd.present() || !r.cd.note.empty() ? cell(r.cd) : "absent")
        << ',' << cell(r.conn_b0_z) << ',' << cell(r.connz2_b) << ',' << cell(r.connz2_b0) << ','
        << cell(r.chind_b) << ',' << cell(r.chind_b0) << ',' << cell(r.xind_hom) << ','
        << cell(r.xind_upper) << ',' << cell(r.hconnz_b) << ',';
    if (r.coind_b_interval)
        out << r.coind_b_interval->first << ".." << r.coind_b_interval->second;
    out << ',';
    if (r.ind_b_interval) out << r.ind_b_interval->first << ".." << r.ind_b_interval->second;
    out << ',';
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        if (i) out << ';';
        out << r.violations[i];
    }
    out << "\n";
    return out.str();
}

std::string bounds_report_table(const BoundsReport& r) {
    std::ostringstream out;
    auto line = [&](const std::string& key, const std::string& value, const std::string& note) {
        out << "  " << key;
        for (std::size_t i = key.size(); i < 14; ++i) out << ' ';
        out << value;
        if (!note.empty()) out << "   (" << note << ")";
        out << "\n";
    };
    out << "bounds ladder: " << r.graph_name << "\n";
    auto field = [&](const std::string& key, const BoundsField& f) {
        line(key, f.present() ? std::to_string(*f.value) : f.note,
             f.present() ? f.note : std::string{});
    };
    field("omega", r.omega);
    field("chi", r.chi);
    field("b", r.b_param);
    field("zig", r.zig);
    if (r.cd.present() || !r.cd.note.empty()) field("cd", r.cd);
    field("conn_b0", r.conn_b0_z);
    field("connz2_b", r.connz2_b);
    field("connz2_b0", r.connz2_b0);
    field("chind_b", r.chind_b);
    field("chind_b0", r.chind_b0);
    field("xind_hom", r.xind_hom);
    field("xind_upper", r.xind_upper);
    field("hconnz_b", r.hconnz_b);
    if (r.coind_b_interval)
        line("coind_b", std::to_string(r.coind_b_interval->first) + ".." +
                            std::to_string(r.coind_b_interval->second), "");
    if (r.ind_b_interval)
        line("ind_b", std::to_string(r.ind_b_interval->first) + ".." +
                          std::to_string(r.ind_b_interval->second), "");
    if (r.violations.empty()) {
        out << "  violations    none\n";
    } else {
        out << "  violations:\n";
        for (const auto& v : r.violations) out << "    " << v << "\n";
    }
    return out.str();
}

}  // namespace chromatopo
