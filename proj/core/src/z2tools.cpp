#include "chromatopo/z2tools.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chromatopo/bits.hpp"

namespace chromatopo {

QuotientData quotient_complex(const Z2Complex& k) {
    if (!k.has_involution()) throw std::invalid_argument("quotient needs a free involution");
    Z2Complex sd = barycentric_subdivision(k);
    const int n = sd.vertex_count();
    // Orbits of sd vertices; representative = smaller index.
    std::vector<int> orbit_of(n, -1), rep_of_orbit;
    for (int v = 0; v < n; ++v) {
        if (orbit_of[v] >= 0) continue;
        int w = sd.involution(v);
        orbit_of[v] = orbit_of[w] = static_cast<int>(rep_of_orbit.size());
        rep_of_orbit.push_back(std::min(v, w));
    }
    std::vector<std::string> labels(rep_of_orbit.size());
    std::vector<std::string> section(rep_of_orbit.size());
    for (std::size_t o = 0; o < rep_of_orbit.size(); ++o)
        labels[o] = section[o] = sd.label(rep_of_orbit[o]);
    std::vector<std::vector<int>> facets;
    for (const auto& f : sd.facets()) {
        std::vector<int> img;
        img.reserve(f.size());
        for (int v : f) img.push_back(orbit_of[v]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw std::logic_error("subdivided simplex meets its involution image");
        facets.push_back(std::move(img));
    }
    QuotientData out;
    out.quotient = Z2Complex(std::move(labels), std::move(facets));
    out.section = std::move(section);
    if (out.quotient.num_dims() > 1) {
        for (const auto& e : out.quotient.simplices(1)) {
            int sa = rep_of_orbit[e[0]], sb = rep_of_orbit[e[1]];
            bool straight = sd.index_of(1, {std::min(sa, sb), std::max(sa, sb)}) >= 0;
            int tb = sd.involution(sb);
            bool twisted = sd.index_of(1, {std::min(sa, tb), std::max(sa, tb)}) >= 0;
            if (straight == twisted)
                throw std::logic_error("quotient edge does not lift uniquely");
            out.cocycle_w[{e[0], e[1]}] = twisted ? 1 : 0;
        }
    }
    return out;
}

std::string serialize_quotient(const QuotientData& q) {
    std::string out = serialize_complex(q.quotient);
    for (const auto& [edge, w] : q.cocycle_w)
        out += "w " + q.quotient.label(edge.first) + " " + q.quotient.label(edge.second) + " " +
               std::to_string(w) + "\n";
    return out;
}

namespace {

// Ordered orbit model of K/Z2: a Delta-complex whose k-simplices are the
// orbits of k-simplices of K. Within a simplex all vertex orbits are
// distinct (strong freeness), so ordering vertices by orbit rank gives
// well-defined ordered faces that commute with the involution.
struct OrbitModel {
    const Z2Complex* k = nullptr;
    std::vector<int> orbit_of;    // vertex -> orbit id
    std::vector<int> section;     // orbit id -> representative vertex
    std::vector<int> rank;        // orbit id -> position in the cup-product order
    // canonical ordered tuples per dimension, lexicographically sorted
    std::vector<std::vector<std::vector<int>>> tuples;

    std::vector<int> canonical(std::vector<int> simplex) const {
        std::sort(simplex.begin(), simplex.end(),
                  [&](int a, int b) { return rank[orbit_of[a]] < rank[orbit_of[b]]; });
        std::vector<int> mate;
        mate.reserve(simplex.size());
        for (int v : simplex) mate.push_back(k->involution(v));
        return std::min(simplex, mate);
    }

    int index_of(int dim, const std::vector<int>& tuple) const {
        const auto& level = tuples[dim];
        auto it = std::lower_bound(level.begin(), level.end(), tuple);
        if (it == level.end() || *it != tuple) return -1;
        return static_cast<int>(it - level.begin());
    }
};

OrbitModel build_orbit_model(const Z2Complex& k, const std::vector<int>* rank_override) {
    OrbitModel m;
    m.k = &k;
    const int n = k.vertex_count();
    m.orbit_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (m.orbit_of[v] >= 0) continue;
        int w = k.involution(v);
        m.orbit_of[v] = m.orbit_of[w] = static_cast<int>(m.section.size());
        m.section.push_back(std::min(v, w));
    }
    const int orbits = static_cast<int>(m.section.size());
    if (rank_override) {
        if (static_cast<int>(rank_override->size()) != orbits)
            throw std::invalid_argument("orbit rank size mismatch");
        m.rank = *rank_override;
    } else {
        // Default order: lexicographic on orbit labels.
        std::vector<int> order(orbits);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return k.label(m.section[a]) < k.label(m.section[b]);
        });
        m.rank.assign(orbits, 0);
        for (int i = 0; i < orbits; ++i) m.rank[order[i]] = i;
    }
    m.tuples.resize(k.num_dims());
    for (int d = 0; d < k.num_dims(); ++d) {
        std::set<std::vector<int>> seen;
        for (const auto& s : k.simplices(d)) seen.insert(m.canonical(s));
        m.tuples[d].assign(seen.begin(), seen.end());
    }
    return m;
}

int chind_impl(const Z2Complex& k, const std::vector<int>* rank_override) {
    if (k.empty()) throw std::invalid_argument("cohomological index of the empty complex");
    if (!k.has_involution())
        throw std::invalid_argument("cohomological index needs a free involution");
    OrbitModel m = build_orbit_model(k, rank_override);
    const int dim = k.dim();
    auto edge_w = [&](int a, int b) {
        int wa = (a == m.section[m.orbit_of[a]]) ? 0 : 1;
        int wb = (b == m.section[m.orbit_of[b]]) ? 0 : 1;
        return wa ^ wb;
    };
    // Cup powers w^n ascending; once w^n is a coboundary all higher powers
    // are, so the first failure pins the index.
    BitVec prev;  // w^{n-1} over (n-1)-tuples
    for (int n = 1; n <= dim; ++n) {
        const auto& level = m.tuples[n];
        BitVec cur(static_cast<int>(level.size()));
        for (std::size_t j = 0; j < level.size(); ++j) {
            const auto& t = level[j];
            int val;
            if (n == 1) {
                val = edge_w(t[0], t[1]);
            } else {
                std::vector<int> front(t.begin(), t.end() - 1);
                int fi = m.index_of(n - 1, m.canonical(front));
                std::vector<int> back{t[t.size() - 2], t[t.size() - 1]};
                auto cb = m.canonical(back);
                val = (prev.test(fi) ? 1 : 0) & edge_w(cb[0], cb[1]);
            }
            if (val) cur.set(static_cast<int>(j));
        }
        if (cur.none()) return n - 1;
        // Rows of the coboundary matrix, one per (n-1)-simplex.
        const auto& faces = m.tuples[n - 1];
        std::vector<BitVec> rows(faces.size(), BitVec(static_cast<int>(level.size())));
        for (std::size_t j = 0; j < level.size(); ++j) {
            const auto& t = level[j];
            std::vector<int> face;
            face.reserve(t.size() - 1);
            for (std::size_t drop = 0; drop < t.size(); ++drop) {
                face.clear();
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (i != drop) face.push_back(t[i]);
                int fi = m.index_of(n - 1, m.canonical(face));
                rows[fi].flip(static_cast<int>(j));
            }
        }
        if (gf2_in_span(std::move(rows), cur)) return n - 1;
        prev = std::move(cur);
    }
    return dim;
}

}  // namespace

int cohomological_index(const Z2Complex& k) { return chind_impl(k, nullptr); }

int cohomological_index_with_order(const Z2Complex& k, const std::vector<int>& orbit_rank) {
    return chind_impl(k, &orbit_rank);
}

Graph csorba_graph(const Z2Complex& k) {
    if (!k.has_involution()) throw std::invalid_argument("Csorba construction needs an involution");
    std::vector<std::vector<int>> simplices;
    std::vector<std::string> labels;
    for (int d = 0; d < k.num_dims(); ++d)
        for (const auto& s : k.simplices(d)) {
            simplices.push_back(s);
            std::string lbl = "(";
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) lbl += '|';
                lbl += k.label(s[i]);
            }
            lbl += ')';
            labels.push_back(lbl);
        }
    const int n = static_cast<int>(simplices.size());
    std::vector<std::vector<int>> images(n);
    for (int i = 0; i < n; ++i) images[i] = k.involution_image(simplices[i]);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            bool a_in_nub = std::includes(images[b].begin(), images[b].end(), simplices[a].begin(),
                                          simplices[a].end());
            bool b_in_nua = std::includes(images[a].begin(), images[a].end(), simplices[b].begin(),
                                          simplices[b].end());
            if (a_in_nub || b_in_nua) edges.emplace_back(a, b);
        }
    return Graph(n, edges, std::move(labels));
}

bool map_is_simplicial(const SignedVertexMap& m) {
    for (const auto& f : m.domain.facets()) {
        std::vector<int> img;
        img.reserve(f.size());
        for (int v : f) img.push_back(m.assignment[v]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!m.codomain.contains(img)) return false;
    }
    return true;
}

bool map_is_equivariant(const SignedVertexMap& m) {
    if (!m.domain.has_involution() || !m.codomain.has_involution()) return false;
    for (int v = 0; v < m.domain.vertex_count(); ++v)
        if (m.assignment[m.domain.involution(v)] != m.codomain.involution(m.assignment[v]))
            return false;
    return true;
}

std::string serialize_signed_vertex_map(const SignedVertexMap& m) {
    std::ostringstream out;
    for (int v = 0; v < m.domain.vertex_count(); ++v)
        out << m.domain.label(v) << " -> " << m.codomain.label(m.assignment[v]) << "\n";
    return out.str();
}

namespace {

// (k, s) of the appendix rule for a simplex given as signed values +-i,
// i in 1..d+1, no opposite pair, neither all positive nor all negative.
std::pair<int, int> lambda_rule(std::vector<int> signed_vals) {
    std::sort(signed_vals.begin(), signed_vals.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    auto mu = [](int v) { return std::abs(v) % 2 == 0 ? v : -v; };
    int changes = 0;
    for (std::size_t i = 1; i < signed_vals.size(); ++i)
        if ((mu(signed_vals[i]) > 0) != (mu(signed_vals[i - 1]) > 0)) ++changes;
    int k = changes + 1;
    int s = mu(signed_vals[0]) > 0 ? 1 : -1;
    return {k, s};
}

int parse_signed_label(const std::string& label) {
    int v = std::stoi(label.substr(1));
    return label[0] == '-' ? -v : v;
}

}  // namespace

SignedVertexMap lambda_map(int d) {
    if (d < 1) throw std::invalid_argument("lambda map needs d >= 1");
    std::vector<std::string> vertex_labels;
    for (int i = 1; i <= d + 1; ++i) vertex_labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < d + 1; ++u)
        for (int v = u + 1; v < d + 1; ++v) edges.emplace_back(u, v);
    Graph complete(d + 1, edges, std::move(vertex_labels));
    Z2Complex box = box_complex(complete);
    std::vector<std::vector<int>> vertex_simplices;
    Z2Complex sd = barycentric_subdivision(box, &vertex_simplices);
    Z2Complex target = cross_polytope_boundary(d);
    std::vector<int> assignment(sd.vertex_count());
    for (int v = 0; v < sd.vertex_count(); ++v) {
        std::vector<int> signed_vals;
        for (int bv : vertex_simplices[v]) signed_vals.push_back(parse_signed_label(box.label(bv)));
        auto [k, s] = lambda_rule(std::move(signed_vals));
        std::string lbl = (s > 0 ? "+" : "-") + std::to_string(k);
        int image = -1;
        for (int w = 0; w < target.vertex_count(); ++w)
            if (target.label(w) == lbl) {
                image = w;
                break;
            }
        assignment[v] = image;
    }
    return SignedVertexMap{std::move(sd), std::move(target), std::move(assignment)};
}

std::vector<Rational> h_map_eval(const std::vector<Rational>& z, int d) {
    if (d < 1) throw std::invalid_argument("h map needs d >= 1");
    if (static_cast<int>(z.size()) != d + 1) throw std::invalid_argument("h map input length");
    std::vector<Rational> out(d, Rational(0));
    Rational linf(0), l1(0);
    for (const auto& zi : z) {
        Rational a = zi < 0 ? Rational(-zi) : zi;
        if (a > linf) linf = a;
        l1 += a;
    }
    if (linf == 0) return out;
    // Barycentric coordinates of z/|z|_1 in the subdivision of the
    // cross-polytope sphere: thresholds are the distinct |p_i| descending,
    // chain sets the signed supports above each threshold.
    std::vector<Rational> p;
    p.reserve(z.size());
    for (const auto& zi : z) p.push_back(zi / l1);
    std::vector<Rational> thresholds;
    for (const auto& pi : p) {
        Rational a = pi < 0 ? Rational(-pi) : pi;
        if (a != 0) thresholds.push_back(a);
    }
    std::sort(thresholds.begin(), thresholds.end(), std::greater<Rational>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
        std::vector<int> chain_set;  // signed 1-based indices
        for (int i = 0; i <= d; ++i) {
            Rational a = p[i] < 0 ? Rational(-p[i]) : p[i];
            if (a >= thresholds[j]) chain_set.push_back(p[i] > 0 ? i + 1 : -(i + 1));
        }
        Rational next = j + 1 < thresholds.size() ? thresholds[j + 1] : Rational(0);
        Rational weight = Rational(static_cast<int>(chain_set.size())) * (thresholds[j] - next);
        bool all_pos = true, all_neg = true;
        for (int v : chain_set) (v > 0 ? all_neg : all_pos) = false;
        bool full = static_cast<int>(chain_set.size()) == d + 1;
        if (full && (all_pos || all_neg)) continue;  // lambda' sends these to 0
        auto [k, s] = lambda_rule(std::move(chain_set));
        out[k - 1] += Rational(s) * weight;
    }
    for (auto& c : out) c *= linf;
    return out;
}

}  // namespace chromatopo
