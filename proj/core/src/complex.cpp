#include "chromatopo/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chromatopo {

Z2Complex::Z2Complex(std::vector<std::string> labels, std::vector<std::vector<int>> facets,
                     std::vector<int> involution)
    : labels_(std::move(labels)), facets_(std::move(facets)), involution_(std::move(involution)) {
    for (auto& f : facets_) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    // Keep only maximal faces.
    std::vector<std::vector<int>> maximal;
    for (const auto& f : facets_) {
        bool contained = false;
        for (const auto& g : facets_) {
            if (&f == &g || g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(f);
    }
    facets_ = std::move(maximal);
    validate();
    build_closure();
}

void Z2Complex::validate() const {
    const int n = vertex_count();
    for (const auto& f : facets_) {
        if (f.empty()) throw std::invalid_argument("empty facet");
        if (f.front() < 0 || f.back() >= n) throw std::invalid_argument("facet vertex out of range");
    }
    if (involution_.empty()) return;
    if (static_cast<int>(involution_.size()) != n)
        throw std::invalid_argument("involution size mismatch");
    for (int v = 0; v < n; ++v) {
        int w = involution_[v];
        if (w < 0 || w >= n || w == v || involution_[w] != v)
            throw std::invalid_argument("involution is not a free order-2 permutation");
    }
    for (const auto& f : facets_) {
        auto img = involution_image(f);
        bool found = std::binary_search(facets_.begin(), facets_.end(), img);
        if (!found) throw std::invalid_argument("involution is not simplicial");
        for (int v : f)
            if (std::binary_search(f.begin(), f.end(), involution_[v]))
                throw std::invalid_argument("simplex meets its involution image");
    }
}

void Z2Complex::build_closure() {
    int d = dim();
    by_dim_.assign(d + 1, {});
    std::vector<std::set<std::vector<int>>> acc(d + 1);
    std::vector<int> sub;
    for (const auto& f : facets_) {
        const int m = static_cast<int>(f.size());
        if (m > 22) throw SizeCapError("facet too large to materialize the closure");
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            sub.clear();
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            acc[sub.size() - 1].insert(sub);
        }
    }
    for (int k = 0; k <= d; ++k) by_dim_[k].assign(acc[k].begin(), acc[k].end());
}

int Z2Complex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::size_t Z2Complex::simplex_count() const {
    std::size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

int Z2Complex::index_of(int k, const std::vector<int>& simplex) const {
    if (k < 0 || k >= num_dims()) return -1;
    const auto& level = by_dim_[k];
    auto it = std::lower_bound(level.begin(), level.end(), simplex);
    if (it == level.end() || *it != simplex) return -1;
    return static_cast<int>(it - level.begin());
}

bool Z2Complex::contains(std::vector<int> simplex) const {
    std::sort(simplex.begin(), simplex.end());
    if (simplex.empty()) return true;
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), simplex.begin(), simplex.end())) return true;
    return false;
}

std::vector<int> Z2Complex::involution_image(const std::vector<int>& simplex) const {
    std::vector<int> img;
    img.reserve(simplex.size());
    for (int v : simplex) img.push_back(involution_[v]);
    std::sort(img.begin(), img.end());
    return img;
}

namespace {

// Signed vertex codes local to the box-complex builders: +v -> 2v, -v -> 2v+1.
int pos_code(int v) { return 2 * v; }
int neg_code(int v) { return 2 * v + 1; }

// All distinct intersections of vertex neighborhoods, i.e. all sets CN(S),
// starting from CN(empty) = V. These are exactly the Galois-closed sets of
// the adjacency relation.
std::vector<BitVec> closed_sets(const Graph& g) {
    const int n = g.vertex_count();
    BitVec full(n);
    for (int v = 0; v < n; ++v) full.set(v);
    std::set<std::vector<int>> seen;
    std::vector<BitVec> out, queue{full};
    seen.insert(full.to_indices());
    while (!queue.empty()) {
        BitVec e = queue.back();
        queue.pop_back();
        out.push_back(e);
        for (int v = 0; v < n; ++v) {
            BitVec e2 = e;
            e2.and_with(g.neighbors(v));
            auto key = e2.to_indices();
            if (seen.insert(key).second) queue.push_back(e2);
        }
    }
    return out;
}

// Facets of B(G) as signed-code sets: one per Galois-closed pair with both
// sides non-empty.
std::vector<std::vector<int>> concept_facets(const Graph& g) {
    std::vector<std::vector<int>> facets;
    for (const auto& extent : closed_sets(g)) {
        if (!extent.any()) continue;
        BitVec intent = common_neighbors(g, extent);
        if (!intent.any()) continue;
        std::vector<int> f;
        for (int v : extent.to_indices()) f.push_back(pos_code(v));
        for (int v : intent.to_indices()) f.push_back(neg_code(v));
        facets.push_back(std::move(f));
    }
    return facets;
}

// Compactifies signed-code facets into a Z2Complex over the used codes.
Z2Complex from_signed_facets(const Graph& g, std::vector<std::vector<int>> code_facets,
                             bool all_signed_vertices) {
    const int n = g.vertex_count();
    std::vector<int> code_to_id(2 * n, -1);
    std::vector<std::string> labels;
    std::vector<int> used;
    if (all_signed_vertices) {
        for (int c = 0; c < 2 * n; ++c) used.push_back(c);
    } else {
        std::set<int> s;
        for (const auto& f : code_facets) s.insert(f.begin(), f.end());
        used.assign(s.begin(), s.end());
    }
    for (int c : used) {
        code_to_id[c] = static_cast<int>(labels.size());
        labels.push_back((c % 2 ? "-" : "+") + g.label(c / 2));
    }
    std::vector<int> inv(labels.size());
    for (int c : used) inv[code_to_id[c]] = code_to_id[c ^ 1];
    for (auto& f : code_facets)
        for (auto& c : f) c = code_to_id[c];
    return Z2Complex(std::move(labels), std::move(code_facets), std::move(inv));
}

}  // namespace

Z2Complex box_complex(const Graph& g) {
    return from_signed_facets(g, concept_facets(g), /*all_signed_vertices=*/false);
}

Z2Complex box0_complex(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return Z2Complex();
    auto facets = concept_facets(g);
    std::vector<int> all_pos, all_neg;
    for (int v = 0; v < n; ++v) {
        all_pos.push_back(pos_code(v));
        all_neg.push_back(neg_code(v));
    }
    facets.push_back(all_pos);
    facets.push_back(all_neg);
    return from_signed_facets(g, std::move(facets), /*all_signed_vertices=*/true);
}

Z2Complex neighborhood_complex(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> facets;
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v).to_indices();
        if (!nb.empty()) facets.push_back(nb);
    }
    std::set<int> used;
    for (const auto& f : facets) used.insert(f.begin(), f.end());
    std::vector<int> old_to_new(n, -1);
    std::vector<std::string> labels;
    for (int v : used) {
        old_to_new[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    for (auto& f : facets)
        for (auto& v : f) v = old_to_new[v];
    return Z2Complex(std::move(labels), std::move(facets));
}

Z2Complex cross_polytope_boundary(int d) {
    if (d < 1) throw std::invalid_argument("cross-polytope dimension must be >= 1");
    std::vector<std::string> labels;
    std::vector<int> inv;
    for (int i = 1; i <= d; ++i) {
        labels.push_back("+" + std::to_string(i));
        labels.push_back("-" + std::to_string(i));
        inv.push_back(2 * (i - 1) + 1);
        inv.push_back(2 * (i - 1));
    }
    std::vector<std::vector<int>> facets;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> f;
        for (int i = 0; i < d; ++i) f.push_back(2 * i + ((mask >> i) & 1));
        facets.push_back(std::move(f));
    }
    return Z2Complex(std::move(labels), std::move(facets), std::move(inv));
}

namespace {

std::string side_tag(const std::string& label, const char* side) {
    if (!label.empty() && (label[0] == '+' || label[0] == '-'))
        return label.substr(0, 1) + side + label.substr(1);
    return side + label;
}

}  // namespace

Z2Complex complex_join(const Z2Complex& k, const Z2Complex& l) {
    if (k.empty()) return l;
    if (l.empty()) return k;
    const int nk = k.vertex_count(), nl = l.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(nk + nl);
    for (int v = 0; v < nk; ++v) labels.push_back(side_tag(k.label(v), "l."));
    for (int v = 0; v < nl; ++v) labels.push_back(side_tag(l.label(v), "r."));
    std::vector<std::vector<int>> facets;
    facets.reserve(k.facets().size() * l.facets().size());
    for (const auto& fk : k.facets())
        for (const auto& fl : l.facets()) {
            std::vector<int> f = fk;
            for (int v : fl) f.push_back(nk + v);
            facets.push_back(std::move(f));
        }
    std::vector<int> inv;
    if (k.has_involution() && l.has_involution()) {
        inv.resize(nk + nl);
        for (int v = 0; v < nk; ++v) inv[v] = k.involution(v);
        for (int v = 0; v < nl; ++v) inv[nk + v] = nk + l.involution(v);
    }
    return Z2Complex(std::move(labels), std::move(facets), std::move(inv));
}

Z2Complex suspension(const Z2Complex& k) {
    std::vector<int> pole_inv;
    if (k.has_involution() || k.empty()) pole_inv = {1, 0};
    Z2Complex s0({"+pole", "-pole"}, {{0}, {1}}, std::move(pole_inv));
    return complex_join(k, s0);
}

Z2Complex barycentric_subdivision(const Z2Complex& k,
                                  std::vector<std::vector<int>>* vertex_simplices) {
    // Vertices of sd(k) are the non-empty simplices of k; facets are the
    // saturated chains ending at a facet, one per ordering of a facet.
    std::map<std::vector<int>, int> vertex_id;
    std::vector<std::vector<int>> vertex_simplex;
    std::vector<std::string> labels;
    for (int d = 0; d < k.num_dims(); ++d)
        for (const auto& s : k.simplices(d)) {
            vertex_id[s] = static_cast<int>(vertex_simplex.size());
            vertex_simplex.push_back(s);
            std::string lbl = "(";
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) lbl += '|';
                lbl += k.label(s[i]);
            }
            lbl += ')';
            labels.push_back(lbl);
        }
    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    std::vector<int> prefix;
    for (const auto& f : k.facets()) {
        if (f.size() > 8) throw SizeCapError("facet too large for barycentric subdivision");
        std::vector<int> perm = f;
        std::sort(perm.begin(), perm.end());
        do {
            prefix.clear();
            chain.clear();
            for (int v : perm) {
                prefix.push_back(v);
                std::vector<int> s = prefix;
                std::sort(s.begin(), s.end());
                chain.push_back(vertex_id.at(s));
            }
            facets.push_back(chain);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<int> inv;
    if (k.has_involution()) {
        inv.resize(vertex_simplex.size());
        for (std::size_t i = 0; i < vertex_simplex.size(); ++i)
            inv[i] = vertex_id.at(k.involution_image(vertex_simplex[i]));
    }
    if (vertex_simplices) *vertex_simplices = vertex_simplex;
    return Z2Complex(std::move(labels), std::move(facets), std::move(inv));
}

std::string serialize_complex(const Z2Complex& k) {
    std::vector<std::string> lines;
    for (const auto& f : k.facets()) {
        std::vector<std::string> labs;
        labs.reserve(f.size());
        for (int v : f) labs.push_back(k.label(v));
        std::sort(labs.begin(), labs.end());
        std::string line;
        for (std::size_t i = 0; i < labs.size(); ++i) {
            if (i) line += ',';
            line += labs[i];
        }
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

Z2Complex parse_complex(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::set<std::string> label_set;
    std::vector<std::vector<std::string>> raw_facets;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> labs;
        std::string cur;
        std::istringstream ls(line);
        while (std::getline(ls, cur, ','))
            if (!cur.empty()) labs.push_back(cur);
        if (labs.empty())
            throw std::invalid_argument("line " + std::to_string(line_no) + ": empty facet");
        label_set.insert(labs.begin(), labs.end());
        raw_facets.push_back(std::move(labs));
    }
    std::vector<std::string> labels(label_set.begin(), label_set.end());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> facets;
    for (const auto& labs : raw_facets) {
        std::vector<int> f;
        for (const auto& l : labs) f.push_back(index.at(l));
        facets.push_back(std::move(f));
    }
    // Derive the sign-swap involution when the labels pair up totally.
    std::vector<int> inv(labels.size(), -1);
    bool signed_total = !labels.empty();
    for (std::size_t i = 0; i < labels.size() && signed_total; ++i) {
        const std::string& l = labels[i];
        if (l.size() < 2 || (l[0] != '+' && l[0] != '-')) {
            signed_total = false;
            break;
        }
        std::string mate = (l[0] == '+' ? "-" : "+") + l.substr(1);
        auto it = index.find(mate);
        if (it == index.end())
            signed_total = false;
        else
            inv[i] = it->second;
    }
    if (signed_total) {
        // The pairing may fail to be simplicial or strongly free on an
        // arbitrary import; fall back to no involution then.
        try {
            return Z2Complex(labels, facets, std::move(inv));
        } catch (const std::invalid_argument&) {
        }
    }
    return Z2Complex(std::move(labels), std::move(facets));
}

}  // namespace chromatopo
