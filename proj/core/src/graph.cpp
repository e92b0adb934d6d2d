#include "chromatopo/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace chromatopo {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
             std::vector<std::string> labels)
    : n_(n), adj_(n, BitVec(n)), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (labels_.empty()) {
        labels_.reserve(n);
        for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels_.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u].to_indices())
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u].to_indices())
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == n_;
}

bool Graph::is_bipartite() const {
    std::vector<int> side(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj_[u].to_indices()) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    bool dimacs = false;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;    // comment
        if (tag == "p") {
            if (n >= 0) parse_fail(line_no, "duplicate header");
            std::string maybe_edge;
            ls >> maybe_edge;
            if (maybe_edge == "edge" || maybe_edge == "col") {
                dimacs = true;
                long m = 0;
                if (!(ls >> n >> m)) parse_fail(line_no, "malformed DIMACS header");
            } else {
                try {
                    n = std::stoi(maybe_edge);
                } catch (const std::exception&) {
                    parse_fail(line_no, "malformed header");
                }
            }
            if (n < 0) parse_fail(line_no, "negative vertex count");
        } else if (tag == "e") {
            if (n < 0) parse_fail(line_no, "edge before header");
            long u, v;
            if (!(ls >> u >> v)) parse_fail(line_no, "malformed edge line");
            if (dimacs) {
                --u;
                --v;
            }
            if (u < 0 || v < 0 || u >= n || v >= n) parse_fail(line_no, "vertex index out of range");
            if (u == v) parse_fail(line_no, "loop rejected");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            parse_fail(line_no, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("missing 'p' header");
    return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph gen_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("bipartite parts must be non-empty");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return Graph(m + n, edges);
}

namespace {

// Cyclic s-stability of a sorted 1-based subset of [n].
bool is_s_stable(const std::vector<int>& subset, int n, int s) {
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int d = subset[j] - subset[i];
            if (d < s || d > n - s) return false;
        }
    return true;
}

std::string subset_label(const std::vector<int>& subset) {
    std::string out;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(subset[i]);
    }
    return out;
}

}  // namespace

Graph gen_stable_kneser(int n, int k, int s) {
    if (k < 1 || s < 1) throw std::invalid_argument("stable Kneser needs k >= 1, s >= 1");
    if (s <= 2 && n < 2 * k - 1) throw std::invalid_argument("stable Kneser needs n >= 2k-1");
    if (n < 1) throw std::invalid_argument("stable Kneser needs n >= 1");
    std::vector<std::vector<int>> verts;
    std::vector<int> cur;
    // Enumerate k-subsets of [n] in lexicographic order.
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            if (is_s_stable(cur, n, s)) verts.push_back(cur);
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (const auto& sset : verts) labels.push_back(subset_label(sset));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            bool disjoint = true;
            for (int x : verts[a])
                if (std::binary_search(verts[b].begin(), verts[b].end(), x)) {
                    disjoint = false;
                    break;
                }
            if (disjoint) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return Graph(static_cast<int>(verts.size()), edges, std::move(labels));
}

Graph graph_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(ng) * nh);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) labels.push_back(g.label(u) + "x" + h.label(v));
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int u, int v) { return u * nh + v; };
    for (auto [u, up] : g.edges())
        for (auto [v, vp] : h.edges()) {
            edges.emplace_back(id(u, v), id(up, vp));
            edges.emplace_back(id(u, vp), id(up, v));
        }
    return Graph(ng * nh, edges, std::move(labels));
}

Graph graph_join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(ng + nh);
    for (int u = 0; u < ng; ++u) labels.push_back("L" + g.label(u));
    for (int v = 0; v < nh; ++v) labels.push_back("R" + h.label(v));
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.emplace_back(u, ng + v);
    return Graph(ng + nh, edges, std::move(labels));
}

BitVec common_neighbors(const Graph& g, const BitVec& a) {
    BitVec cn(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) cn.set(v);
    for (int v : a.to_indices()) cn.and_with(g.neighbors(v));
    return cn;
}

BitVec common_neighbors(const Graph& g, const std::vector<int>& a) {
    BitVec bits(g.vertex_count());
    for (int v : a) bits.set(v);
    return common_neighbors(g, bits);
}

Hypergraph standard_kneser_representation(const Graph& g) {
    const int n = g.vertex_count();
    Hypergraph h;
    h.edges.resize(n);
    // One ground element per complement edge, named by its endpoints.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            int elem = h.ground_size++;
            h.labels.push_back("c" + g.label(u) + "-" + g.label(v));
            h.edges[u].push_back(elem);
            h.edges[v].push_back(elem);
        }
    // One private extra element per vertex, added unconditionally.
    for (int v = 0; v < n; ++v) {
        int elem = h.ground_size++;
        h.labels.push_back("x" + g.label(v));
        h.edges[v].push_back(elem);
    }
    return h;
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Hypergraph h;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "h") {
            if (have_header) parse_fail(line_no, "duplicate header");
            if (!(ls >> h.ground_size) || h.ground_size < 0)
                parse_fail(line_no, "malformed hypergraph header");
            have_header = true;
        } else if (tag == "s") {
            if (!have_header) parse_fail(line_no, "edge before header");
            std::vector<int> edge;
            long v;
            while (ls >> v) {
                if (v < 0 || v >= h.ground_size) parse_fail(line_no, "element out of range");
                edge.push_back(static_cast<int>(v));
            }
            if (edge.empty()) parse_fail(line_no, "empty hyperedge");
            std::sort(edge.begin(), edge.end());
            edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
            h.edges.push_back(std::move(edge));
        } else {
            parse_fail(line_no, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("missing 'h' header");
    for (int e = 0; e < h.ground_size; ++e) h.labels.push_back(std::to_string(e));
    return h;
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << "h " << h.ground_size << "\n";
    for (const auto& e : h.edges) {
        out << "s";
        for (int v : e) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace chromatopo
