#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromatopo/bits.hpp"

namespace chromatopo {

// Thrown when an exact computation is refused because the input exceeds the
// configured size cap for that parameter.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple finite loopless graph on vertices 0..n-1. Adjacency is stored as one
// bit row per vertex; values are immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const BitVec& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return adj_[u].count(); }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Edges as sorted (u < v) pairs, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;  // true for the empty graph
    bool is_bipartite() const;

private:
    int n_ = 0;
    std::vector<BitVec> adj_;
    std::vector<std::string> labels_;
};

// Edge-list text (`p <n>` header, `e <u> <v>` lines, 0-based) or DIMACS .col
// (`p edge <n> <m>`, 1-based). Malformed lines, out-of-range indices and
// loops are reported with their line number.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph gen_complete(int n);
Graph gen_cycle(int n);
Graph gen_complete_bipartite(int m, int n);

// Graph on the s-stable k-subsets of [n] (1-based), adjacency = disjointness.
// s=1 gives the Kneser graph KG(n,k), s=2 the Schrijver graph SG(n,k).
Graph gen_stable_kneser(int n, int k, int s);

// Categorical product: (u,v)(u',v') is an edge iff uu' in G and vv' in H.
Graph graph_product(const Graph& g, const Graph& h);

// Join: disjoint copies plus all cross edges.
Graph graph_join(const Graph& g, const Graph& h);

// Common neighbors of a vertex set; CN(empty) is the full vertex set.
BitVec common_neighbors(const Graph& g, const BitVec& a);
BitVec common_neighbors(const Graph& g, const std::vector<int>& a);

struct Hypergraph {
    int ground_size = 0;
    std::vector<std::vector<int>> edges;  // indexed, not deduplicated
    std::vector<std::string> labels;      // ground element names
};

// Kneser representation of g: one hyperedge per vertex, built from the
// vertex's incident edges in the complement graph plus one private extra
// element. Hyperedges e(u), e(v) are disjoint iff uv is an edge of g.
Hypergraph standard_kneser_representation(const Graph& g);

// `h <m>` header then `s <v> <v> ...` lines (0-based).
Hypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace chromatopo
