#pragma once

#include <string>
#include <vector>

#include "chromatopo/graph.hpp"

namespace chromatopo {

// Finite abstract simplicial complex with labeled vertices and an optional
// free simplicial involution. Stored by facets; the downward closure is
// materialized per dimension at construction time. Immutable afterwards.
//
// Involutions are required to be strongly free: no simplex contains a vertex
// together with its image. Box complexes satisfy this since their two sides
// are disjoint.
class Z2Complex {
public:
    Z2Complex() = default;  // the empty complex

    Z2Complex(std::vector<std::string> labels, std::vector<std::vector<int>> facets,
              std::vector<int> involution = {});

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Canonical facet list: each facet sorted, facets in lexicographic order,
    // forming an antichain.
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    bool has_involution() const { return !involution_.empty(); }
    int involution(int v) const { return involution_[v]; }
    const std::vector<int>& involution_map() const { return involution_; }

    int dim() const;  // -1 for the empty complex
    bool empty() const { return facets_.empty(); }

    // Simplices of dimension k as sorted vertex lists, lexicographically
    // ordered within each dimension.
    const std::vector<std::vector<int>>& simplices(int k) const { return by_dim_[k]; }
    int num_dims() const { return static_cast<int>(by_dim_.size()); }  // dim()+1
    std::size_t simplex_count() const;

    // Index of a sorted simplex within its dimension, or -1.
    int index_of(int k, const std::vector<int>& simplex) const;
    bool contains(std::vector<int> simplex) const;

    // Image of a sorted simplex under the involution, sorted.
    std::vector<int> involution_image(const std::vector<int>& simplex) const;

private:
    void validate() const;
    void build_closure();

    std::vector<std::string> labels_;
    std::vector<std::vector<int>> facets_;
    std::vector<int> involution_;
    std::vector<std::vector<std::vector<int>>> by_dim_;
};

// Box complex B(G): simplices are the signed sets A' (+) and A'' (-) with
// A', A'' disjoint, G[A',A''] complete and both common-neighbor sets
// non-empty. Facets are the Galois-closed biclique pairs. The involution
// swaps signs. Only signed vertices that occur in a simplex are present.
Z2Complex box_complex(const Graph& g);

// Box complex B0(G): as B(G) but without the common-neighbor conditions.
// Contains B(G) and the two full one-sided facets; all 2|V| signed vertices
// are present.
Z2Complex box0_complex(const Graph& g);

// Neighborhood complex N(G): subsets of V with a common neighbor. Facets are
// the maximal vertex neighborhoods. No involution.
Z2Complex neighborhood_complex(const Graph& g);

// Boundary of the d-dimensional cross-polytope: vertices +/-1..+/-d, one
// facet per sign pattern, antipodal involution. A simplicial (d-1)-sphere.
Z2Complex cross_polytope_boundary(int d);

// Join: simplices are all unions of a simplex of k and a simplex of l, on
// the disjoint union of the vertex sets (labels are side-tagged). The result
// carries an involution when both inputs do.
Z2Complex complex_join(const Z2Complex& k, const Z2Complex& l);

// Join with a two-point complex (poles swapped by the extended involution
// when k has one).
Z2Complex suspension(const Z2Complex& k);

// First barycentric subdivision: vertices are the non-empty simplices,
// simplices are the chains. If vertex_simplices is non-null it receives, for
// each sd vertex, the simplex of k it stands for.
Z2Complex barycentric_subdivision(const Z2Complex& k,
                                  std::vector<std::vector<int>>* vertex_simplices = nullptr);

// Facet-list text: one facet per line, vertex labels comma-separated, sorted
// canonically. parse_complex derives the sign-swap involution when every
// label is of the form +x/-x and the pairing is total.
std::string serialize_complex(const Z2Complex& k);
Z2Complex parse_complex(const std::string& text);

}  // namespace chromatopo
