#pragma once

#include <string>
#include <vector>

#include "chromatopo/complex.hpp"
#include "chromatopo/graph.hpp"

namespace chromatopo {

// Finite partial order with an optional order-preserving free involution.
class Poset {
public:
    Poset() = default;
    Poset(std::vector<std::string> labels, std::vector<std::vector<char>> leq,
          std::vector<int> involution = {});

    int size() const { return static_cast<int>(labels_.size()); }
    bool leq(int a, int b) const { return leq_[a][b]; }
    bool less(int a, int b) const { return a != b && leq_[a][b]; }
    const std::string& label(int i) const { return labels_[i]; }

    bool has_involution() const { return !involution_.empty(); }
    int involution(int i) const { return involution_[i]; }

    // Longest chain ending at each element (1-based), and the poset height
    // (max chain size; 0 for the empty poset).
    std::vector<int> chain_heights() const;
    int height() const;

    // Covering pairs a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

private:
    void validate() const;

    std::vector<std::string> labels_;
    std::vector<std::vector<char>> leq_;
    std::vector<int> involution_;
};

// Hom(K2, G): pairs of disjoint non-empty cross-complete vertex sets,
// ordered componentwise, with the swap involution.
Poset hom_poset(const Graph& g);

// Number of elements Hom(K2, G) would have; cheap pre-check for size caps.
std::size_t hom_poset_size(const Graph& g);

// Non-empty simplices ordered by inclusion; inherits the involution.
Poset face_poset(const Z2Complex& k);

// Order complex: simplices are the chains of p; inherits the involution.
Z2Complex order_complex(const Poset& p);

}  // namespace chromatopo
