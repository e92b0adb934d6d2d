#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "chromatopo/complex.hpp"

namespace chromatopo {

using Integer = boost::multiprecision::cpp_int;

enum class Ring { GF2, Z };

// Boundary matrices of the augmented simplicial chain complex. boundary[k]
// maps k-simplices to (k-1)-simplices; boundary[0] maps every vertex to the
// empty simplex, so all homology below is reduced.
struct ChainComplex {
    Ring ring = Ring::GF2;
    std::vector<int> sizes;  // sizes[k] = number of k-simplices, k = 0..dim
    // boundary[k][j] lists (row, sign) pairs for column j.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> boundary;
};

ChainComplex chain_complex(const Z2Complex& k, Ring ring);

// d(d(x)) = 0 for every generator; used by tests.
bool boundary_squares_to_zero(const ChainComplex& c);

struct HomologySummary {
    Ring ring = Ring::GF2;
    // Reduced Betti numbers for dims 0..dim: GF(2) ranks, or free ranks over Z.
    std::vector<int> reduced_betti;
    // Invariant factors > 1 of H_k, Z only; empty lists over GF(2).
    std::vector<std::vector<Integer>> torsion;
};

std::vector<int> betti_gf2(const Z2Complex& k);
std::vector<int> unreduced_betti_gf2(const Z2Complex& k);
HomologySummary homology_z(const Z2Complex& k);
HomologySummary homology(const Z2Complex& k, Ring ring);

// Largest d such that reduced homology vanishes in all dims -1..d:
// -2 for the empty complex, -1 when reduced H_0 is non-trivial, dim(k)+1
// when every reduced group through the top dimension vanishes. Over Z,
// torsion counts as non-trivial.
int homological_connectivity(const Z2Complex& k, Ring ring);

// Unreduced GF(2) Betti vector of a product space from the factors'
// unreduced vectors: c_k = sum_{i+j=k} a_i * b_j.
std::vector<int> kunneth_product_betti(const std::vector<int>& bx, const std::vector<int>& by);

// {"ring":"gf2|z","reduced_betti":[...]} plus "torsion" over Z. Trailing
// zero Betti entries are trimmed.
std::string homology_summary_json(const HomologySummary& s);

}  // namespace chromatopo
