#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "chromatopo/complex.hpp"
#include "chromatopo/graph.hpp"

namespace chromatopo {

using Rational = boost::multiprecision::cpp_rational;

// Orbit complex of sd(K) under the free involution, together with the
// section and the characteristic GF(2) edge cocycle of the double cover.
struct QuotientData {
    Z2Complex quotient;                          // no involution
    std::vector<std::string> section;            // quotient vertex -> chosen sd(K) vertex label
    std::map<std::pair<int, int>, int> cocycle_w;  // quotient edge (u < v) -> 0/1
};

// One barycentric subdivision is applied first, unconditionally. For a
// quotient edge {a,b} with section lifts sa, sb: w = 0 if {sa, sb} is a
// simplex upstairs, w = 1 if {sa, nu(sb)} is; exactly one holds.
QuotientData quotient_complex(const Z2Complex& k);

// Facet list of the quotient followed by `w <u> <v> <0|1>` lines.
std::string serialize_quotient(const QuotientData& q);

// Largest n such that the n-th cup power of the characteristic class of the
// double cover is non-zero in H^n(K/Z2, GF(2)). Cup powers are evaluated on
// the ordered orbit complex; the value does not depend on the order chosen.
// Rejects the empty complex.
int cohomological_index(const Z2Complex& k);

// Same with an explicit orbit ordering (orbit_rank must be a permutation of
// 0..#orbits-1, orbits numbered by their smallest vertex). Test hook for the
// order-independence property.
int cohomological_index_with_order(const Z2Complex& k, const std::vector<int>& orbit_rank);

// Csorba's construction: the graph on the non-empty simplices of k, where
// sigma~tau is an edge iff sigma is a face of nu(tau) or tau a face of
// nu(sigma). B(result) has the homology of k.
Graph csorba_graph(const Z2Complex& k);

struct SignedVertexMap {
    Z2Complex domain;
    Z2Complex codomain;
    std::vector<int> assignment;  // domain vertex -> codomain vertex
};

bool map_is_simplicial(const SignedVertexMap& m);
bool map_is_equivariant(const SignedVertexMap& m);

// `<domain-vertex-label> -> <codomain-vertex-label>` lines.
std::string serialize_signed_vertex_map(const SignedVertexMap& m);

// The simplicial Z2-map sd(B(K_{d+1})) -> boundary of the d-dimensional
// cross-polytope: a vertex sigma (a simplex of B(K_{d+1}), vertices ordered
// by absolute value v_0..v_m) maps to s*e_k where mu(v) = (-1)^v v, k is one
// plus the number of sign changes along mu(v_0)..mu(v_m) and s = sign(mu(v_0)).
SignedVertexMap lambda_map(int d);

// Piecewise-affine odd map R^{d+1} -> R^d built from lambda extended by zero
// on the all-positive and all-negative subdivision vertices, evaluated with
// exact rational arithmetic: h(z) = |z|_inf * lambda'(z normalized). For z
// with mixed signs, |z|_inf <= d * |h(z)|_inf.
std::vector<Rational> h_map_eval(const std::vector<Rational>& z, int d);

}  // namespace chromatopo
