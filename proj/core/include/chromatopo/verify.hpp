#pragma once

#include <string>
#include <vector>

#include "chromatopo/bounds.hpp"
#include "chromatopo/complex.hpp"
#include "chromatopo/graph.hpp"

namespace chromatopo {

struct CheckResult {
    std::string name;
    std::string instance;
    std::string status;  // "pass", "fail" or "skip"
    std::string lhs;     // compared values, kept verbatim for diagnosis
    std::string rhs;

    bool passed() const { return status == "pass"; }
};

// susp(B(G)) and B0(G) have equal Betti vectors over GF(2) and over Z.
CheckResult check_susp_b_vs_b0(const Graph& g, const std::string& instance);

// B(G) and N(G) have equal Betti vectors over both rings.
CheckResult check_nbhd_vs_box(const Graph& g, const std::string& instance);

// B(G) and the order complex of Hom(K2,G) have equal Betti vectors.
CheckResult check_hom_vs_box(const Graph& g, const std::string& instance);

// The explicit pair decomposition between B0(G*H) and B0(G)*B0(H):
// f(A) = (A restricted to G, A restricted to H), g its inverse. Verified as
// mutually inverse order isomorphisms of the face posets (hence a simplicial
// isomorphism of the subdivisions), equivariant, exhaustively vertexwise.
CheckResult check_join_b0_iso(const Graph& g, const Graph& h, const std::string& instance);

// B(G*H) and susp(B(G)*B(H)) have equal Betti vectors over both rings.
CheckResult check_join_b_susp(const Graph& g, const Graph& h, const std::string& instance);

// Unreduced GF(2) Betti of B(GxH) equals the Kunneth convolution of the
// factors' unreduced vectors.
CheckResult check_product_kunneth(const Graph& g, const Graph& h, const std::string& instance);

// Betti(B(csorba_graph(K))) = Betti(K) over both rings.
CheckResult check_csorba_roundtrip(const Z2Complex& k, const std::string& instance);

// bounds_ladder with the standard Kneser representation; passes iff the
// violations list is empty.
CheckResult check_arrow_chain(const Graph& g, const SizeCaps& caps, const std::string& instance);

struct CorpusEntry {
    std::string name;
    Graph graph;
    bool homology_checks_only = false;  // size-gated members
};

// The fixed desk-scale corpus the structural suites run on.
std::vector<CorpusEntry> standard_corpus();

// Named suites: examples, arrows, joins, products, csorba, appendix.
std::vector<CheckResult> run_suite(const std::string& suite, const SizeCaps& caps = {});
std::vector<std::string> suite_names();

std::string check_results_table(const std::vector<CheckResult>& results);
std::string check_results_json(const std::vector<CheckResult>& results);

}  // namespace chromatopo
