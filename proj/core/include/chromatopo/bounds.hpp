#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromatopo/graph.hpp"
#include "chromatopo/poset.hpp"

namespace chromatopo {

// Per-field limits for the exact searches; every parameter here is NP-hard
// or worse, so fields exceeding their cap are reported as skipped rather
// than computed.
struct SizeCaps {
    int zig_max_vertices = 8;
    int xind_max_elements = 200;
    int cd_max_ground = 20;
    int chromatic_max_vertices = 64;  // chi and omega
};

// Parses `field=value` pairs separated by commas: zig, xind, cd, chi
// (omega is an alias for chi).
SizeCaps parse_size_caps(const std::string& spec, SizeCaps base = {});

int clique_number(const Graph& g);
int chromatic_number(const Graph& g, const SizeCaps& caps = {});

// Largest n such that g contains a K_{k,l} biclique (not necessarily
// induced) for every k,l >= 1 with k+l = n.
int biclique_parameter(const Graph& g);

// Minimum number of vertices to remove so the surviving hyperedges admit a
// 2-coloring with no monochromatic edge.
int colorability_defect(const Hypergraph& h, const SizeCaps& caps = {});

// Minimum over proper colorings of the size of a largest color-increasing
// alternating biclique. A single vertex counts as a zigzag of size 1.
int zigzag_number(const Graph& g, const SizeCaps& caps = {});

// Minimum t admitting an order-preserving equivariant map into Q_t (signed
// levels +-1..+-(t+1), ordered by absolute value). Returns -1 for the empty
// poset. Exact.
int cross_index(const Poset& p, const SizeCaps& caps = {});

// height(p) - 1, with the longest-chain witness map built and verified.
int cross_index_upper(const Poset& p);

// Decision algorithm for conn(B0(G)): -2 with no vertices, -1 with vertices
// but no edges, 0 when bipartite or disconnected, else the homological
// connectivity of B0(G) over Z.
int conn_b0(const Graph& g);

struct BoundsField {
    std::optional<int> value;
    std::string note;  // "skipped:size", "surrogate", "empty-complex", "empty-poset"

    bool present() const { return value.has_value(); }
};

// One graph's full ladder: exact values, bracketing intervals for ind/coind,
// and the consistency check results.
struct BoundsReport {
    std::string graph_name;
    BoundsField omega, chi, b_param, zig, cd;
    BoundsField conn_b0_z, connz2_b, connz2_b0, chind_b, chind_b0;
    BoundsField xind_hom, xind_upper, hconnz_b;
    std::optional<std::pair<int, int>> coind_b_interval;  // [omega-2, chind_b]
    std::optional<std::pair<int, int>> ind_b_interval;    // [chind_b, dim B(G)]
    std::vector<std::string> violations;                  // must stay empty
};

BoundsReport bounds_ladder(const Graph& g, const Hypergraph* repr = nullptr,
                           const SizeCaps& caps = {}, const std::string& name = "");

std::string bounds_report_json(const BoundsReport& r);
std::string bounds_report_csv_header();
std::string bounds_report_csv_row(const BoundsReport& r);
std::string bounds_report_table(const BoundsReport& r);

}  // namespace chromatopo
