// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all exact) and prints one pass/fail line per criterion. Exit status is
// the number of failed criteria.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "chromatopo/bounds.hpp"
#include "chromatopo/complex.hpp"
#include "chromatopo/homology.hpp"
#include "chromatopo/verify.hpp"
#include "chromatopo/z2tools.hpp"

using namespace chromatopo;

namespace {

struct Criterion {
    std::string label;
    std::vector<CheckResult> results;

    bool passed() const {
        for (const auto& r : results)
            if (r.status == "fail") return false;
        return true;
    }
};

std::vector<CheckResult> filter(const std::vector<CheckResult>& all,
                                const std::set<std::string>& names) {
    std::vector<CheckResult> out;
    for (const auto& r : all)
        if (names.count(r.name)) out.push_back(r);
    return out;
}

CheckResult expect_eq(const std::string& name, const std::string& instance, int got, int want) {
    return {name, instance, got == want ? "pass" : "fail", std::to_string(got),
            std::to_string(want)};
}

std::vector<CheckResult> conn_b0_criterion() {
    std::vector<CheckResult> out;
    out.push_back(expect_eq("conn_b0", "empty graph", conn_b0(Graph()), -2));
    out.push_back(expect_eq("conn_b0", "one isolated vertex", conn_b0(Graph(1, {})), -1));
    out.push_back(expect_eq("conn_b0", "two isolated vertices", conn_b0(Graph(2, {})), -1));
    for (const auto& entry : standard_corpus()) {
        const Graph& g = entry.graph;
        if (g.edge_count() == 0) continue;
        if (!g.is_connected() || g.is_bipartite())
            out.push_back(
                expect_eq("conn_b0", entry.name + " (bipartite/disconnected)", conn_b0(g), 0));
    }
    for (int n = 3; n <= 5; ++n)
        out.push_back(
            expect_eq("conn_b0", "K" + std::to_string(n), conn_b0(gen_complete(n)), n - 2));
    return out;
}

std::vector<CheckResult> chind_criterion() {
    std::vector<CheckResult> out;
    for (int d = 1; d <= 3; ++d)
        out.push_back(expect_eq("chind_sphere", "crosspoly" + std::to_string(d + 1),
                                cohomological_index(cross_polytope_boundary(d + 1)), d));
    for (const auto& entry : standard_corpus()) {
        Z2Complex b = box_complex(entry.graph);
        Z2Complex b0 = box0_complex(entry.graph);
        int chind_b = b.empty() ? -1 : cohomological_index(b);
        int chind_b0 = b0.empty() ? -1 : cohomological_index(b0);
        out.push_back(expect_eq("chind_b0_is_chind_b_plus_1", entry.name, chind_b0, chind_b + 1));
    }
    auto s0 = cross_polytope_boundary(1);
    auto square = cross_polytope_boundary(2);
    auto bk3 = box_complex(gen_complete(3));
    std::vector<std::pair<Z2Complex, Z2Complex>> pairs{{s0, square}, {bk3, s0}, {bk3, bk3}};
    int idx = 0;
    for (const auto& [a, b] : pairs) {
        ++idx;
        out.push_back(expect_eq("chind_join_additivity", "pair" + std::to_string(idx),
                                cohomological_index(complex_join(a, b)),
                                cohomological_index(a) + cohomological_index(b) + 1));
    }
    return out;
}

std::vector<CheckResult> dolnikov_criterion(const SizeCaps& caps) {
    std::vector<CheckResult> out;
    Hypergraph k52;
    k52.ground_size = 5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k52.edges.push_back({i, j});
    int cd = colorability_defect(k52);
    int chi = chromatic_number(gen_stable_kneser(5, 2, 1));
    out.push_back(expect_eq("cd_complete_2_uniform", "[5] choose 2", cd, 3));
    out.push_back(expect_eq("cd_tight_for_kneser", "KG(5,2)", cd, chi));
    for (const auto& entry : standard_corpus()) {
        Hypergraph repr = standard_kneser_representation(entry.graph);
        if (repr.ground_size > caps.cd_max_ground) {
            out.push_back({"cd_le_chi", entry.name, "skip", "skipped:size", ""});
            continue;
        }
        int cd_g = colorability_defect(repr, caps);
        int chi_g = chromatic_number(entry.graph, caps);
        out.push_back({"cd_le_chi", entry.name, cd_g <= chi_g ? "pass" : "fail",
                       std::to_string(cd_g), "<= " + std::to_string(chi_g)});
    }
    return out;
}

}  // namespace

int main() {
    SizeCaps caps;
    auto examples = run_suite("examples", caps);
    std::vector<Criterion> criteria;

    criteria.push_back(
        {"criterion 1: paper example homology (complete graphs, cycles, complete bipartite)",
         filter(examples,
                {"box_complete", "box0_complete", "box0_equals_cross_polytope", "box_even_cycle",
                 "box0_even_cycle", "box_odd_cycle", "box0_odd_cycle", "box_bipartite",
                 "box0_bipartite"})});
    criteria.push_back({"criterion 2: Kneser and Schrijver box complexes",
                        filter(examples, {"box_kneser_wedge", "box_schrijver_sphere", "chi_kneser",
                                          "chi_schrijver"})});
    criteria.push_back({"criterion 3: conn(B0) decision algorithm branches", conn_b0_criterion()});
    criteria.push_back({"criterion 4: cohomological index values", chind_criterion()});
    criteria.push_back(
        {"criterion 5: arrow-chain inequalities on the corpus", run_suite("arrows", caps)});
    {
        auto structural = filter(examples, {"susp_b_vs_b0", "nbhd_vs_box", "hom_vs_box"});
        for (const auto& r : run_suite("joins", caps)) structural.push_back(r);
        for (const auto& r : run_suite("products", caps)) structural.push_back(r);
        for (const auto& r : run_suite("csorba", caps)) structural.push_back(r);
        criteria.push_back({"criterion 6: structural theorem suite", structural});
    }
    criteria.push_back({"criterion 7: appendix maps", run_suite("appendix", caps)});
    criteria.push_back(
        {"criterion 8: Dol'nikov tightness and cd <= chi", dolnikov_criterion(caps)});

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = c.passed();
        if (!ok) ++failures;
        std::cout << (ok ? "PASS " : "FAIL ") << c.label << " [" << c.results.size()
                  << " checks]\n";
        if (!ok)
            for (const auto& r : c.results)
                if (r.status == "fail")
                    std::cout << "  fail: " << r.name << " " << r.instance << " lhs=" << r.lhs
                              << " rhs=" << r.rhs << "\n";
    }
    return failures;
}
