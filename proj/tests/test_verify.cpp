#include <doctest.h>

#include "chromatopo/verify.hpp"

using namespace chromatopo;

TEST_CASE("structural checks on single instances") {
    CHECK(check_susp_b_vs_b0(gen_complete(3), "K3").passed());
    CHECK(check_susp_b_vs_b0(gen_cycle(5), "C5").passed());
    CHECK(check_susp_b_vs_b0(Graph(3, {{0, 1}}), "K2+isolated").passed());
    CHECK(check_nbhd_vs_box(Graph(3, {{0, 1}}), "K2+isolated").passed());
    CHECK(check_nbhd_vs_box(gen_complete(4), "K4").passed());
    CHECK(check_hom_vs_box(gen_complete(2), "K2").passed());
    CHECK(check_join_b0_iso(gen_complete(1), gen_complete(2), "(K1,K2)").passed());
    CHECK(check_join_b_susp(gen_complete(1), gen_complete(1), "(K1,K1)").passed());
    CHECK(check_product_kunneth(gen_complete(2), gen_complete(3), "(K2,K3)").passed());
    CHECK(check_csorba_roundtrip(cross_polytope_boundary(2), "square").passed());
    CHECK(check_arrow_chain(gen_complete(3), {}, "K3").passed());
}

TEST_CASE("check results carry both sides for diagnosis") {
    CheckResult r = check_susp_b_vs_b0(gen_cycle(6), "C6");
    CHECK(r.passed());
    CHECK(r.lhs.find("gf2") != std::string::npos);
    CHECK(r.rhs.find("z") != std::string::npos);
}

TEST_CASE("standard corpus") {
    auto corpus = standard_corpus();
    CHECK(corpus.size() == 18);
    int gated = 0;
    for (const auto& e : corpus) gated += e.homology_checks_only ? 1 : 0;
    CHECK(gated == 1);
    CHECK(corpus.front().name == "K1");
    CHECK(corpus.back().name == "C5*C5");
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 6);
    CHECK_THROWS_AS(run_suite("nonsense"), std::invalid_argument);
}

TEST_CASE("fast suites pass end to end") {
    for (const char* name : {"products", "joins"}) {
        auto results = run_suite(name);
        CHECK(!results.empty());
        for (const auto& r : results) CHECK(r.passed());
    }
}

TEST_CASE("result rendering") {
    std::vector<CheckResult> results{{"demo", "inst", "pass", "a\"b", "[1,2]"}};
    std::string table = check_results_table(results);
    CHECK(table.find("pass") != std::string::npos);
    std::string json = check_results_json(results);
    CHECK(json.find("\\\"") != std::string::npos);
    CHECK(json.find("\"status\":\"pass\"") != std::string::npos);
}
