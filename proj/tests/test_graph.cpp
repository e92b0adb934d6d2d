#include <doctest.h>

#include <algorithm>
#include <set>

#include "chromatopo/graph.hpp"
#include "oracles.hpp"

using namespace chromatopo;

TEST_CASE("parse_graph edge-list") {
    Graph g = parse_graph("p 3\ne 0 1\ne 1 2\ne 2 0\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 0));
}

TEST_CASE("parse_graph keeps isolated vertices") {
    Graph g = parse_graph("p 1\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_graph rejects loops and bad indices with line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("p 2\ne 0 0\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph("p 2\ne 0 1\ne 0 5\n"), doctest::Contains("line 3"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("p 2\nq 1 2\n"), std::invalid_argument);
}

TEST_CASE("parse_graph accepts DIMACS .col (1-based)") {
    Graph g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));
}

TEST_CASE("gen_complete") {
    CHECK(gen_complete(2).edge_count() == 1);
    CHECK(gen_complete(4).edge_count() == 6);
    Graph k1 = gen_complete(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK_THROWS_AS(gen_complete(0), std::invalid_argument);
}

TEST_CASE("gen_cycle") {
    Graph c4 = gen_cycle(4);
    CHECK(oracle::isomorphic(c4, gen_complete_bipartite(2, 2)));
    Graph c5 = gen_cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(!c5.is_bipartite());
    Graph c6 = gen_cycle(6);
    CHECK(c6.is_connected());
    CHECK(c6.is_bipartite());
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
}

TEST_CASE("gen_complete_bipartite") {
    Graph star = gen_complete_bipartite(1, 3);
    CHECK(star.edge_count() == 3);
    CHECK(star.degree(0) == 3);
    CHECK(gen_complete_bipartite(3, 3).edge_count() == 9);
    CHECK_THROWS_AS(gen_complete_bipartite(0, 2), std::invalid_argument);
}

namespace {

// Independent enumeration of the s-stable k-subsets of [n].
std::set<std::set<int>> stable_subsets(int n, int k, int s) {
    std::set<std::set<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = i + 1; j < cur.size(); ++j) {
                    int d = cur[j] - cur[i];
                    if (d < s || d > n - s) return;
                }
            out.insert(std::set<int>(cur.begin(), cur.end()));
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

TEST_CASE("stable Kneser graphs") {
    SUBCASE("KG(5,2) is the Petersen graph") {
        Graph kg = gen_stable_kneser(5, 2, 1);
        CHECK(kg.vertex_count() == 10);
        CHECK(kg.edge_count() == 15);
        for (int v = 0; v < 10; ++v) CHECK(kg.degree(v) == 3);
        CHECK(stable_subsets(5, 2, 1).size() == 10);
    }
    SUBCASE("SG(5,2) vertices and C5 isomorphism") {
        Graph sg = gen_stable_kneser(5, 2, 2);
        std::set<std::set<int>> expected{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}};
        CHECK(stable_subsets(5, 2, 2) == expected);
        std::set<std::string> labels(sg.labels().begin(), sg.labels().end());
        CHECK(labels == std::set<std::string>{"1.3", "1.4", "2.4", "2.5", "3.5"});
        CHECK(oracle::isomorphic(sg, gen_cycle(5)));
    }
    SUBCASE("KG(3,1) is K3") {
        CHECK(oracle::isomorphic(gen_stable_kneser(3, 1, 1), gen_complete(3)));
    }
    SUBCASE("s = 3 generators enumerate the right vertex sets") {
        Graph g = gen_stable_kneser(9, 2, 3);
        CHECK(static_cast<std::size_t>(g.vertex_count()) == stable_subsets(9, 2, 3).size());
        CHECK(g.vertex_count() == 18);  // 2-subsets of [9] with cyclic gaps in [3,6]
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(gen_stable_kneser(2, 2, 1), std::invalid_argument);
        CHECK_THROWS_AS(gen_stable_kneser(5, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("graph_product") {
    SUBCASE("K2 x K3 is C6") {
        CHECK(oracle::isomorphic(graph_product(gen_complete(2), gen_complete(3)), gen_cycle(6)));
    }
    SUBCASE("product with an edgeless graph is edgeless") {
        Graph edgeless(3, {});
        CHECK(graph_product(gen_complete(4), edgeless).edge_count() == 0);
    }
    SUBCASE("K2 x K2 is a perfect matching on 4 vertices") {
        Graph p = graph_product(gen_complete(2), gen_complete(2));
        CHECK(p.vertex_count() == 4);
        CHECK(p.edge_count() == 2);
        for (int v = 0; v < 4; ++v) CHECK(p.degree(v) == 1);
        // Adjacency against the definition, over all 16 pairs.
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
                for (int u2 = 0; u2 < 2; ++u2)
                    for (int v2 = 0; v2 < 2; ++v2)
                        CHECK(p.adjacent(u * 2 + v, u2 * 2 + v2) == (u != u2 && v != v2));
    }
}

TEST_CASE("graph_join") {
    CHECK(oracle::isomorphic(graph_join(gen_complete(2), gen_complete(2)), gen_complete(4)));
    SUBCASE("edge count identity") {
        for (const auto& [g, h] : {std::pair{gen_cycle(5), gen_complete(3)},
                                   std::pair{gen_complete_bipartite(1, 3), gen_cycle(4)}}) {
            Graph j = graph_join(g, h);
            CHECK(j.edge_count() ==
                  g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count());
        }
    }
    SUBCASE("cone over a graph") {
        Graph cone = graph_join(gen_complete(1), gen_cycle(5));
        CHECK(cone.vertex_count() == 6);
        CHECK(cone.degree(0) == 5);
    }
}

TEST_CASE("common_neighbors") {
    Graph k3 = gen_complete(3);
    CHECK(common_neighbors(k3, std::vector<int>{0}).to_indices() == std::vector<int>{1, 2});
    SUBCASE("CN(empty) is the whole vertex set") {
        for (const Graph& g : {gen_cycle(5), gen_complete(4), Graph(3, {})})
            CHECK(common_neighbors(g, std::vector<int>{}).count() == g.vertex_count());
    }
    Graph c4 = gen_cycle(4);
    CHECK(common_neighbors(c4, std::vector<int>{0, 2}).to_indices() == std::vector<int>{1, 3});
}

TEST_CASE("standard Kneser representation") {
    SUBCASE("K3 gives three pairwise disjoint edges") {
        Hypergraph h = standard_kneser_representation(gen_complete(3));
        CHECK(h.edges.size() == 3);
        for (const auto& e : h.edges) CHECK(e.size() == 1);  // complement is edgeless
    }
    SUBCASE("edgeless pair shares a complement edge") {
        Hypergraph h = standard_kneser_representation(Graph(2, {}));
        std::vector<int> inter;
        std::set_intersection(h.edges[0].begin(), h.edges[0].end(), h.edges[1].begin(),
                              h.edges[1].end(), std::back_inserter(inter));
        CHECK(inter.size() == 1);
    }
    SUBCASE("disjointness pattern equals adjacency") {
        for (const Graph& g :
             {gen_cycle(5), gen_complete(4), gen_complete_bipartite(2, 3), Graph(3, {})}) {
            Hypergraph h = standard_kneser_representation(g);
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = u + 1; v < g.vertex_count(); ++v) {
                    std::vector<int> inter;
                    std::set_intersection(h.edges[u].begin(), h.edges[u].end(),
                                          h.edges[v].begin(), h.edges[v].end(),
                                          std::back_inserter(inter));
                    CHECK(inter.empty() == g.adjacent(u, v));
                }
        }
    }
}

TEST_CASE("generated graphs are symmetric and irreflexive") {
    for (const Graph& g : {gen_complete(5), gen_cycle(7), gen_complete_bipartite(3, 3),
                           gen_stable_kneser(5, 2, 1), graph_product(gen_complete(2), gen_cycle(5)),
                           graph_join(gen_cycle(4), gen_complete(1))}) {
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK(!g.adjacent(u, u));
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
}

TEST_CASE("hypergraph text format") {
    Hypergraph h = parse_hypergraph("h 4\ns 0 1\ns 2 3\n");
    CHECK(h.ground_size == 4);
    CHECK(h.edges.size() == 2);
    CHECK(serialize_hypergraph(h) == "h 4\ns 0 1\ns 2 3\n");
    CHECK_THROWS_WITH_AS(parse_hypergraph("h 2\ns 0 7\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_hypergraph("s 0\n"), std::invalid_argument);
}
