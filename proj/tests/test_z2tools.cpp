#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "chromatopo/bits.hpp"
#include "chromatopo/homology.hpp"
#include "chromatopo/z2tools.hpp"
#include "oracles.hpp"

using namespace chromatopo;

namespace {

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Independent cohomological index: cup powers of the exported cocycle on the
// simplicial sd-quotient, with vertices in index order.
int chind_via_sd_quotient(const Z2Complex& k) {
    QuotientData q = quotient_complex(k);
    const Z2Complex& quot = q.quotient;
    const int dim = quot.dim();
    auto w_edge = [&](int a, int b) {
        return q.cocycle_w.at({std::min(a, b), std::max(a, b)});
    };
    std::vector<int> prev;  // w^{n-1} per (n-1)-simplex
    for (int n = 1; n <= dim; ++n) {
        const auto& level = quot.simplices(n);
        std::vector<int> cur(level.size(), 0);
        bool any = false;
        for (std::size_t j = 0; j < level.size(); ++j) {
            const auto& s = level[j];
            int val = 1;
            for (std::size_t i = 1; i < s.size(); ++i) val &= w_edge(s[i - 1], s[i]);
            cur[j] = val;
            any = any || val;
        }
        if (!any) return n - 1;
        const auto& faces = quot.simplices(n - 1);
        std::vector<BitVec> rows(faces.size(), BitVec(static_cast<int>(level.size())));
        for (std::size_t j = 0; j < level.size(); ++j) {
            const auto& s = level[j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                rows[quot.index_of(n - 1, face)].flip(static_cast<int>(j));
            }
        }
        BitVec target(static_cast<int>(level.size()));
        for (std::size_t j = 0; j < level.size(); ++j)
            if (cur[j]) target.set(static_cast<int>(j));
        if (gf2_in_span(std::move(rows), target)) return n - 1;
        prev = std::move(cur);
    }
    return dim;
}

}  // namespace

TEST_CASE("quotient of the antipodal square") {
    QuotientData q = quotient_complex(cross_polytope_boundary(2));
    // sd is an 8-cycle, the quotient a 4-cycle.
    CHECK(q.quotient.vertex_count() == 4);
    CHECK(q.quotient.simplices(1).size() == 4);
    int total = 0;
    for (const auto& [edge, w] : q.cocycle_w) total += w;
    CHECK(total % 2 == 1);  // the class is non-trivial
}

TEST_CASE("quotient of the antipodal octahedron is a projective plane") {
    QuotientData q = quotient_complex(cross_polytope_boundary(3));
    CHECK(q.quotient.vertex_count() == 13);  // half of the 26 sd vertices
    CHECK(trimmed(betti_gf2(q.quotient)) == std::vector<int>{0, 1, 1});
    auto z = homology_z(q.quotient);
    CHECK(trimmed(z.reduced_betti).empty());
    REQUIRE(z.torsion.size() >= 2);
    CHECK(z.torsion[1] == std::vector<Integer>{2});
    SUBCASE("the cocycle really is a cocycle") {
        auto w_edge = [&](int a, int b) {
            return q.cocycle_w.at({std::min(a, b), std::max(a, b)});
        };
        for (const auto& t : q.quotient.simplices(2))
            CHECK((w_edge(t[0], t[1]) + w_edge(t[1], t[2]) + w_edge(t[0], t[2])) % 2 == 0);
    }
}

TEST_CASE("quotient of S0 is a point") {
    QuotientData q = quotient_complex(cross_polytope_boundary(1));
    CHECK(q.quotient.vertex_count() == 1);
    CHECK(q.cocycle_w.empty());
}

TEST_CASE("quotient rejects complexes without an involution") {
    CHECK_THROWS_AS(quotient_complex(neighborhood_complex(gen_cycle(5))), std::invalid_argument);
}

TEST_CASE("double cover reconstructed from the cocycle matches the subdivision") {
    for (const Z2Complex& k :
         {cross_polytope_boundary(2), cross_polytope_boundary(3), box_complex(gen_complete(3))}) {
        QuotientData q = quotient_complex(k);
        Z2Complex sd = barycentric_subdivision(k);
        std::map<std::string, int> sd_index;
        for (int v = 0; v < sd.vertex_count(); ++v) sd_index[sd.label(v)] = v;
        // Lift vertex (orbit, sign): sign 0 is the section, 1 its mate.
        auto lift = [&](int orbit, int sign) {
            int rep = sd_index.at(q.section[orbit]);
            return sign == 0 ? rep : sd.involution(rep);
        };
        auto w_edge = [&](int a, int b) {
            return q.cocycle_w.at({std::min(a, b), std::max(a, b)});
        };
        std::set<std::vector<int>> lifted;
        for (const auto& f : q.quotient.facets()) {
            for (int base : {0, 1}) {
                std::vector<int> up;
                for (int v : f) up.push_back(lift(v, v == f[0] ? base : base ^ w_edge(f[0], v)));
                std::sort(up.begin(), up.end());
                lifted.insert(up);
            }
        }
        std::set<std::vector<int>> expected(sd.facets().begin(), sd.facets().end());
        CHECK(lifted == expected);
    }
}

TEST_CASE("cohomological index of spheres and box complexes") {
    for (int d = 1; d <= 3; ++d) CHECK(cohomological_index(cross_polytope_boundary(d + 1)) == d);
    CHECK(cohomological_index(box0_complex(gen_complete(3))) == 2);
    CHECK(cohomological_index(box_complex(gen_complete(3))) == 1);
    CHECK_THROWS_AS(cohomological_index(Z2Complex()), std::invalid_argument);
}

TEST_CASE("cohomological index does not depend on the cup-product order") {
    std::mt19937 rng(7);
    for (const Z2Complex& k : {cross_polytope_boundary(3), box_complex(gen_complete(4)),
                               box0_complex(gen_cycle(5))}) {
        int reference = cohomological_index(k);
        std::vector<int> rank(k.vertex_count() / 2);
        std::iota(rank.begin(), rank.end(), 0);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(rank.begin(), rank.end(), rng);
            CHECK(cohomological_index_with_order(k, rank) == reference);
        }
    }
}

TEST_CASE("cohomological index brackets") {
    for (const Z2Complex& k :
         {box_complex(gen_complete(3)), box_complex(gen_complete(4)), box0_complex(gen_cycle(4)),
          box0_complex(gen_cycle(5)), box_complex(gen_cycle(6)), cross_polytope_boundary(4)}) {
        int ci = cohomological_index(k);
        CHECK(ci >= 1 + homological_connectivity(k, Ring::GF2));
        CHECK(ci <= k.dim());
    }
}

TEST_CASE("cohomological index is additive over joins, plus one") {
    auto s0 = cross_polytope_boundary(1);
    auto square = cross_polytope_boundary(2);
    auto bk3 = box_complex(gen_complete(3));
    for (const auto& [a, b] : {std::pair{s0, square}, std::pair{bk3, s0}, std::pair{bk3, bk3}}) {
        CHECK(cohomological_index(complex_join(a, b)) ==
              cohomological_index(a) + cohomological_index(b) + 1);
    }
}

TEST_CASE("orbit-model index agrees with the subdivided simplicial quotient") {
    for (const Z2Complex& k :
         {cross_polytope_boundary(2), cross_polytope_boundary(3), box_complex(gen_complete(3)),
          box0_complex(gen_complete(3)), box_complex(gen_cycle(6))}) {
        CHECK(cohomological_index(k) == chind_via_sd_quotient(k));
    }
}

TEST_CASE("Csorba construction") {
    SUBCASE("the antipodal square gives a cubic graph on 8 vertices") {
        Graph g = csorba_graph(cross_polytope_boundary(2));
        CHECK(g.vertex_count() == 8);
        CHECK(g.edge_count() == 12);
        for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    }
    SUBCASE("roundtrip homology for the square") {
        Graph g = csorba_graph(cross_polytope_boundary(2));
        CHECK(trimmed(betti_gf2(box_complex(g))) == std::vector<int>{0, 1});
    }
    SUBCASE("two swapped points give K2") {
        Graph g = csorba_graph(cross_polytope_boundary(1));
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 1);
        CHECK(trimmed(betti_gf2(box_complex(g))) == std::vector<int>{1});  // S^0
    }
}

TEST_CASE("lambda map values for d=1") {
    SignedVertexMap m = lambda_map(1);
    CHECK(m.domain.vertex_count() == 6);
    std::map<std::string, std::string> images;
    for (int v = 0; v < m.domain.vertex_count(); ++v)
        images[m.domain.label(v)] = m.codomain.label(m.assignment[v]);
    CHECK(images.at("(+1)") == "-1");
    CHECK(images.at("(-1)") == "+1");
    CHECK(images.at("(+1|-2)") == "-1");
    CHECK(map_is_simplicial(m));
    CHECK(map_is_equivariant(m));
}

TEST_CASE("lambda map is simplicial and equivariant through d=4") {
    for (int d = 2; d <= 4; ++d) {
        SignedVertexMap m = lambda_map(d);
        CHECK(map_is_simplicial(m));
        CHECK(map_is_equivariant(m));
    }
}

TEST_CASE("h map evaluation") {
    SUBCASE("zero maps to zero") {
        auto h = h_map_eval({Rational(0), Rational(0)}, 1);
        CHECK(h == std::vector<Rational>{Rational(0)});
    }
    SUBCASE("hand-computed values") {
        CHECK(h_map_eval({Rational(1), Rational(0)}, 1) == std::vector<Rational>{Rational(-1)});
        CHECK(h_map_eval({Rational(1, 3), Rational(-1, 2)}, 1) ==
              std::vector<Rational>{Rational(-1, 2)});
    }
    SUBCASE("oddness and the norm bound on sampled rationals") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        for (int d = 1; d <= 3; ++d) {
            int bound_checked = 0;
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<Rational> z(d + 1), nz(d + 1);
                for (int i = 0; i <= d; ++i) {
                    z[i] = Rational(num(rng), den(rng));
                    nz[i] = -z[i];
                }
                auto h = h_map_eval(z, d);
                auto hn = h_map_eval(nz, d);
                for (int i = 0; i < d; ++i) CHECK(hn[i] == -h[i]);
                bool all_pos = true, all_neg = true, nonzero = false;
                Rational linf(0);
                for (const auto& zi : z) {
                    if (zi <= 0) all_pos = false;
                    if (zi >= 0) all_neg = false;
                    if (zi != 0) nonzero = true;
                    Rational a = zi < 0 ? Rational(-zi) : zi;
                    if (a > linf) linf = a;
                }
                if (!nonzero || all_pos || all_neg) continue;
                Rational hinf(0);
                for (const auto& c : h) {
                    Rational a = c < 0 ? Rational(-c) : c;
                    if (a > hinf) hinf = a;
                }
                CHECK(linf <= Rational(d) * hinf);
                ++bound_checked;
            }
            CHECK(bound_checked > 50);
        }
    }
    SUBCASE("input length is validated") {
        CHECK_THROWS_AS(h_map_eval({Rational(1)}, 2), std::invalid_argument);
    }
}

TEST_CASE("signed vertex map serialization") {
    std::string text = serialize_signed_vertex_map(lambda_map(1));
    CHECK(text.find("(+1) -> -1") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("quotient serialization includes the cocycle lines") {
    std::string text = serialize_quotient(quotient_complex(cross_polytope_boundary(2)));
    CHECK(std::count(text.begin(), text.end(), '\n') == 8);  // 4 facets + 4 w lines
    CHECK(text.find("w ") != std::string::npos);
}
