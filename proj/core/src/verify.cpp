#include "chromatopo/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "chromatopo/homology.hpp"
#include "chromatopo/poset.hpp"
#include "chromatopo/z2tools.hpp"

namespace chromatopo {

namespace {

std::vector<int> trimmed(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::string betti_str(const HomologySummary& s) {
    std::ostringstream out;
    out << '[';
    auto b = trimmed(s.reduced_betti);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out << ',';
        out << b[i];
    }
    out << ']';
    if (s.ring == Ring::Z) {
        bool any = false;
        for (const auto& t : s.torsion) any = any || !t.empty();
        if (any) {
            out << " torsion[";
            for (std::size_t d = 0; d < s.torsion.size(); ++d)
                for (const auto& f : s.torsion[d]) out << " " << d << ":" << f;
            out << " ]";
        }
    }
    return out.str();
}

std::string both_rings_str(const Z2Complex& k) {
    return "gf2 " + betti_str(homology(k, Ring::GF2)) + " | z " + betti_str(homology(k, Ring::Z));
}

bool same_torsion(const HomologySummary& a, const HomologySummary& b) {
    std::size_t n = std::max(a.torsion.size(), b.torsion.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Integer> ta = i < a.torsion.size() ? a.torsion[i] : std::vector<Integer>{};
        std::vector<Integer> tb = i < b.torsion.size() ? b.torsion[i] : std::vector<Integer>{};
        if (ta != tb) return false;
    }
    return true;
}

CheckResult homology_comparison(const std::string& name, const std::string& instance,
                                const Z2Complex& lhs, const Z2Complex& rhs) {
    bool ok = true;
    for (Ring ring : {Ring::GF2, Ring::Z}) {
        auto a = homology(lhs, ring);
        auto b = homology(rhs, ring);
        if (trimmed(a.reduced_betti) != trimmed(b.reduced_betti) || !same_torsion(a, b)) ok = false;
    }
    return {name, instance, ok ? "pass" : "fail", both_rings_str(lhs), both_rings_str(rhs)};
}

}  // namespace

CheckResult check_susp_b_vs_b0(const Graph& g, const std::string& instance) {
    return homology_comparison("susp_b_vs_b0", instance, suspension(box_complex(g)),
                               box0_complex(g));
}

CheckResult check_nbhd_vs_box(const Graph& g, const std::string& instance) {
    return homology_comparison("nbhd_vs_box", instance, box_complex(g), neighborhood_complex(g));
}

CheckResult check_hom_vs_box(const Graph& g, const std::string& instance) {
    return homology_comparison("hom_vs_box", instance, box_complex(g),
                               order_complex(hom_poset(g)));
}

namespace {

// Signed-set view of a box-complex simplex, as (sign, graph vertex) pairs.
using SignedSet = std::vector<std::pair<int, int>>;

SignedSet signed_set(const Z2Complex& k, const std::vector<int>& simplex,
                     const std::map<std::string, int>& graph_index) {
    SignedSet out;
    for (int v : simplex) {
        const std::string& l = k.label(v);
        out.emplace_back(l[0] == '+' ? 1 : -1, graph_index.at(l.substr(1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::string, int> label_index(const Graph& g) {
    std::map<std::string, int> out;
    for (int v = 0; v < g.vertex_count(); ++v) out[g.label(v)] = v;
    return out;
}

std::vector<SignedSet> all_signed_simplices(const Z2Complex& k, const Graph& g) {
    auto idx = label_index(g);
    std::vector<SignedSet> out;
    for (int d = 0; d < k.num_dims(); ++d)
        for (const auto& s : k.simplices(d)) out.push_back(signed_set(k, s, idx));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CheckResult check_join_b0_iso(const Graph& g, const Graph& h, const std::string& instance) {
    Graph joined = graph_join(g, h);
    Z2Complex b0j = box0_complex(joined);
    Z2Complex b0g = box0_complex(g);
    Z2Complex b0h = box0_complex(h);
    const int ng = g.vertex_count();

    // Simplices as signed vertex sets over the join graph's indices.
    auto join_simplices = all_signed_simplices(b0j, joined);
    auto g_simplices = all_signed_simplices(b0g, g);
    auto h_simplices = all_signed_simplices(b0h, h);
    auto g_member = [&](const SignedSet& s) {
        return s.empty() || std::binary_search(g_simplices.begin(), g_simplices.end(), s);
    };
    auto h_member = [&](const SignedSet& s) {
        return s.empty() || std::binary_search(h_simplices.begin(), h_simplices.end(), s);
    };
    auto split = [&](const SignedSet& s) {
        std::pair<SignedSet, SignedSet> out;
        for (auto [sign, v] : s) {
            if (v < ng)
                out.first.emplace_back(sign, v);
            else
                out.second.emplace_back(sign, v - ng);
        }
        return out;
    };
    auto negate = [](SignedSet s) {
        for (auto& [sign, v] : s) sign = -sign;
        std::sort(s.begin(), s.end());
        return s;
    };

    std::string failure;
    // f: every simplex of B0(G*H) decomposes into factor simplices; g o f = id.
    std::set<std::pair<SignedSet, SignedSet>> f_image;
    for (const auto& s : join_simplices) {
        auto [sg, sh] = split(s);
        if (!g_member(sg) || !h_member(sh)) {
            failure = "f image not a factor simplex pair";
            break;
        }
        // g of the pair: the union, which is s itself: g(f(s)) = s trivially
        // by construction, so record the pair for the f o g direction.
        f_image.insert({sg, sh});
        // Equivariance: f(nu s) = (nu sg, nu sh).
        auto [tg, th] = split(negate(s));
        if (tg != negate(sg) || th != negate(sh)) {
            failure = "f not equivariant";
            break;
        }
    }
    // g: every factor pair assembles to a simplex of B0(G*H); f o g = id.
    std::size_t pair_count = 0;
    if (failure.empty()) {
        auto g_list = g_simplices;
        g_list.push_back({});
        auto h_list = h_simplices;
        h_list.push_back({});
        for (const auto& sg : g_list) {
            for (const auto& sh : h_list) {
                if (sg.empty() && sh.empty()) continue;
                ++pair_count;
                SignedSet united = sg;
                for (auto [sign, v] : sh) united.emplace_back(sign, v + ng);
                std::sort(united.begin(), united.end());
                if (!std::binary_search(join_simplices.begin(), join_simplices.end(), united)) {
                    failure = "g image not a simplex of B0(G*H)";
                    break;
                }
                auto [rg, rh] = split(united);
                SignedSet sh_orig = sh;
                if (rg != sg || rh != sh_orig) {
                    failure = "f(g(pair)) != pair";
                    break;
                }
                if (!f_image.count({sg, sh})) {
                    failure = "pair not reached by f";
                    break;
                }
            }
            if (!failure.empty()) break;
        }
    }
    // Bijection: both maps are total and mutually inverse; monotonicity of f
    // holds componentwise since restriction preserves inclusion, making f an
    // order isomorphism of the face posets.
    if (failure.empty() && f_image.size() != pair_count) failure = "f not a bijection onto pairs";
    if (failure.empty() && f_image.size() != join_simplices.size())
        failure = "f not injective";
    return {"join_b0_iso", instance, failure.empty() ? "pass" : "fail",
            failure.empty() ? std::to_string(join_simplices.size()) + " simplices matched"
                            : failure,
            std::to_string(pair_count) + " factor pairs"};
}

CheckResult check_join_b_susp(const Graph& g, const Graph& h, const std::string& instance) {
    Z2Complex lhs = box_complex(graph_join(g, h));
    Z2Complex rhs = suspension(complex_join(box_complex(g), box_complex(h)));
    return homology_comparison("join_b_susp", instance, lhs, rhs);
}

CheckResult check_product_kunneth(const Graph& g, const Graph& h, const std::string& instance) {
    auto lhs = trimmed(unreduced_betti_gf2(box_complex(graph_product(g, h))));
    auto rhs = trimmed(kunneth_product_betti(unreduced_betti_gf2(box_complex(g)),
                                             unreduced_betti_gf2(box_complex(h))));
    auto str = [](const std::vector<int>& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v[i]);
        }
        return out + "]";
    };
    return {"product_kunneth", instance, lhs == rhs ? "pass" : "fail", str(lhs), str(rhs)};
}

CheckResult check_csorba_roundtrip(const Z2Complex& k, const std::string& instance) {
    return homology_comparison("csorba_roundtrip", instance, box_complex(csorba_graph(k)), k);
}

CheckResult check_arrow_chain(const Graph& g, const SizeCaps& caps, const std::string& instance) {
    Hypergraph repr = standard_kneser_representation(g);
    BoundsReport r = bounds_ladder(g, &repr, caps, instance);
    std::string lhs;
    for (const auto& violation : r.violations) {
        if (!lhs.empty()) lhs += "; ";
        lhs += violation;
    }
    return {"arrow_chain", instance, r.violations.empty() ? "pass" : "fail",
            r.violations.empty() ? "no violations" : lhs, ""};
}

std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> out;
    for (int n = 1; n <= 5; ++n) out.push_back({"K" + std::to_string(n), gen_complete(n), false});
    for (int n = 4; n <= 8; ++n) out.push_back({"C" + std::to_string(n), gen_cycle(n), false});
    out.push_back({"K1,3", gen_complete_bipartite(1, 3), false});
    out.push_back({"K2,2", gen_complete_bipartite(2, 2), false});
    out.push_back({"K3,3", gen_complete_bipartite(3, 3), false});
    out.push_back({"KG(5,2)", gen_stable_kneser(5, 2, 1), false});
    out.push_back({"SG(5,2)", gen_stable_kneser(5, 2, 2), false});
    out.push_back({"K2xK3", graph_product(gen_complete(2), gen_complete(3)), false});
    out.push_back({"K2*K2", graph_join(gen_complete(2), gen_complete(2)), false});
    out.push_back({"C5*C5", graph_join(gen_cycle(5), gen_cycle(5)), true});
    return out;
}

namespace {

std::vector<int> sphere_betti(int d) {
    std::vector<int> b(d + 1, 0);
    b[d] = 1;
    return b;
}

CheckResult expect_betti(const std::string& name, const std::string& instance,
                         const Z2Complex& k, const std::vector<int>& expected) {
    auto gf2 = homology(k, Ring::GF2);
    auto z = homology(k, Ring::Z);
    bool torsion_free = true;
    for (const auto& t : z.torsion) torsion_free = torsion_free && t.empty();
    bool ok = trimmed(gf2.reduced_betti) == trimmed(expected) &&
              trimmed(z.reduced_betti) == trimmed(expected) && torsion_free;
    std::string want = "[";
    auto e = trimmed(expected);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) want += ',';
        want += std::to_string(e[i]);
    }
    want += ']';
    return {name, instance, ok ? "pass" : "fail", both_rings_str(k), want};
}

// Facet-set equality under the canonical relabeling +-(graph vertex i) to
// +-(i+1) of the cross-polytope.
CheckResult expect_cross_polytope(const std::string& instance, const Graph& g) {
    Z2Complex b0 = box0_complex(g);
    Z2Complex target = cross_polytope_boundary(g.vertex_count());
    auto canon = [](const Z2Complex& k, bool shift) {
        std::set<std::vector<std::pair<int, int>>> out;
        for (const auto& f : k.facets()) {
            std::vector<std::pair<int, int>> sf;
            for (int v : f) {
                const std::string& l = k.label(v);
                int body = std::stoi(l.substr(1)) + (shift ? 1 : 0);
                sf.emplace_back(l[0] == '+' ? 1 : -1, body);
            }
            std::sort(sf.begin(), sf.end());
            out.insert(sf);
        }
        return out;
    };
    bool ok = canon(b0, true) == canon(target, false);
    return {"box0_equals_cross_polytope", instance, ok ? "pass" : "fail",
            std::to_string(b0.facets().size()) + " facets",
            std::to_string(target.facets().size()) + " facets"};
}

CheckResult expect_wedge_of_spheres(const std::string& name, const std::string& instance,
                                    const Z2Complex& k, int sphere_dim) {
    auto gf2 = homology(k, Ring::GF2);
    auto z = homology(k, Ring::Z);
    bool torsion_free = true;
    for (const auto& t : z.torsion) torsion_free = torsion_free && t.empty();
    bool ok = torsion_free && trimmed(gf2.reduced_betti) == trimmed(z.reduced_betti);
    auto b = trimmed(gf2.reduced_betti);
    for (int d = 0; d < static_cast<int>(b.size()) && ok; ++d)
        if (d != sphere_dim && b[d] != 0) ok = false;
    int rank = sphere_dim < static_cast<int>(b.size()) ? b[sphere_dim] : 0;
    if (rank % 2 != 1) ok = false;  // an odd number of spheres
    return {name, instance, ok ? "pass" : "fail", both_rings_str(k),
            "odd wedge of S^" + std::to_string(sphere_dim)};
}

std::vector<CheckResult> examples_suite(const SizeCaps& caps) {
    std::vector<CheckResult> out;
    for (int n = 2; n <= 5; ++n) {
        Graph k = gen_complete(n);
        out.push_back(expect_betti("box_complete", "B(K" + std::to_string(n) + ")",
                                   box_complex(k), sphere_betti(n - 2)));
        out.push_back(expect_cross_polytope("B0(K" + std::to_string(n) + ")", k));
        out.push_back(expect_betti("box0_complete", "B0(K" + std::to_string(n) + ")",
                                   box0_complex(k), sphere_betti(n - 1)));
    }
    for (int n : {6, 8}) {
        Graph c = gen_cycle(n);
        out.push_back(expect_betti("box_even_cycle", "B(C" + std::to_string(n) + ")",
                                   box_complex(c), {1, 2}));
        out.push_back(expect_betti("box0_even_cycle", "B0(C" + std::to_string(n) + ")",
                                   box0_complex(c), {0, 1, 2}));
    }
    for (int n : {5, 7}) {
        Graph c = gen_cycle(n);
        out.push_back(expect_betti("box_odd_cycle", "B(C" + std::to_string(n) + ")",
                                   box_complex(c), {0, 1}));
        out.push_back(expect_betti("box0_odd_cycle", "B0(C" + std::to_string(n) + ")",
                                   box0_complex(c), {0, 0, 1}));
    }
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 3}}) {
        Graph k = gen_complete_bipartite(m, n);
        std::string inst = "K" + std::to_string(m) + "," + std::to_string(n);
        out.push_back(expect_betti("box_bipartite", "B(" + inst + ")", box_complex(k), {1}));
        out.push_back(expect_betti("box0_bipartite", "B0(" + inst + ")", box0_complex(k), {0, 1}));
    }
    out.push_back(expect_wedge_of_spheres("box_kneser_wedge", "B(KG(5,2))",
                                          box_complex(gen_stable_kneser(5, 2, 1)), 1));
    out.push_back(expect_wedge_of_spheres("box_kneser_wedge", "B(KG(6,2))",
                                          box_complex(gen_stable_kneser(6, 2, 1)), 2));
    out.push_back(expect_betti("box_schrijver_sphere", "B(SG(5,2))",
                               box_complex(gen_stable_kneser(5, 2, 2)), {0, 1}));
    {
        int chi_kg = chromatic_number(gen_stable_kneser(5, 2, 1), caps);
        out.push_back({"chi_kneser", "KG(5,2)", chi_kg == 3 ? "pass" : "fail",
                       std::to_string(chi_kg), "3"});
        int chi_sg = chromatic_number(gen_stable_kneser(5, 2, 2), caps);
        out.push_back({"chi_schrijver", "SG(5,2)", chi_sg == 3 ? "pass" : "fail",
                       std::to_string(chi_sg), "3"});
    }
    // Structural equivalences on the whole corpus.
    for (const auto& entry : standard_corpus()) {
        out.push_back(check_susp_b_vs_b0(entry.graph, entry.name));
        out.push_back(check_nbhd_vs_box(entry.graph, entry.name));
        if (entry.homology_checks_only)
            out.push_back({"hom_vs_box", entry.name, "skip", "size-gated", ""});
        else
            out.push_back(check_hom_vs_box(entry.graph, entry.name));
    }
    return out;
}

std::vector<CheckResult> arrows_suite(const SizeCaps& caps) {
    std::vector<CheckResult> out;
    for (const auto& entry : standard_corpus())
        out.push_back(check_arrow_chain(entry.graph, caps, entry.name));
    return out;
}

std::vector<CheckResult> joins_suite() {
    std::vector<CheckResult> out;
    out.push_back(check_join_b0_iso(gen_complete(2), gen_complete(2), "(K2,K2)"));
    out.push_back(check_join_b0_iso(gen_complete(1), gen_complete(2), "(K1,K2)"));
    out.push_back(check_join_b0_iso(gen_cycle(4), gen_complete(1), "(C4,K1)"));
    out.push_back(check_join_b_susp(gen_complete(2), gen_complete(3), "(K2,K3)"));
    out.push_back(check_join_b_susp(gen_cycle(5), gen_cycle(5), "(C5,C5)"));
    out.push_back(check_join_b_susp(gen_complete(1), gen_complete(1), "(K1,K1)"));
    return out;
}

std::vector<CheckResult> products_suite() {
    std::vector<CheckResult> out;
    out.push_back(check_product_kunneth(gen_complete(2), gen_complete(3), "(K2,K3)"));
    out.push_back(check_product_kunneth(gen_complete(2), gen_complete(2), "(K2,K2)"));
    out.push_back(check_product_kunneth(gen_complete(3), gen_complete(3), "(K3,K3)"));
    return out;
}

std::vector<CheckResult> csorba_suite() {
    std::vector<CheckResult> out;
    out.push_back(check_csorba_roundtrip(cross_polytope_boundary(2), "crosspoly2"));
    out.push_back(check_csorba_roundtrip(cross_polytope_boundary(3), "crosspoly3"));
    out.push_back(check_csorba_roundtrip(barycentric_subdivision(cross_polytope_boundary(2)),
                                         "sd(crosspoly2)"));
    return out;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

std::vector<CheckResult> appendix_suite() {
    std::vector<CheckResult> out;
    for (int d = 1; d <= 4; ++d) {
        SignedVertexMap m = lambda_map(d);
        bool simplicial = map_is_simplicial(m);
        bool equivariant = map_is_equivariant(m);
        std::string inst = "d=" + std::to_string(d);
        out.push_back({"lambda_simplicial", inst, simplicial ? "pass" : "fail",
                       std::to_string(m.domain.facets().size()) + " facets checked", ""});
        out.push_back({"lambda_equivariant", inst, equivariant ? "pass" : "fail",
                       std::to_string(m.domain.vertex_count()) + " vertices checked", ""});
    }
    std::mt19937 rng(20240229);
    for (int d = 1; d <= 3; ++d) {
        bool odd_ok = true, bound_ok = true;
        int bound_samples = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<Rational> z(d + 1);
            for (auto& zi : z) zi = random_rational(rng);
            auto hz = h_map_eval(z, d);
            std::vector<Rational> nz(d + 1);
            for (int i = 0; i <= d; ++i) nz[i] = -z[i];
            auto hnz = h_map_eval(nz, d);
            for (int i = 0; i < d; ++i)
                if (hnz[i] != -hz[i]) odd_ok = false;
        }
        while (bound_samples < 1000) {
            std::vector<Rational> z(d + 1);
            for (auto& zi : z) zi = random_rational(rng);
            Rational linf(0);
            bool nonzero = false, all_pos = true, all_neg = true;
            for (const auto& zi : z) {
                if (zi <= 0) all_pos = false;
                if (zi >= 0) all_neg = false;
                Rational a = zi < 0 ? Rational(-zi) : zi;
                if (a > linf) linf = a;
                if (zi != 0) nonzero = true;
            }
            if (!nonzero || all_pos || all_neg) continue;
            ++bound_samples;
            auto hz = h_map_eval(z, d);
            Rational hinf(0);
            for (const auto& c : hz) {
                Rational a = c < 0 ? Rational(-c) : c;
                if (a > hinf) hinf = a;
            }
            if (linf > Rational(d) * hinf) bound_ok = false;
        }
        std::string inst = "d=" + std::to_string(d);
        out.push_back({"h_map_odd", inst, odd_ok ? "pass" : "fail", "1000 samples", ""});
        out.push_back({"h_map_norm_bound", inst, bound_ok ? "pass" : "fail",
                       "1000 mixed-sign samples", "|z|_inf <= d*|h(z)|_inf"});
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"examples", "arrows", "joins", "products", "csorba", "appendix"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const SizeCaps& caps) {
    if (suite == "examples") return examples_suite(caps);
    if (suite == "arrows") return arrows_suite(caps);
    if (suite == "joins") return joins_suite();
    if (suite == "products") return products_suite();
    if (suite == "csorba") return csorba_suite();
    if (suite == "appendix") return appendix_suite();
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string check_results_table(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t w) {
        std::string p = s;
        while (p.size() < w) p += ' ';
        return p;
    };
    std::size_t name_w = 4, inst_w = 8;
    for (const auto& r : results) {
        name_w = std::max(name_w, r.name.size());
        inst_w = std::max(inst_w, r.instance.size());
    }
    for (const auto& r : results) {
        out << pad(r.status, 5) << ' ' << pad(r.name, name_w) << ' ' << pad(r.instance, inst_w)
            << ' ' << r.lhs;
        if (!r.rhs.empty()) out << "  ~  " << r.rhs;
        out << "\n";
    }
    return out.str();
}

std::string check_results_json(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    auto escape = [](const std::string& s) {
        std::string e;
        for (char c : s) {
            if (c == '"' || c == '\\') e += '\\';
            e += c;
        }
        return e;
    };
    out << "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (i) out << ',';
        out << "{\"name\":\"" << escape(r.name) << "\",\"instance\":\"" << escape(r.instance)
            << "\",\"status\":\"" << r.status << "\",\"lhs\":\"" << escape(r.lhs)
            << "\",\"rhs\":\"" << escape(r.rhs) << "\"}";
    }
    out << "]";
    return out.str();
}

}  // namespace chromatopo
