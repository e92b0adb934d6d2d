// Command-line front end: build complexes, compute homology and bounds,
// run verification suites, and emit the appendix maps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chromatopo/bounds.hpp"
#include "chromatopo/complex.hpp"
#include "chromatopo/homology.hpp"
#include "chromatopo/poset.hpp"
#include "chromatopo/verify.hpp"
#include "chromatopo/z2tools.hpp"

namespace {

using namespace chromatopo;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SizeCaps caps_from_env() {
    const char* env = std::getenv("CHROMATOPO_SIZE_CAPS");
    if (!env) return {};
    return parse_size_caps(env);
}

Z2Complex build_kind(const Graph& g, const std::string& kind) {
    if (kind == "b") return box_complex(g);
    if (kind == "b0") return box0_complex(g);
    if (kind == "n") return neighborhood_complex(g);
    if (kind == "hom") return order_complex(hom_poset(g));
    throw std::invalid_argument("unknown complex kind '" + kind + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"box complexes and topological lower bounds on the chromatic number"};
    app.require_subcommand(1);
    SizeCaps caps = caps_from_env();

    auto* cmd_complex = app.add_subcommand("complex", "emit the facet list of a graph complex");
    std::string kind = "b", graph_path;
    cmd_complex->add_option("--kind", kind, "one of b, b0, n, hom")->capture_default_str();
    cmd_complex->add_option("graph", graph_path, "edge-list or DIMACS file ('-' for stdin)")
        ->required();

    auto* cmd_homology = app.add_subcommand("homology", "reduced homology of a complex or graph");
    std::string ring = "gf2", input_path, hom_kind;
    cmd_homology->add_option("--ring", ring, "gf2 or z")->capture_default_str();
    cmd_homology->add_option("--kind", hom_kind,
                             "treat the input as a graph and build this complex kind");
    cmd_homology->add_option("input", input_path, "facet-list file, or graph file with --kind")
        ->required();

    auto* cmd_bounds = app.add_subcommand("bounds", "full lower-bound ladder for a graph");
    std::string bounds_graph, repr_path;
    bool as_json = false, as_csv = false;
    cmd_bounds->add_option("graph", bounds_graph, "edge-list or DIMACS file")->required();
    cmd_bounds->add_option("--repr", repr_path, "Kneser representation hypergraph file");
    cmd_bounds->add_flag("--json", as_json, "machine-readable JSON");
    cmd_bounds->add_flag("--csv", as_csv, "CSV row (with header)");

    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    bool verify_json = false;
    cmd_verify->add_option("--suite", suite, "examples, arrows, joins, products, csorba, appendix")
        ->required();
    cmd_verify->add_flag("--json", verify_json, "machine-readable JSON");

    auto* cmd_csorba = app.add_subcommand("csorba", "graph of Csorba's construction");
    std::string csorba_path;
    cmd_csorba->add_option("complex", csorba_path, "facet-list file with +/- paired labels")
        ->required();

    auto* cmd_map = app.add_subcommand("map", "emit an appendix map");
    int lambda_d = 0;
    cmd_map->add_option("--lambda", lambda_d, "vertex map sd(B(K_{d+1})) -> cross-polytope")
        ->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_complex->parsed()) {
        Graph g = parse_graph(read_input(graph_path));
        std::cout << serialize_complex(build_kind(g, kind));
        return 0;
    }
    if (cmd_homology->parsed()) {
        Ring r;
        if (ring == "gf2")
            r = Ring::GF2;
        else if (ring == "z")
            r = Ring::Z;
        else
            throw std::invalid_argument("unknown ring '" + ring + "'");
        Z2Complex k = hom_kind.empty() ? parse_complex(read_input(input_path))
                                       : build_kind(parse_graph(read_input(input_path)), hom_kind);
        std::cout << homology_summary_json(homology(k, r)) << "\n";
        return 0;
    }
    if (cmd_bounds->parsed()) {
        Graph g = parse_graph(read_input(bounds_graph));
        Hypergraph repr;
        bool have_repr = !repr_path.empty();
        if (have_repr) repr = parse_hypergraph(read_input(repr_path));
        BoundsReport r = bounds_ladder(g, have_repr ? &repr : nullptr, caps, bounds_graph);
        if (as_json)
            std::cout << bounds_report_json(r) << "\n";
        else if (as_csv)
            std::cout << bounds_report_csv_header() << bounds_report_csv_row(r);
        else
            std::cout << bounds_report_table(r);
        return 0;
    }
    if (cmd_verify->parsed()) {
        auto results = run_suite(suite, caps);
        if (verify_json)
            std::cout << check_results_json(results) << "\n";
        else
            std::cout << check_results_table(results);
        for (const auto& r : results)
            if (r.status == "fail") return 3;
        return 0;
    }
    if (cmd_csorba->parsed()) {
        Z2Complex k = parse_complex(read_input(csorba_path));
        std::cout << serialize_graph(csorba_graph(k));
        return 0;
    }
    if (cmd_map->parsed()) {
        std::cout << serialize_signed_vertex_map(lambda_map(lambda_d));
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chromatopo::SizeCapError& e) {
        std::cerr << "size cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
