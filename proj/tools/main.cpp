#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "picspace/json_io.hpp"

using namespace picspace;

namespace {

Graph load_graph(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_graph(text);
}

std::string edge_name(const Graph& g, int e) {
    auto [a, b] = g.edge(e);
    return g.vertex_id(a) + g.vertex_id(b);
}

void print_edge_set(const Graph& g, EdgeSet f) {
    bool first = true;
    std::cout << "{";
    for (int e : g.edge_list(f)) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << edge_name(g, e);
    }
    std::cout << "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Rigidity, tree polynomials, and picture-space components of "
        "graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options after the subcommand

    std::string input = "-";
    bool as_json = false;
    std::uint64_t seed = 1;
    std::uint64_t prime = kDefaultPrime;
    int samples = 100;
    int max_partitions = 10;
    int max_edges = 24;
    app.add_option("-i,--input", input,
                   "Edge-list file ('-' for stdin)");
    app.add_flag("--json", as_json, "Emit JSON instead of text");
    app.add_option("--seed", seed, "RNG seed for verify (default 1)");
    app.add_option("--prime", prime,
                   "Odd prime modulus (default 2305843009213693951)");
    app.add_option("--samples", samples,
                   "Picture samples for verify (default 100)");
    app.add_option("--max-partitions", max_partitions,
                   "Vertex cap for partition enumeration (default 10)");
    app.add_option("--max-edges", max_edges,
                   "Edge cap for circuit enumeration (default 24)");

    auto* cmd_rigidity = app.add_subcommand(
        "rigidity", "Independence, rank, and rigidity of the edge set");
    auto* cmd_circuits =
        app.add_subcommand("circuits", "All rigidity circuit subgraphs");
    auto* cmd_cpl =
        app.add_subcommand("cpl", "Coupled spanning trees");
    auto* cmd_treepoly =
        app.add_subcommand("treepoly", "Tree polynomial of the graph");
    auto* cmd_ideal = app.add_subcommand(
        "ideal", "Tree-polynomial generators of the slope ideal");
    auto* cmd_components = app.add_subcommand(
        "components", "Irreducible components of the picture space");
    auto* cmd_verify = app.add_subcommand(
        "verify", "Randomized finite-field verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Graph g = load_graph(input);

        if (cmd_rigidity->parsed()) {
            RigidityReport rep = rigidity_report(g, g.full_edge_set());
            std::vector<EdgeSet> circuits = rigidity_circuits(g, max_edges);
            if (as_json) {
                std::cout << rigidity_report_to_json(g, rep, circuits).dump()
                          << "\n";
            } else {
                std::cout << "independent: " << std::boolalpha
                          << rep.independent << "\n"
                          << "rank: " << rep.rank << "\n"
                          << "rigid: " << rep.rigid << "\n"
                          << "circuits: " << circuits.size() << "\n";
            }
        } else if (cmd_circuits->parsed()) {
            std::vector<EdgeSet> circuits = rigidity_circuits(g, max_edges);
            if (as_json) {
                nlohmann::json j = nlohmann::json::array();
                for (EdgeSet c : circuits)
                    j.push_back(edge_set_to_json(g, c));
                std::cout << j.dump() << "\n";
            } else {
                for (EdgeSet c : circuits) {
                    print_edge_set(g, c);
                    std::cout << "\n";
                }
            }
        } else if (cmd_cpl->parsed()) {
            std::vector<EdgeSet> trees = coupled_spanning_trees(g);
            if (as_json) {
                nlohmann::json j = nlohmann::json::array();
                for (EdgeSet t : trees) j.push_back(edge_set_to_json(g, t));
                std::cout << j.dump() << "\n";
            } else {
                for (EdgeSet t : trees) {
                    print_edge_set(g, t);
                    std::cout << "\n";
                }
            }
        } else if (cmd_treepoly->parsed()) {
            MultilinearPoly tau = tree_polynomial(g);
            if (as_json)
                std::cout << poly_to_json(g, tau).dump() << "\n";
            else
                std::cout << tau.pretty(g) << "\n";
        } else if (cmd_ideal->parsed()) {
            IdealGenerators gens = ideal_generators(g, max_edges);
            if (as_json) {
                nlohmann::json j = nlohmann::json::array();
                for (auto& [c, tau] : gens.generators)
                    j.push_back({{"circuit", edge_set_to_json(g, c)},
                                 {"poly", poly_to_json(g, tau)}});
                std::cout << j.dump() << "\n";
            } else {
                for (auto& [c, tau] : gens.generators) {
                    print_edge_set(g, c);
                    std::cout << ": " << tau.pretty(g) << "\n";
                }
            }
        } else if (cmd_components->parsed()) {
            ComponentReport rep = irreducible_components(g, max_partitions);
            bool cm = cm_certificate(g);
            if (as_json) {
                std::cout << component_report_to_json(g, rep, cm).dump()
                          << "\n";
            } else {
                for (auto& [part, dim] : rep.components) {
                    std::cout << "dim " << dim << ": ";
                    bool firstb = true;
                    for (auto& blk : part.blocks()) {
                        std::cout << (firstb ? "{" : " {");
                        firstb = false;
                        for (size_t i = 0; i < blk.size(); ++i)
                            std::cout << (i ? "," : "")
                                      << g.vertex_id(blk[i]);
                        std::cout << "}";
                    }
                    std::cout << "\n";
                }
                std::cout << "cm_certificate: " << std::boolalpha << cm
                          << "\n";
            }
        } else if (cmd_verify->parsed()) {
            bool vanishing = check_ideal_vanishing(g, samples, prime, seed);
            PictureSample s = random_generic_picture(g, prime, seed);
            bool polygons = check_polygon_relations(g, s);
            int comb = rigidity_rank(g);
            int slope = slope_jacobian_rank(g, prime, seed);
            int length = length_jacobian_rank(g, prime, seed);
            bool equal = matroid_equality_check(g, prime, seed);
            nlohmann::json j = verify_report_to_json(
                vanishing, comb, slope, length, equal, polygons, seed, prime);
            if (as_json) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "ideal vanishing on " << samples
                          << " samples: " << std::boolalpha << vanishing
                          << "\n"
                          << "polygon relations: " << polygons << "\n"
                          << "ranks (combinatorial/slope/length): " << comb
                          << "/" << slope << "/" << length << "\n"
                          << "matroids equal: " << equal << "\n";
            }
            if (!vanishing || !polygons || !equal) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
