#include "picspace/json_io.hpp"

#include <stdexcept>

namespace picspace {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertex_ids();
    j["edges"] = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        j["edges"].push_back({g.vertex_id(a), g.vertex_id(b)});
    }
    return j;
}

json edge_set_to_json(const Graph& g, EdgeSet f) {
    json j = json::array();
    for (int e : g.edge_list(f)) {
        auto [a, b] = g.edge(e);
        j.push_back({g.vertex_id(a), g.vertex_id(b)});
    }
    return j;
}

json poly_to_json(const Graph& g, const MultilinearPoly& p) {
    json terms = json::array();
    for (auto& [sup, c] : p.terms()) {
        json t;
        t["edges"] = edge_set_to_json(g, sup);
        t["coeff"] = c.convert_to<long long>();
        terms.push_back(t);
    }
    return json{{"terms", terms}};
}

MultilinearPoly poly_from_json(const Graph& g, const json& j) {
    MultilinearPoly p;
    for (auto& t : j.at("terms")) {
        EdgeSet sup = 0;
        for (auto& pair : t.at("edges")) {
            int a = g.vertex_index(pair.at(0).get<std::string>());
            int b = g.vertex_index(pair.at(1).get<std::string>());
            int e = g.edge_index(a, b);
            if (e < 0) throw std::runtime_error("unknown edge in polynomial");
            sup |= edge_bit(e);
        }
        p = p + MultilinearPoly::monomial(sup,
                                          Int(t.at("coeff").get<long long>()));
    }
    return p;
}

json rigidity_report_to_json(const Graph& g, const RigidityReport& rep,
                             const std::vector<EdgeSet>& circuits) {
    json j;
    j["independent"] = rep.independent;
    j["rank"] = rep.rank;
    j["rigid"] = rep.rigid;
    if (rep.violating_set)
        j["violating_set"] = edge_set_to_json(g, *rep.violating_set);
    j["circuits"] = json::array();
    for (EdgeSet c : circuits) j["circuits"].push_back(edge_set_to_json(g, c));
    return j;
}

json component_report_to_json(const Graph& g, const ComponentReport& rep,
                              bool cm) {
    json comps = json::array();
    for (auto& [part, dim] : rep.components) {
        json blocks = json::array();
        for (auto& blk : part.blocks()) {
            json b = json::array();
            for (int v : blk) b.push_back(g.vertex_id(v));
            blocks.push_back(b);
        }
        comps.push_back({{"blocks", blocks}, {"dim", dim}});
    }
    return json{{"components", comps}, {"cm_certificate", cm}};
}

json verify_report_to_json(bool vanishing, int comb_rank, int slope_rank,
                           int length_rank, bool matroids_equal,
                           bool polygons, std::uint64_t seed,
                           std::uint64_t prime) {
    return json{{"vanishing", vanishing},
                {"ranks",
                 {{"combinatorial", comb_rank},
                  {"slope", slope_rank},
                  {"length", length_rank}}},
                {"matroids_equal", matroids_equal},
                {"polygon_relations", polygons},
                {"seed", seed},
                {"prime", prime}};
}

}  // namespace picspace
