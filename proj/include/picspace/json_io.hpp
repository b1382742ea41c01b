#pragma once

#include <json.hpp>

#include "picspace/graph.hpp"
#include "picspace/numeric_verify.hpp"
#include "picspace/picture_space.hpp"
#include "picspace/poly.hpp"
#include "picspace/rigidity.hpp"
#include "picspace/treepoly.hpp"

namespace picspace {

nlohmann::json graph_to_json(const Graph& g);

/// Edge sets serialize as lists of ["u","v"] id pairs in ascending
/// edge order.
nlohmann::json edge_set_to_json(const Graph& g, EdgeSet f);

nlohmann::json poly_to_json(const Graph& g, const MultilinearPoly& p);
MultilinearPoly poly_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json rigidity_report_to_json(const Graph& g,
                                       const RigidityReport& rep,
                                       const std::vector<EdgeSet>& circuits);

nlohmann::json component_report_to_json(const Graph& g,
                                        const ComponentReport& rep,
                                        bool cm);

nlohmann::json verify_report_to_json(bool vanishing, int comb_rank,
                                     int slope_rank, int length_rank,
                                     bool matroids_equal, bool polygons,
                                     std::uint64_t seed, std::uint64_t prime);

}  // namespace picspace
