#pragma once

#include <cstdint>
#include <vector>

#include "picspace/graph.hpp"
#include "picspace/poly.hpp"
#include "picspace/treepoly.hpp"

namespace picspace {

/// Affine picture over F_p: a point per vertex and a slope/intercept
/// per edge, satisfying y_v = m_e x_v + b_e exactly at both endpoints.
struct PictureSample {
    std::uint64_t prime;
    std::vector<std::uint64_t> x, y;          // per vertex
    std::vector<std::uint64_t> slope, intercept;  // per edge
};

/// Deterministic generic picture: vertex points pairwise distinct,
/// x-coordinates distinct across every edge, lines derived from the
/// points.  Requires p > 8|V|^2.
PictureSample random_generic_picture(const Graph& g, std::uint64_t p,
                                     std::uint64_t seed);

/// Sum of m_e * x_e over every fundamental polygon of a spanning tree
/// vanishes (these generate all polygon relations).
bool check_polygon_relations(const Graph& g, const PictureSample& s);

/// Evaluates the polynomial at the sample's slopes.
std::uint64_t evaluate_at_slopes(const MultilinearPoly& poly,
                                 const std::vector<std::uint64_t>& slopes,
                                 std::uint64_t p);

/// Every tree polynomial of every rigidity circuit of g vanishes at
/// the slopes of every sampled generic picture.
bool check_ideal_vanishing(const Graph& g, int samples, std::uint64_t p,
                           std::uint64_t seed);

/// Rank of the Jacobian of the slope functions (y_w-y_v)/(x_w-x_v) at
/// a random generic point; maximum over three derived seeds.
int slope_jacobian_rank(const Graph& g, EdgeSet f, std::uint64_t p,
                        std::uint64_t seed);
int slope_jacobian_rank(const Graph& g, std::uint64_t p, std::uint64_t seed);

/// Rank of the standard rigidity matrix (derivatives of squared edge
/// lengths) at a random point; maximum over three derived seeds.
int length_jacobian_rank(const Graph& g, EdgeSet f, std::uint64_t p,
                         std::uint64_t seed);
int length_jacobian_rank(const Graph& g, std::uint64_t p,
                         std::uint64_t seed);

/// Slope rank = length rank = combinatorial rank, for the whole edge
/// set and 20 random subsets.
bool matroid_equality_check(const Graph& g, std::uint64_t p,
                            std::uint64_t seed);

}  // namespace picspace
