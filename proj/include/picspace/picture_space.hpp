#pragma once

#include <vector>

#include "picspace/graph.hpp"
#include "picspace/rigidity.hpp"

namespace picspace {

/// One stratum of the picture space: pictures whose vertex-coincidence
/// pattern is exactly the given partition.
struct Cellule {
    Partition partition;
    int dimension;            // 2*(blocks) + |collapsed_edges|
    EdgeSet collapsed_edges;  // edges inside a block
};

Cellule cellule(const Graph& g, const Partition& a);

/// Does a put all of V(f) into a single block?
bool collapses(const Graph& g, const Partition& a, EdgeSet f);

/// Cellule lies in the picture variety iff a collapses no rigidity
/// circuit of g.
bool cellule_in_picture_variety(const Graph& g, const Partition& a);

/// Closure order on cellules: is the cellule of b contained in the
/// closure of the cellule of a?  Tested as: a refines b and b/a
/// collapses no multigraph pseudocircuit of the multigraph quotient
/// g/a.
bool closure_contains(const Graph& g, const Partition& a, const Partition& b);

/// Equivalent three-condition form (refinement; no simple rigidity
/// circuit of g/a collapsed by b/a; at most one edge between merged
/// blocks).  Kept as a cross-check oracle.
bool closure_contains_via_circuits(const Graph& g, const Partition& a,
                                   const Partition& b);

struct ComponentReport {
    std::vector<std::pair<Partition, int>> components;  // partition, dim
    bool contains_picture_variety;  // discrete partition present
};

/// Irreducible components of the picture space: closures of cellules
/// of partitions maximal in the closure order.  Disconnected graphs
/// combine componentwise by cartesian products of partitions.
ComponentReport irreducible_components(const Graph& g,
                                       int max_partitions = 10);

/// Sufficient combinatorial certificate (rigidity independence) for
/// the picture variety being Cohen-Macaulay; false asserts nothing.
bool cm_certificate(const Graph& g);

}  // namespace picspace
