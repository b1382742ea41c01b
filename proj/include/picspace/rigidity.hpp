#pragma once

#include <optional>
#include <vector>

#include "picspace/graph.hpp"

namespace picspace {

struct RigidityReport {
    bool independent;
    int rank;
    bool rigid;
    std::optional<EdgeSet> violating_set;  // a circuit, when dependent
};

/// Disjoint pair of spanning trees of V(E) with union E.
struct TwoTreeDecomposition {
    EdgeSet tree_a;
    EdgeSet tree_b;
};

/// Independence of f in the 2-dimensional generic rigidity matroid:
/// |F'| <= 2|V(F')|-3 for every nonempty F' inside f.  (2,3)-pebble
/// game.
bool laman_independent(const Graph& g, EdgeSet f);
bool laman_independent(const Graph& g);

/// Same predicate by exhaustive subset counting; intended as the
/// authoritative oracle for |f| <= ~12.
bool laman_independent_exhaustive(const Graph& g, EdgeSet f);

/// Rank of f: size of a maximum Laman-independent subset.
int rigidity_rank(const Graph& g, EdgeSet f);
int rigidity_rank(const Graph& g);

/// Rigid iff E spans: rank = 2|V|-3.
bool is_rigid(const Graph& g);

RigidityReport rigidity_report(const Graph& g, EdgeSet f);

/// Minimal dependent edge set: |C| = 2|V(C)|-2 and every single-edge
/// deletion is Laman-independent.
bool is_rigidity_circuit(const Graph& g, EdgeSet f);
bool is_rigidity_circuit(const Graph& g);

/// All rigidity circuits inside E(g).  Direct subset filtering for
/// |E| <= 16, fundamental-circuit extraction beyond; throws past
/// max_edges.
std::vector<EdgeSet> rigidity_circuits(const Graph& g, int max_edges = 24);

/// Fundamental circuit of edge e over a maximal independent subset of
/// base: the minimal dependent subset of base+{e}, found by repeated
/// single-edge deletion tests.  Requires base+{e} dependent.
EdgeSet fundamental_rigidity_circuit(const Graph& g, EdgeSet base, int e);

/// Witness 2-tree decomposition of (V(f), f), if any.
std::optional<TwoTreeDecomposition> is_pseudocircuit(const Graph& g,
                                                     EdgeSet f);
std::optional<TwoTreeDecomposition> is_pseudocircuit(const Graph& g);

/// All T inside f with T and f\T both spanning trees of V(f);
/// complement-closed.
std::vector<EdgeSet> coupled_spanning_trees(const Graph& g, EdgeSet f);
std::vector<EdgeSet> coupled_spanning_trees(const Graph& g);

/// Multigraph pseudocircuit: |E| = 2|V|-2 and |F| <= 2|V(F)|-2 for all
/// nonempty sub-multisets F.
bool is_multigraph_pseudocircuit(const Multigraph& m);

/// Tutte/Nash-Williams test restricted to the vertices of `support`:
/// does the induced multigraph contain two edge-disjoint spanning
/// trees of support?
bool has_two_disjoint_spanning_trees(const Multigraph& m, VertexSet support);

}  // namespace picspace
