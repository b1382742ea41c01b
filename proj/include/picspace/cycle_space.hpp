#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "picspace/graph.hpp"
#include "picspace/poly.hpp"

namespace picspace {

/// Each edge as an ordered (tail, head) pair; the global convention
/// orients every edge from its smaller endpoint to its larger one.
using Orientation = std::vector<std::pair<int, int>>;

Orientation default_orientation(const Graph& g);

/// Integer 1-chain: edge index -> coefficient (sparse; no zeros).
struct SignedEdgeVector {
    std::map<int, int> coeffs;

    int coeff(int e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? 0 : it->second;
    }
    EdgeSet support() const {
        EdgeSet s = 0;
        for (auto& [e, c] : coeffs) s |= edge_bit(e);
        return s;
    }
};

/// The fundamental cycle of non-tree edge e over spanning tree t of
/// (V(f), f): coefficient -1 on e, +-1 along the tree path joining its
/// endpoints.  Throws if e lies in t.
SignedEdgeVector fundamental_cycle(const Graph& g, EdgeSet t, int e);

/// C_T: rows = non-tree edges of f in ascending edge order, columns =
/// tree edges likewise; entry (e,f) is the path coefficient of the
/// fundamental cycle of e.
struct CycleMatrix {
    std::vector<int> row_edges;  // S = f \ t
    std::vector<int> col_edges;  // t
    Eigen::MatrixXi entries;
};

CycleMatrix cycle_matrix(const Graph& g, EdgeSet f, EdgeSet t);
CycleMatrix cycle_matrix(const Graph& g, EdgeSet t);

/// For a pseudocircuit f with coupled tree t: does C_T * C_S equal the
/// identity over the integers?  Throws if f \ t is not a spanning
/// tree.
bool verify_inverse(const Graph& g, EdgeSet f, EdgeSet t);
bool verify_inverse(const Graph& g, EdgeSet t);

/// M_T: entry (e,f) = c_ef (m_e - m_f); rows/cols ordered as in the
/// cycle matrix.
struct SlopeMatrix {
    std::vector<int> row_edges;
    std::vector<int> col_edges;
    std::vector<std::vector<MultilinearPoly>> entries;
};

SlopeMatrix slope_matrix(const Graph& g, EdgeSet f, EdgeSet t);
SlopeMatrix slope_matrix(const Graph& g, EdgeSet t);

}  // namespace picspace
