#include "picspace/cycle_space.hpp"

#include <bit>
#include <stdexcept>

namespace picspace {

Orientation default_orientation(const Graph& g) {
    Orientation o;
    for (int i = 0; i < g.edge_count(); ++i) o.push_back(g.edge(i));
    return o;
}

namespace {

// Rooted parent arrays for the tree t; parent_edge[v] = edge index
// toward the root, -1 at roots and off-tree vertices.
struct RootedForest {
    std::vector<int> parent;
    std::vector<int> parent_edge;
    std::vector<int> depth;

    RootedForest(const Graph& g, EdgeSet t)
        : parent(g.vertex_count(), -1),
          parent_edge(g.vertex_count(), -1),
          depth(g.vertex_count(), -1) {
        std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
        for (int e : g.edge_list(t)) {
            auto [a, b] = g.edge(e);
            adj[a].push_back({b, e});
            adj[b].push_back({a, e});
        }
        for (int root = 0; root < g.vertex_count(); ++root) {
            if (depth[root] >= 0) continue;
            depth[root] = 0;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, e] : adj[v])
                    if (depth[w] < 0) {
                        depth[w] = depth[v] + 1;
                        parent[w] = v;
                        parent_edge[w] = e;
                        stack.push_back(w);
                    }
            }
        }
    }
};

// Adds the signed edges of the tree walk from a up to b's level and
// meeting point (lowest common ancestor).
void add_tree_path(const Graph& g, const RootedForest& forest, int a, int b,
                   SignedEdgeVector& out) {
    // Walking an edge (v -> parent(v)) traverses it from v; with the
    // smaller-to-larger orientation the coefficient is +1 when v is
    // the tail.
    auto step_up = [&](int& v, int sign) {
        int e = forest.parent_edge[v];
        int tail = g.edge(e).first;
        out.coeffs[e] += (v == tail ? sign : -sign);
        if (out.coeffs[e] == 0) out.coeffs.erase(e);
        v = forest.parent[v];
    };
    int x = a, y = b;
    while (forest.depth[x] > forest.depth[y]) step_up(x, +1);
    while (forest.depth[y] > forest.depth[x]) step_up(y, -1);
    while (x != y) {
        step_up(x, +1);
        step_up(y, -1);
    }
}

}  // namespace

SignedEdgeVector fundamental_cycle(const Graph& g, EdgeSet t, int e) {
    if (t & edge_bit(e))
        throw std::runtime_error("edge lies in the spanning tree");
    RootedForest forest(g, t);
    auto [a, b] = g.edge(e);  // oriented a -> b with a < b
    if (forest.depth[a] < 0 || forest.depth[b] < 0)
        throw std::runtime_error("edge endpoints not covered by tree");
    SignedEdgeVector z;
    z.coeffs[e] = -1;
    // Path a -> b through the tree, traversed tailwards: a walk from a
    // up to the meeting point contributes +, the b side -.
    add_tree_path(g, forest, a, b, z);
    return z;
}

CycleMatrix cycle_matrix(const Graph& g, EdgeSet f, EdgeSet t) {
    if ((t & f) != t) throw std::runtime_error("tree not inside edge set");
    CycleMatrix m;
    m.row_edges = g.edge_list(f & ~t);
    m.col_edges = g.edge_list(t);
    m.entries.setZero(static_cast<int>(m.row_edges.size()),
                      static_cast<int>(m.col_edges.size()));
    RootedForest forest(g, t);
    for (int r = 0; r < static_cast<int>(m.row_edges.size()); ++r) {
        auto [a, b] = g.edge(m.row_edges[r]);
        SignedEdgeVector z;
        add_tree_path(g, forest, a, b, z);
        for (int c = 0; c < static_cast<int>(m.col_edges.size()); ++c)
            m.entries(r, c) = z.coeff(m.col_edges[c]);
    }
    return m;
}

CycleMatrix cycle_matrix(const Graph& g, EdgeSet t) {
    return cycle_matrix(g, g.full_edge_set(), t);
}

bool verify_inverse(const Graph& g, EdgeSet f, EdgeSet t) {
    EdgeSet s = f & ~t;
    VertexSet sup = g.vertex_support(f);
    if (!g.is_spanning_tree_of(t, sup) || !g.is_spanning_tree_of(s, sup))
        throw std::runtime_error("complement is not a spanning tree");
    CycleMatrix ct = cycle_matrix(g, f, t);
    CycleMatrix cs = cycle_matrix(g, f, s);
    Eigen::MatrixXi prod = ct.entries * cs.entries;
    return prod == Eigen::MatrixXi::Identity(prod.rows(), prod.cols());
}

bool verify_inverse(const Graph& g, EdgeSet t) {
    return verify_inverse(g, g.full_edge_set(), t);
}

SlopeMatrix slope_matrix(const Graph& g, EdgeSet f, EdgeSet t) {
    CycleMatrix ct = cycle_matrix(g, f, t);
    SlopeMatrix m;
    m.row_edges = ct.row_edges;
    m.col_edges = ct.col_edges;
    m.entries.assign(m.row_edges.size(),
                     std::vector<MultilinearPoly>(m.col_edges.size()));
    for (size_t r = 0; r < m.row_edges.size(); ++r)
        for (size_t c = 0; c < m.col_edges.size(); ++c) {
            int coeff = ct.entries(static_cast<int>(r), static_cast<int>(c));
            if (coeff == 0) continue;
            m.entries[r][c] =
                MultilinearPoly::monomial(edge_bit(m.row_edges[r]), coeff) -
                MultilinearPoly::monomial(edge_bit(m.col_edges[c]), coeff);
        }
    return m;
}

SlopeMatrix slope_matrix(const Graph& g, EdgeSet t) {
    return slope_matrix(g, g.full_edge_set(), t);
}

}  // namespace picspace
