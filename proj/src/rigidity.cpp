#include "picspace/rigidity.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace picspace {

namespace {

// (2,3)-pebble game.  Each vertex carries two pebbles; inserting an
// edge uv requires four pebbles gathered on {u,v} and consumes one.
class PebbleGame {
public:
    explicit PebbleGame(int n) : pebbles_(n, 2), out_(n) {}

    bool try_insert(int u, int v) {
        while (pebbles_[u] + pebbles_[v] < 4) {
            if (!pull_pebble(u, v) && !pull_pebble(v, u)) return false;
        }
        --pebbles_[u];
        out_[u].push_back(v);
        return true;
    }

private:
    // Search from `root` (never taking a pebble off root or other) for
    // a free pebble; move it back along the reversed path.
    bool pull_pebble(int root, int other) {
        int n = static_cast<int>(pebbles_.size());
        std::vector<int> prev(n, -1);
        std::vector<char> seen(n, 0);
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x != root && x != other && pebbles_[x] > 0) {
                // Reverse the path root -> ... -> x.
                int cur = x;
                while (cur != root) {
                    int p = prev[cur];
                    auto it = std::find(out_[p].begin(), out_[p].end(), cur);
                    out_[p].erase(it);
                    out_[cur].push_back(p);
                    cur = p;
                }
                --pebbles_[x];
                ++pebbles_[root];
                return true;
            }
            for (int y : out_[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    prev[y] = x;
                    stack.push_back(y);
                }
        }
        return false;
    }

    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
};

}  // namespace

bool laman_independent(const Graph& g, EdgeSet f) {
    PebbleGame game(g.vertex_count());
    for (int e : g.edge_list(f)) {
        auto [a, b] = g.edge(e);
        if (!game.try_insert(a, b)) return false;
    }
    return true;
}

bool laman_independent(const Graph& g) {
    return laman_independent(g, g.full_edge_set());
}

bool laman_independent_exhaustive(const Graph& g, EdgeSet f) {
    std::vector<int> edges = g.edge_list(f);
    int m = static_cast<int>(edges.size());
    if (m > 24) throw std::runtime_error("exhaustive oracle: too many edges");
    for (std::uint32_t sub = 1; sub < (1u << m); ++sub) {
        EdgeSet fs = 0;
        for (int i = 0; i < m; ++i)
            if ((sub >> i) & 1) fs |= edge_bit(edges[i]);
        int nv = std::popcount(g.vertex_support(fs));
        if (std::popcount(fs) > 2 * nv - 3) return false;
    }
    return true;
}

int rigidity_rank(const Graph& g, EdgeSet f) {
    PebbleGame game(g.vertex_count());
    int rank = 0;
    for (int e : g.edge_list(f)) {
        auto [a, b] = g.edge(e);
        if (game.try_insert(a, b)) ++rank;
    }
    return rank;
}

int rigidity_rank(const Graph& g) {
    return rigidity_rank(g, g.full_edge_set());
}

bool is_rigid(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::runtime_error("rigidity undefined for |V| < 2");
    return rigidity_rank(g) == 2 * g.vertex_count() - 3;
}

EdgeSet fundamental_rigidity_circuit(const Graph& g, EdgeSet base, int e) {
    EdgeSet dep = base | edge_bit(e);
    if (laman_independent(g, dep))
        throw std::runtime_error("edge set is independent, no circuit");
    for (int f : g.edge_list(dep)) {
        EdgeSet smaller = dep & ~edge_bit(f);
        if (!laman_independent(g, smaller)) dep = smaller;
    }
    return dep;
}

RigidityReport rigidity_report(const Graph& g, EdgeSet f) {
    RigidityReport rep;
    rep.rank = rigidity_rank(g, f);
    rep.independent = rep.rank == std::popcount(f);
    rep.rigid = g.vertex_count() >= 2 &&
                rigidity_rank(g, f) == 2 * g.vertex_count() - 3;
    if (!rep.independent) {
        // Grow a maximal independent prefix, then extract the
        // fundamental circuit of the first rejected edge.
        PebbleGame game(g.vertex_count());
        EdgeSet indep = 0;
        for (int e : g.edge_list(f)) {
            auto [a, b] = g.edge(e);
            if (game.try_insert(a, b)) {
                indep |= edge_bit(e);
            } else {
                rep.violating_set = fundamental_rigidity_circuit(g, indep, e);
                break;
            }
        }
    }
    return rep;
}

bool is_rigidity_circuit(const Graph& g, EdgeSet f) {
    if (f == 0) return false;
    int nv = std::popcount(g.vertex_support(f));
    if (std::popcount(f) != 2 * nv - 2) return false;
    for (int e : g.edge_list(f))
        if (!laman_independent(g, f & ~edge_bit(e))) return false;
    return true;
}

bool is_rigidity_circuit(const Graph& g) {
    return is_rigidity_circuit(g, g.full_edge_set());
}

std::vector<EdgeSet> rigidity_circuits(const Graph& g, int max_edges) {
    int m = g.edge_count();
    if (m > max_edges)
        throw std::runtime_error("rigidity_circuits: edge cap " +
                                 std::to_string(max_edges) + " exceeded");
    std::vector<EdgeSet> out;
    if (m <= 16) {
        for (EdgeSet f = 1; f < (EdgeSet{1} << m); ++f) {
            int nv = std::popcount(g.vertex_support(f));
            if (std::popcount(f) != 2 * nv - 2) continue;
            if (is_rigidity_circuit(g, f)) out.push_back(f);
        }
        return out;
    }
    std::set<EdgeSet> found;
    PebbleGame game(g.vertex_count());
    EdgeSet indep = 0;
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edge(e);
        if (game.try_insert(a, b))
            indep |= edge_bit(e);
        else
            found.insert(fundamental_rigidity_circuit(g, indep, e));
    }
    out.assign(found.begin(), found.end());
    return out;
}

std::optional<TwoTreeDecomposition> is_pseudocircuit(const Graph& g,
                                                     EdgeSet f) {
    VertexSet sup = g.vertex_support(f);
    int nv = std::popcount(sup);
    if (nv < 2 || std::popcount(f) != 2 * nv - 2) return std::nullopt;
    if (!g.connected_on_support(f)) return std::nullopt;
    for (EdgeSet t : spanning_trees(g, f))
        if (g.is_spanning_tree_of(f & ~t, sup))
            return TwoTreeDecomposition{t, f & ~t};
    return std::nullopt;
}

std::optional<TwoTreeDecomposition> is_pseudocircuit(const Graph& g) {
    return is_pseudocircuit(g, g.full_edge_set());
}

std::vector<EdgeSet> coupled_spanning_trees(const Graph& g, EdgeSet f) {
    std::vector<EdgeSet> out;
    VertexSet sup = g.vertex_support(f);
    int nv = std::popcount(sup);
    if (nv < 2 || std::popcount(f) != 2 * nv - 2) return out;
    if (!g.connected_on_support(f)) return out;
    for (EdgeSet t : spanning_trees(g, f))
        if (g.is_spanning_tree_of(f & ~t, sup)) out.push_back(t);
    return out;
}

std::vector<EdgeSet> coupled_spanning_trees(const Graph& g) {
    return coupled_spanning_trees(g, g.full_edge_set());
}

bool is_multigraph_pseudocircuit(const Multigraph& m) {
    int nv = m.vertex_count();
    if (m.total_edges() != 2 * nv - 2) return false;
    // Sub-multiset counts are tightest when all parallel copies between
    // chosen vertices are taken, so ranging over vertex subsets
    // suffices.
    for (VertexSet w = 1; w < (VertexSet{1} << nv); ++w) {
        int count = 0;
        VertexSet touched = 0;
        for (auto& [e, mult] : m.multiplicities())
            if (((w >> e.first) & 1) && ((w >> e.second) & 1)) {
                count += mult;
                touched |= VertexSet{1} << e.first;
                touched |= VertexSet{1} << e.second;
            }
        if (count > 0 && count > 2 * std::popcount(touched) - 2) return false;
    }
    return true;
}

bool has_two_disjoint_spanning_trees(const Multigraph& m, VertexSet support) {
    std::vector<int> verts;
    for (int v = 0; v < m.vertex_count(); ++v)
        if ((support >> v) & 1) verts.push_back(v);
    int k = static_cast<int>(verts.size());
    if (k < 2) return false;
    // Tutte/Nash-Williams: two disjoint spanning trees exist iff every
    // partition into r parts is crossed by at least 2(r-1) edges.
    for (const Partition& p : Partition::all(k, 12)) {
        int cross = 0;
        for (auto& [e, mult] : m.multiplicities()) {
            auto ia = std::find(verts.begin(), verts.end(), e.first);
            auto ib = std::find(verts.begin(), verts.end(), e.second);
            if (ia == verts.end() || ib == verts.end()) continue;
            if (p.block_of(static_cast<int>(ia - verts.begin())) !=
                p.block_of(static_cast<int>(ib - verts.begin())))
                cross += mult;
        }
        if (cross < 2 * (p.block_count() - 1)) return false;
    }
    return true;
}

}  // namespace picspace
