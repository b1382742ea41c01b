#include "picspace/picture_space.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace picspace {

Cellule cellule(const Graph& g, const Partition& a) {
    if (a.ground_size() != g.vertex_count())
        throw std::runtime_error("partition size does not match graph");
    EdgeSet collapsed = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [v, w] = g.edge(e);
        if (a.same_block(v, w)) collapsed |= edge_bit(e);
    }
    return Cellule{a, 2 * a.block_count() + std::popcount(collapsed),
                   collapsed};
}

bool collapses(const Graph& g, const Partition& a, EdgeSet f) {
    VertexSet sup = g.vertex_support(f);
    int first = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((sup >> v) & 1) {
            if (first < 0)
                first = v;
            else if (!a.same_block(first, v))
                return false;
        }
    return true;
}

bool cellule_in_picture_variety(const Graph& g, const Partition& a) {
    for (EdgeSet c : rigidity_circuits(g))
        if (collapses(g, a, c)) return false;
    return true;
}

bool closure_contains(const Graph& g, const Partition& a,
                      const Partition& b) {
    if (!refines(a, b)) return false;
    Partition q = quotient_partition(a, b);
    Multigraph quot = quotient(g, a).graph;
    for (auto& block : q.blocks()) {
        if (block.size() < 2) continue;
        // Any merged vertex subset supporting two disjoint spanning
        // trees yields a collapsed multigraph pseudocircuit.
        std::uint32_t full = (std::uint32_t{1} << block.size()) - 1;
        for (std::uint32_t sub = 1; sub <= full; ++sub) {
            if (std::popcount(sub) < 2) continue;
            VertexSet w = 0;
            for (size_t i = 0; i < block.size(); ++i)
                if ((sub >> i) & 1) w |= VertexSet{1} << block[i];
            if (has_two_disjoint_spanning_trees(quot, w)) return false;
        }
    }
    return true;
}

bool closure_contains_via_circuits(const Graph& g, const Partition& a,
                                   const Partition& b) {
    if (!refines(a, b)) return false;
    Partition q = quotient_partition(a, b);
    Multigraph quot = quotient(g, a).graph;
    // (c): merged blocks joined by at most one edge of g.
    for (int i = 0; i < q.ground_size(); ++i)
        for (int j = i + 1; j < q.ground_size(); ++j)
            if (q.same_block(i, j) && quot.multiplicity(i, j) > 1)
                return false;
    // (b): no rigidity circuit of the simple quotient collapsed.
    Graph simple = quot.simple_graph();
    for (EdgeSet c : rigidity_circuits(simple))
        if (collapses(simple, q, c)) return false;
    return true;
}

namespace {

ComponentReport components_connected(const Graph& g, int max_partitions) {
    std::vector<Partition> parts =
        Partition::all(g.vertex_count(), max_partitions);
    ComponentReport rep;
    rep.contains_picture_variety = false;
    for (const Partition& a : parts) {
        bool maximal = true;
        for (const Partition& other : parts) {
            if (other == a) continue;
            if (closure_contains(g, other, a)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            rep.components.emplace_back(a, cellule(g, a).dimension);
            if (a.is_discrete()) rep.contains_picture_variety = true;
        }
    }
    return rep;
}

}  // namespace

ComponentReport irreducible_components(const Graph& g, int max_partitions) {
    auto comps = g.connected_components();
    if (comps.size() <= 1 && g.vertex_count() > 0)
        return components_connected(g, max_partitions);
    if (g.vertex_count() == 0)
        return ComponentReport{{{Partition(0, {}), 0}}, true};

    // The picture space of a disconnected graph is the product over
    // connected components; its components are products of component
    // components, i.e. unions of per-component maximal partitions.
    std::vector<ComponentReport> sub;
    for (auto& verts : comps) {
        std::vector<std::string> ids;
        for (int v : verts) ids.push_back(g.vertex_id(v));
        std::vector<std::pair<std::string, std::string>> es;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edge(e);
            if (std::find(verts.begin(), verts.end(), a) != verts.end() &&
                std::find(verts.begin(), verts.end(), b) != verts.end())
                es.emplace_back(g.vertex_id(a), g.vertex_id(b));
        }
        sub.push_back(components_connected(Graph(ids, es), max_partitions));
    }
    ComponentReport rep;
    rep.contains_picture_variety = false;
    std::vector<std::pair<std::vector<std::vector<int>>, int>> acc = {
        {{}, 0}};
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        std::vector<std::pair<std::vector<std::vector<int>>, int>> next;
        for (auto& [blocks, dim] : acc)
            for (auto& [p, d] : sub[ci].components) {
                auto merged = blocks;
                for (auto& blk : p.blocks()) {
                    std::vector<int> global;
                    for (int v : blk) global.push_back(comps[ci][v]);
                    merged.push_back(global);
                }
                next.emplace_back(merged, dim + d);
            }
        acc = std::move(next);
    }
    for (auto& [blocks, dim] : acc) {
        Partition p(g.vertex_count(), blocks);
        if (p.is_discrete()) rep.contains_picture_variety = true;
        rep.components.emplace_back(std::move(p), dim);
    }
    std::sort(rep.components.begin(), rep.components.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rep;
}

bool cm_certificate(const Graph& g) { return laman_independent(g); }

}  // namespace picspace
