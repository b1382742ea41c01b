#include "picspace/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace picspace {

namespace {

// Union-find over a handful of vertices.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    for (auto& id : vertices) {
        if (index_.count(id)) continue;
        index_[id] = static_cast<int>(ids_.size());
        ids_.push_back(id);
    }
    auto intern = [&](const std::string& id) {
        auto it = index_.find(id);
        if (it != index_.end()) return it->second;
        int v = static_cast<int>(ids_.size());
        index_[id] = v;
        ids_.push_back(id);
        return v;
    };
    std::vector<std::pair<int, int>> es;
    for (auto& [u, w] : edges) {
        int a = intern(u), b = intern(w);
        if (a == b) throw std::runtime_error("loop edge " + u + " " + w);
        if (a > b) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (es.size() > 64) throw std::runtime_error("too many edges (limit 64)");
    edges_ = std::move(es);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
        edge_index_[edges_[i]] = i;
}

Graph Graph::complete(int n) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            es.emplace_back(std::to_string(i), std::to_string(j));
    return Graph(vs, es);
}

Graph Graph::wheel(int r) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i <= r; ++i) vs.push_back(std::to_string(i));
    for (int i = 1; i <= r; ++i) {
        es.emplace_back("0", std::to_string(i));
        es.emplace_back(std::to_string(i), std::to_string(i % r + 1));
    }
    return Graph(vs, es);
}

Graph Graph::polygon(int n) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i)
        es.emplace_back(std::to_string(i), std::to_string(i % n + 1));
    return Graph(vs, es);
}

Graph Graph::path(int n) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i)
        es.emplace_back(std::to_string(i), std::to_string(i + 1));
    return Graph(vs, es);
}

int Graph::vertex_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::runtime_error("unknown vertex id: " + id);
    return it->second;
}

int Graph::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = edge_index_.find({a, b});
    return it == edge_index_.end() ? -1 : it->second;
}

EdgeSet Graph::full_edge_set() const {
    return edge_count() == 64 ? ~EdgeSet{0}
                              : (EdgeSet{1} << edge_count()) - 1;
}

std::vector<int> Graph::edge_list(EdgeSet f) const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
        if (f & edge_bit(i)) out.push_back(i);
    return out;
}

VertexSet Graph::vertex_support(EdgeSet f) const {
    VertexSet s = 0;
    for (int i = 0; i < edge_count(); ++i)
        if (f & edge_bit(i)) {
            s |= VertexSet{1} << edges_[i].first;
            s |= VertexSet{1} << edges_[i].second;
        }
    return s;
}

int Graph::valence(EdgeSet f, int v) const {
    int d = 0;
    for (int i = 0; i < edge_count(); ++i)
        if (f & edge_bit(i))
            if (edges_[i].first == v || edges_[i].second == v) ++d;
    return d;
}

bool Graph::connected() const {
    if (vertex_count() <= 1) return true;
    Dsu dsu(vertex_count());
    int parts = vertex_count();
    for (auto& [a, b] : edges_)
        if (dsu.unite(a, b)) --parts;
    return parts == 1;
}

bool Graph::connected_on_support(EdgeSet f) const {
    if (f == 0) return true;
    Dsu dsu(vertex_count());
    for (int i = 0; i < edge_count(); ++i)
        if (f & edge_bit(i)) dsu.unite(edges_[i].first, edges_[i].second);
    VertexSet sup = vertex_support(f);
    int root = std::countr_zero(sup);
    for (int v = 0; v < vertex_count(); ++v)
        if ((sup >> v) & 1)
            if (dsu.find(v) != dsu.find(root)) return false;
    return true;
}

bool Graph::is_spanning_tree_of(EdgeSet f, VertexSet support) const {
    int nv = std::popcount(support);
    if (std::popcount(f) != nv - 1) return false;
    if ((vertex_support(f) | support) != support) return false;
    if (nv >= 2 && vertex_support(f) != support) return false;
    return acyclic(f) && connected_on_support(f);
}

bool Graph::is_spanning_tree(EdgeSet f) const {
    VertexSet all =
        vertex_count() == 32 ? ~VertexSet{0}
                             : (VertexSet{1} << vertex_count()) - 1;
    return is_spanning_tree_of(f, all);
}

bool Graph::acyclic(EdgeSet f) const {
    Dsu dsu(vertex_count());
    for (int i = 0; i < edge_count(); ++i)
        if (f & edge_bit(i))
            if (!dsu.unite(edges_[i].first, edges_[i].second)) return false;
    return true;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    Dsu dsu(vertex_count());
    for (auto& [a, b] : edges_) dsu.unite(a, b);
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < vertex_count(); ++v) by_root[dsu.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, vs] : by_root) out.push_back(vs);
    return out;
}

Graph parse_graph(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() == 1) {
            vertices.push_back(tok[0]);
        } else if (tok.size() == 2) {
            if (tok[0] == tok[1])
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": loop edge " + tok[0]);
            vertices.push_back(tok[0]);
            vertices.push_back(tok[1]);
            edges.emplace_back(tok[0], tok[1]);
        } else {
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected 'u v' or 'v'");
        }
    }
    return Graph(vertices, edges);
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    std::vector<int> seen(n, 0);
    for (auto& blk : blocks) {
        if (blk.empty()) throw std::runtime_error("empty partition block");
        std::sort(blk.begin(), blk.end());
        for (int v : blk) {
            if (v < 0 || v >= n)
                throw std::runtime_error("partition element out of range");
            if (seen[v]++)
                throw std::runtime_error("partition blocks not disjoint");
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::runtime_error("partition does not cover");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    blocks_ = std::move(blocks);
    block_of_.assign(n, -1);
    for (int i = 0; i < block_count(); ++i)
        for (int v : blocks_[i]) block_of_[v] = i;
}

Partition Partition::discrete(int n) {
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < n; ++v) blocks.push_back({v});
    return Partition(n, blocks);
}

Partition Partition::indiscrete(int n) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return Partition(n, {all});
}

std::vector<Partition> Partition::all(int n, int cap) {
    if (n > cap)
        throw std::runtime_error("partition enumeration cap exceeded (n=" +
                                 std::to_string(n) + ", cap=" +
                                 std::to_string(cap) + ")");
    std::vector<Partition> out;
    std::vector<std::vector<int>> blocks;
    // Each vertex joins an existing block or opens a new one; vertex 0
    // always opens the first, so every partition arises once in
    // canonical form.
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.emplace_back(n, blocks);
            return;
        }
        size_t existing = blocks.size();
        for (size_t i = 0; i < existing; ++i) {
            blocks[i].push_back(v);
            self(self, v + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({v});
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool refines(const Partition& a, const Partition& b) {
    if (a.ground_size() != b.ground_size())
        throw std::runtime_error("partitions of different ground sets");
    for (auto& blk : a.blocks())
        for (int v : blk)
            if (!b.same_block(blk[0], v)) return false;
    return true;
}

Partition quotient_partition(const Partition& a, const Partition& b) {
    if (!refines(a, b)) throw std::runtime_error("partition does not refine");
    std::map<int, std::vector<int>> grouped;
    for (int i = 0; i < a.block_count(); ++i)
        grouped[b.block_of(a.blocks()[i][0])].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [bb, blk] : grouped) blocks.push_back(blk);
    return Partition(a.block_count(), blocks);
}

Multigraph::Multigraph(std::vector<std::string> vertices,
                       std::map<std::pair<int, int>, int> multiplicities)
    : ids_(std::move(vertices)), mult_(std::move(multiplicities)) {
    for (auto& [e, m] : mult_) {
        if (e.first == e.second) throw std::runtime_error("multigraph loop");
        if (e.first > e.second)
            throw std::runtime_error("multigraph edge not normalized");
        if (m <= 0) throw std::runtime_error("nonpositive multiplicity");
    }
}

int Multigraph::total_edges() const {
    int t = 0;
    for (auto& [e, m] : mult_) t += m;
    return t;
}

int Multigraph::multiplicity(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = mult_.find({a, b});
    return it == mult_.end() ? 0 : it->second;
}

Graph Multigraph::simple_graph() const {
    std::vector<std::pair<std::string, std::string>> es;
    for (auto& [e, m] : mult_) es.emplace_back(ids_[e.first], ids_[e.second]);
    return Graph(ids_, es);
}

QuotientResult quotient(const Graph& g, const Partition& a) {
    if (a.ground_size() != g.vertex_count())
        throw std::runtime_error("partition size does not match graph");
    std::vector<std::string> block_ids;
    for (auto& blk : a.blocks()) {
        std::string id;
        for (int v : blk) {
            if (!id.empty()) id += "+";
            id += g.vertex_id(v);
        }
        block_ids.push_back(id);
    }
    std::map<std::pair<int, int>, int> mult;
    int dropped = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [v, w] = g.edge(i);
        int bv = a.block_of(v), bw = a.block_of(w);
        if (bv == bw) {
            ++dropped;
            continue;
        }
        if (bv > bw) std::swap(bv, bw);
        ++mult[{bv, bw}];
    }
    return QuotientResult{Multigraph(block_ids, mult), dropped};
}

namespace {

void spanning_tree_rec(const Graph& g, const std::vector<int>& edges,
                       size_t pos, Dsu dsu, int joined, int needed,
                       EdgeSet included, EdgeSet available,
                       std::vector<EdgeSet>& out) {
    if (joined == needed) {
        out.push_back(included);
        return;
    }
    if (pos == edges.size()) return;
    int e = edges[pos];
    auto [a, b] = g.edge(e);
    // Branch 1: include e unless it closes a polygon.
    Dsu with = dsu;
    if (with.unite(a, b))
        spanning_tree_rec(g, edges, pos + 1, with, joined + 1, needed,
                          included | edge_bit(e), available, out);
    // Branch 2: exclude e unless it is a bridge for what remains.
    Dsu without(g.vertex_count());
    for (size_t i = pos + 1; i < edges.size(); ++i) {
        auto [x, y] = g.edge(edges[i]);
        without.unite(x, y);
    }
    for (int i : g.edge_list(included)) {
        auto [x, y] = g.edge(i);
        without.unite(x, y);
    }
    bool still_connected = true;
    VertexSet sup = g.vertex_support(available | included);
    int root = std::countr_zero(sup);
    for (int v = 0; v < g.vertex_count() && still_connected; ++v)
        if ((sup >> v) & 1)
            still_connected = without.find(v) == without.find(root);
    if (still_connected)
        spanning_tree_rec(g, edges, pos + 1, dsu, joined, needed, included,
                          available & ~edge_bit(e), out);
}

}  // namespace

std::vector<EdgeSet> spanning_trees(const Graph& g, EdgeSet f) {
    if (!g.connected_on_support(f))
        throw std::runtime_error("not connected");
    VertexSet sup = g.vertex_support(f);
    int nv = std::popcount(sup);
    if (nv <= 1) return {EdgeSet{0}};
    std::vector<EdgeSet> out;
    spanning_tree_rec(g, g.edge_list(f), 0, Dsu(g.vertex_count()), 0, nv - 1,
                      0, f, out);
    return out;
}

std::vector<EdgeSet> spanning_trees(const Graph& g) {
    if (!g.connected()) throw std::runtime_error("not connected");
    if (g.vertex_count() >= 2 &&
        std::popcount(g.vertex_support(g.full_edge_set())) !=
            g.vertex_count())
        throw std::runtime_error("not connected");
    return spanning_trees(g, g.full_edge_set());
}

}  // namespace picspace
