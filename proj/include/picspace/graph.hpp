#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace picspace {

/// Subset of the edges of an ambient Graph, as a bitmask over the fixed
/// global edge ordering (lexicographic by endpoint index pair).
using EdgeSet = std::uint64_t;

/// Subset of the vertices of an ambient Graph, as a bitmask over dense
/// vertex indices.
using VertexSet = std::uint32_t;

inline EdgeSet edge_bit(int e) { return EdgeSet{1} << e; }

/// Finite simple graph: no loops, no parallel edges.  Vertex ids are
/// arbitrary strings, mapped to dense indices by first appearance; the
/// edge list is sorted lexicographically by (min index, max index) and
/// this ordering underlies every EdgeSet bitmask.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    static Graph complete(int n);
    /// r-wheel: hub vertex "0" joined to the r-gon on "1".."r".
    static Graph wheel(int r);
    /// n-gon on vertices "1".."n".
    static Graph polygon(int n);
    static Graph path(int n);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int v) const { return ids_[v]; }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    int vertex_index(const std::string& id) const;

    /// Endpoints of edge i as internal indices, smaller first.
    std::pair<int, int> edge(int i) const { return edges_[i]; }
    /// Index of edge {a,b}, or -1 if absent.
    int edge_index(int a, int b) const;

    EdgeSet full_edge_set() const;
    std::vector<int> edge_list(EdgeSet f) const;
    VertexSet vertex_support(EdgeSet f) const;
    int valence(EdgeSet f, int v) const;

    bool connected() const;
    /// Is (V(f), f) connected?  The empty set and single vertices count
    /// as connected.
    bool connected_on_support(EdgeSet f) const;
    /// Does f span exactly the vertices of `support` as a tree?
    bool is_spanning_tree_of(EdgeSet f, VertexSet support) const;
    bool is_spanning_tree(EdgeSet f) const;

    bool acyclic(EdgeSet f) const;
    std::vector<std::vector<int>> connected_components() const;

    bool operator==(const Graph& o) const {
        return ids_ == o.ids_ && edges_ == o.edges_;
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, int> edge_index_;
};

/// Parses edge-list text: lines "u v" (an edge) or "v" (a declared
/// isolated vertex); '#' starts a comment; blank lines are skipped.
/// Duplicate edge lines collapse.  Throws std::runtime_error with the
/// offending line number on loops or malformed tokens.
Graph parse_graph(const std::string& text);

/// Partition of {0..n-1} in canonical form: each block ascending,
/// blocks ordered by their minimum element.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);

    static Partition discrete(int n);
    static Partition indiscrete(int n);
    /// All set partitions of {0..n-1} in canonical order; count Bell(n).
    /// Throws if n exceeds the cap.
    static std::vector<Partition> all(int n, int cap = 10);

    int ground_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int v) const { return block_of_[v]; }
    bool same_block(int v, int w) const { return block_of_[v] == block_of_[w]; }

    bool is_discrete() const { return block_count() == n_; }
    bool is_indiscrete() const { return block_count() == 1; }

    bool operator==(const Partition& o) const {
        return n_ == o.n_ && blocks_ == o.blocks_;
    }
    bool operator<(const Partition& o) const { return blocks_ < o.blocks_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

/// A <= B in refinement order: every block of a inside some block of b.
bool refines(const Partition& a, const Partition& b);

/// For a <= b, the induced partition on the blocks of a (ground set =
/// block indices of a in canonical order).
Partition quotient_partition(const Partition& a, const Partition& b);

/// Multigraph: no loops, positive multiplicities.
class Multigraph {
public:
    Multigraph(std::vector<std::string> vertices,
               std::map<std::pair<int, int>, int> multiplicities);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    const std::string& vertex_id(int v) const { return ids_[v]; }
    const std::map<std::pair<int, int>, int>& multiplicities() const {
        return mult_;
    }
    int total_edges() const;
    int multiplicity(int a, int b) const;

    /// Forgets multiplicities.
    Graph simple_graph() const;

private:
    std::vector<std::string> ids_;
    std::map<std::pair<int, int>, int> mult_;
};

struct QuotientResult {
    Multigraph graph;
    int dropped_edges;  // intra-block edges of g
};

/// G/A: one vertex per block, one parallel copy per cross edge of g.
QuotientResult quotient(const Graph& g, const Partition& a);

/// All spanning trees of (V(f), f), each exactly once, by recursive
/// include/exclude with bridge detection.  Throws if (V(f), f) is
/// disconnected.
std::vector<EdgeSet> spanning_trees(const Graph& g, EdgeSet f);
std::vector<EdgeSet> spanning_trees(const Graph& g);

}  // namespace picspace
