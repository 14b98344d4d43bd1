#pragma once

#include "turanlab/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace turanlab {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Largest vertex count the dense representation accepts.
inline constexpr int kMaxVertices = 1 << 16;

/// Undirected simple graph on vertices 0..n-1 stored as symmetric bit rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    int n() const { return static_cast<int>(rows_.size()); }
    long long m() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const;
    /// Returns true if the edge was newly inserted.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    int degree(Vertex v) const;
    const VertexSet& row(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
    std::vector<Vertex> neighbors(Vertex v) const;
    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Empty set sized for this graph.
    VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(n())); }
    VertexSet full_set() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.rows_ == b.rows_; }

private:
    void check_pair(Vertex u, Vertex v) const;

    std::vector<VertexSet> rows_;
    long long m_ = 0;
};

/// A graph with a proper two-colouring; side[v] is 0 or 1.
class BipartiteGraph {
public:
    /// Throws std::invalid_argument if some edge joins two vertices of the same side.
    BipartiteGraph(SimpleGraph graph, std::vector<std::uint8_t> side);

    const SimpleGraph& graph() const { return graph_; }
    const std::vector<std::uint8_t>& side() const { return side_; }
    std::vector<Vertex> side_vertices(int which) const;
    int side_size(int which) const;

private:
    SimpleGraph graph_;
    std::vector<std::uint8_t> side_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    Rational average_degree;  // 2m/n, exact
};

struct LayerDecomposition {
    Vertex root = 0;
    std::vector<std::vector<Vertex>> layers;  // layers[i] = N_i(root), layers[0] = {root}
    std::vector<Vertex> unreachable;
    std::vector<int> layer_of;  // -1 when unreachable

    /// Layer i as a bit set (empty when i is past the last layer).
    VertexSet layer_set(int i, int n) const;
};

/// Graph on a vertex subset together with new index -> parent index.
struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<Vertex> parent_index;
};

struct PeelResult {
    SimpleGraph graph;
    std::vector<Vertex> kept;           // new index -> original index
    std::vector<Vertex> removal_order;  // original indices in deletion order
};

SimpleGraph new_graph(int n);
DegreeStats degree_stats(const SimpleGraph& g);
LayerDecomposition neighborhood_layers(const SimpleGraph& g, Vertex v);

/// Members of `s` are sorted and deduplicated; new index i is the i-th smallest member.
InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> s);
InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);

/// Repeatedly deletes a vertex of current degree < threshold, lowest degree first,
/// then lowest index, until no such vertex remains.
PeelResult min_degree_peel(const SimpleGraph& g, const Rational& threshold);

/// Vertex (u, 0) maps to u and (u, 1) maps to n + u.
BipartiteGraph bipartite_double_cover(const SimpleGraph& g);

/// Proper two-colouring by BFS (colour 0 at the least vertex of each component), if any.
std::optional<std::vector<std::uint8_t>> two_coloring(const SimpleGraph& g);

// Named small graphs used throughout tests and examples.
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_bipartite_graph(int a, int b);
SimpleGraph petersen_graph();

template <typename F>
void for_each_bit(const VertexSet& s, F&& f) {
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) f(static_cast<Vertex>(i));
}

}  // namespace turanlab
