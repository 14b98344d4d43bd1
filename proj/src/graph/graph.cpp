#include "turanlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace turanlab {

SimpleGraph::SimpleGraph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

void SimpleGraph::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw std::out_of_range("vertex out of range: (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") with n = " + std::to_string(n()));
    if (u == v) throw std::invalid_argument("loop requested at vertex " + std::to_string(u));
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    auto& ru = rows_[static_cast<std::size_t>(u)];
    if (ru.test(static_cast<std::size_t>(v))) return false;
    ru.set(static_cast<std::size_t>(v));
    rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    ++m_;
    return true;
}

bool SimpleGraph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    auto& ru = rows_[static_cast<std::size_t>(u)];
    if (!ru.test(static_cast<std::size_t>(v))) return false;
    ru.reset(static_cast<std::size_t>(v));
    rows_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(u));
    --m_;
    return true;
}

int SimpleGraph::degree(Vertex v) const { return static_cast<int>(row(v).count()); }

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for_each_bit(row(v), [&](Vertex w) { out.push_back(w); });
    return out;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n(); ++u)
        for_each_bit(row(u), [&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

VertexSet SimpleGraph::full_set() const {
    VertexSet s(static_cast<std::size_t>(n()));
    s.set();
    return s;
}

BipartiteGraph::BipartiteGraph(SimpleGraph graph, std::vector<std::uint8_t> side)
    : graph_(std::move(graph)), side_(std::move(side)) {
    if (static_cast<int>(side_.size()) != graph_.n())
        throw std::invalid_argument("side array length does not match vertex count");
    for (auto s : side_)
        if (s > 1) throw std::invalid_argument("side labels must be 0 or 1");
    for (auto [u, v] : graph_.edges())
        if (side_[static_cast<std::size_t>(u)] == side_[static_cast<std::size_t>(v)])
            throw std::invalid_argument("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                        "} joins two vertices of the same side");
}

std::vector<Vertex> BipartiteGraph::side_vertices(int which) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < graph_.n(); ++v)
        if (side_[static_cast<std::size_t>(v)] == which) out.push_back(v);
    return out;
}

int BipartiteGraph::side_size(int which) const {
    return static_cast<int>(std::count(side_.begin(), side_.end(), static_cast<std::uint8_t>(which)));
}

VertexSet LayerDecomposition::layer_set(int i, int n) const {
    VertexSet s(static_cast<std::size_t>(n));
    if (i >= 0 && i < static_cast<int>(layers.size()))
        for (Vertex v : layers[static_cast<std::size_t>(i)]) s.set(static_cast<std::size_t>(v));
    return s;
}

SimpleGraph new_graph(int n) { return SimpleGraph(n); }

DegreeStats degree_stats(const SimpleGraph& g) {
    if (g.n() == 0) throw std::invalid_argument("degree_stats: graph has no vertices");
    DegreeStats st;
    st.min_degree = g.degree(0);
    st.max_degree = st.min_degree;
    for (Vertex v = 1; v < g.n(); ++v) {
        const int d = g.degree(v);
        st.min_degree = std::min(st.min_degree, d);
        st.max_degree = std::max(st.max_degree, d);
    }
    st.average_degree = Rational(2 * g.m(), g.n());
    return st;
}

LayerDecomposition neighborhood_layers(const SimpleGraph& g, Vertex v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("neighborhood_layers: root out of range");
    LayerDecomposition d;
    d.root = v;
    d.layer_of.assign(static_cast<std::size_t>(g.n()), -1);
    d.layer_of[static_cast<std::size_t>(v)] = 0;
    std::vector<Vertex> frontier{v};
    while (!frontier.empty()) {
        d.layers.push_back(frontier);
        const int next_layer = static_cast<int>(d.layers.size());
        std::vector<Vertex> next;
        for (Vertex u : frontier)
            for_each_bit(g.row(u), [&](Vertex w) {
                if (d.layer_of[static_cast<std::size_t>(w)] < 0) {
                    d.layer_of[static_cast<std::size_t>(w)] = next_layer;
                    next.push_back(w);
                }
            });
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    for (Vertex u = 0; u < g.n(); ++u)
        if (d.layer_of[static_cast<std::size_t>(u)] < 0) d.unreachable.push_back(u);
    return d;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> s) {
    std::vector<Vertex> members(s.begin(), s.end());
    for (Vertex v : members)
        if (v < 0 || v >= g.n()) throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    InducedSubgraph out{SimpleGraph(static_cast<int>(members.size())), members};
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.has_edge(members[i], members[j])) out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
    std::vector<Vertex> members;
    for_each_bit(s, [&](Vertex v) { members.push_back(v); });
    return induced_subgraph(g, members);
}

PeelResult min_degree_peel(const SimpleGraph& g, const Rational& threshold) {
    const int n = g.n();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    PeelResult res;
    for (;;) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            if (Rational(deg[static_cast<std::size_t>(v)]) >= threshold) continue;
            if (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]) pick = v;
        }
        if (pick < 0) break;
        alive[static_cast<std::size_t>(pick)] = false;
        res.removal_order.push_back(pick);
        for_each_bit(g.row(pick), [&](Vertex w) {
            if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
        });
    }
    for (Vertex v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) res.kept.push_back(v);
    auto sub = induced_subgraph(g, res.kept);
    res.graph = std::move(sub.graph);
    return res;
}

BipartiteGraph bipartite_double_cover(const SimpleGraph& g) {
    const int n = g.n();
    SimpleGraph cover(2 * n);
    for (auto [u, v] : g.edges()) {
        cover.add_edge(u, n + v);
        cover.add_edge(v, n + u);
    }
    std::vector<std::uint8_t> side(static_cast<std::size_t>(2 * n), 0);
    std::fill(side.begin() + n, side.end(), 1);
    return BipartiteGraph(std::move(cover), std::move(side));
}

std::optional<std::vector<std::uint8_t>> two_coloring(const SimpleGraph& g) {
    const int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - color[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::vector<std::uint8_t>(color.begin(), color.end());
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
    SimpleGraph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph complete_bipartite_graph(int a, int b) {
    SimpleGraph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph petersen_graph() {
    SimpleGraph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

}  // namespace turanlab
