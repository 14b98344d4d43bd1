#include "turanlab/canonical.hpp"

#include "turanlab/graph6.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace turanlab {
namespace {

class LeastLabelSearch {
public:
    explicit LeastLabelSearch(const SimpleGraph& g) : n_(g.n()), adj_(static_cast<std::size_t>(n_), 0) {
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        order_.resize(static_cast<std::size_t>(n_));
        cols_.resize(static_cast<std::size_t>(n_));
        codes_.assign(static_cast<std::size_t>(n_) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(n_), 0));
    }

    std::vector<Vertex> run() {
        if (n_ > 0) descend(0, 0);
        return best_order_;
    }

private:
    bool twins(Vertex a, Vertex b) const {
        const std::uint64_t ma = adj_[static_cast<std::size_t>(a)] & ~(std::uint64_t{1} << b);
        const std::uint64_t mb = adj_[static_cast<std::size_t>(b)] & ~(std::uint64_t{1} << a);
        return ma == mb;
    }

    // -1, 0, +1 comparing the current prefix (length depth, then `next`) with the best.
    int compare_prefix(int depth, std::uint64_t next) const {
        for (int i = 0; i < depth; ++i) {
            if (cols_[static_cast<std::size_t>(i)] != best_cols_[static_cast<std::size_t>(i)])
                return cols_[static_cast<std::size_t>(i)] < best_cols_[static_cast<std::size_t>(i)] ? -1 : 1;
        }
        if (next != best_cols_[static_cast<std::size_t>(depth)]) return next < best_cols_[static_cast<std::size_t>(depth)] ? -1 : 1;
        return 0;
    }

    void descend(int depth, std::uint64_t placed) {
        if (depth == n_) {
            if (best_order_.empty() || compare_prefix(n_ - 1, cols_[static_cast<std::size_t>(n_ - 1)]) < 0) {
                best_order_ = order_;
                best_cols_ = cols_;
            }
            return;
        }
        const auto& code = codes_[static_cast<std::size_t>(depth)];
        std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
        for (Vertex c = 0; c < n_; ++c)
            if (!((placed >> c) & 1)) least = std::min(least, code[static_cast<std::size_t>(c)]);
        if (!best_order_.empty() && compare_prefix(depth, least) > 0) return;

        std::uint64_t tried = 0;
        for (Vertex c = 0; c < n_; ++c) {
            if ((placed >> c) & 1 || code[static_cast<std::size_t>(c)] != least) continue;
            bool skip = false;
            for (std::uint64_t t = tried; t && !skip; t &= t - 1)
                skip = twins(c, std::countr_zero(t));
            if (skip) continue;
            tried |= std::uint64_t{1} << c;

            order_[static_cast<std::size_t>(depth)] = c;
            cols_[static_cast<std::size_t>(depth)] = least;
            auto& next = codes_[static_cast<std::size_t>(depth) + 1];
            for (Vertex w = 0; w < n_; ++w)
                next[static_cast<std::size_t>(w)] = (code[static_cast<std::size_t>(w)] << 1) |
                                                    ((adj_[static_cast<std::size_t>(w)] >> c) & 1);
            descend(depth + 1, placed | (std::uint64_t{1} << c));
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<Vertex> order_;
    std::vector<std::uint64_t> cols_;  // cols_[d]: adjacency of position d to positions 0..d-1
    std::vector<std::vector<std::uint64_t>> codes_;
    std::vector<Vertex> best_order_;
    std::vector<std::uint64_t> best_cols_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
    if (g.n() > kMaxCanonicalVertices)
        throw std::invalid_argument("canonical_labeling supports at most 64 vertices");
    CanonicalLabeling out;
    out.order = LeastLabelSearch(g).run();
    out.graph = SimpleGraph(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.has_edge(out.order[static_cast<std::size_t>(i)], out.order[static_cast<std::size_t>(j)]))
                out.graph.add_edge(i, j);
    out.graph6 = graph6_encode(out.graph);
    return out;
}

std::string canonical_graph6(const SimpleGraph& g) { return canonical_labeling(g).graph6; }

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_graph6(a) == canonical_graph6(b);
}

}  // namespace turanlab
