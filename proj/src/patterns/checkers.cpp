#include "turanlab/patterns.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace turanlab {
namespace {

class CycleSearch {
public:
    CycleSearch(const SimpleGraph& g, int length, bool induced)
        : g_(g), length_(length), induced_(induced), dist_(static_cast<std::size_t>(g.n())) {}

    std::optional<std::vector<Vertex>> run() {
        const int n = g_.n();
        for (Vertex v0 = 0; v0 + length_ <= n; ++v0) {
            allowed_ = g_.empty_set();
            for (Vertex w = v0 + 1; w < n; ++w) allowed_.set(static_cast<std::size_t>(w));
            distances_from(v0);
            path_.assign(1, v0);
            on_path_ = g_.empty_set();
            on_path_.set(static_cast<std::size_t>(v0));
            if (extend()) return path_;
        }
        return std::nullopt;
    }

private:
    void distances_from(Vertex v0) {
        std::fill(dist_.begin(), dist_.end(), std::numeric_limits<int>::max());
        dist_[static_cast<std::size_t>(v0)] = 0;
        std::deque<Vertex> queue{v0};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            VertexSet next = g_.row(u) & allowed_;
            for_each_bit(next, [&](Vertex w) {
                if (dist_[static_cast<std::size_t>(w)] == std::numeric_limits<int>::max()) {
                    dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            });
        }
    }

    bool extend() {
        const int i = static_cast<int>(path_.size());  // index of the vertex being placed
        if (i == length_) return true;
        const Vertex cur = path_.back();
        VertexSet cand = g_.row(cur) & allowed_;
        cand -= on_path_;
        if (induced_) {
            // No chords: the new vertex sees only its predecessor, plus the root when it closes the cycle.
            for (int j = 1; j + 1 < i; ++j) cand -= g_.row(path_[static_cast<std::size_t>(j)]);
            if (i >= 2 && i < length_ - 1) cand -= g_.row(path_[0]);
        }
        for (auto b = cand.find_first(); b != VertexSet::npos; b = cand.find_next(b)) {
            const auto w = static_cast<Vertex>(b);
            if (dist_[static_cast<std::size_t>(w)] > length_ - i) continue;
            if (i == length_ - 1 && (!g_.has_edge(w, path_[0]) || w < path_[1])) continue;
            path_.push_back(w);
            on_path_.set(b);
            if (extend()) return true;
            on_path_.reset(b);
            path_.pop_back();
        }
        return false;
    }

    const SimpleGraph& g_;
    int length_;
    bool induced_;
    std::vector<int> dist_;
    VertexSet allowed_;
    VertexSet on_path_;
    std::vector<Vertex> path_;
};

/// Lexicographically least independent subset of `cand` with `need` members.
bool least_independent_subset(const SimpleGraph& g, const VertexSet& cand, int need, std::vector<Vertex>& out) {
    if (need == 0) return true;
    int remaining = static_cast<int>(cand.count());
    for (auto b = cand.find_first(); b != VertexSet::npos; b = cand.find_next(b), --remaining) {
        if (remaining < need) return false;
        const auto w = static_cast<Vertex>(b);
        VertexSet rest = cand - g.row(w);
        for (auto c = rest.find_first(); c != VertexSet::npos && c <= b; c = rest.find_next(c)) rest.reset(c);
        if (static_cast<int>(rest.count()) < need - 1) continue;
        out.push_back(w);
        if (least_independent_subset(g, rest, need - 1, out)) return true;
        out.pop_back();
    }
    return false;
}

class BicliqueSearch {
public:
    BicliqueSearch(const SimpleGraph& g, int s, int t, bool induced) : g_(g), s_(s), t_(t), induced_(induced) {}

    std::optional<std::vector<Vertex>> run() {
        if (s_ + t_ > g_.n()) return std::nullopt;
        if (choose(0, g_.full_set())) {
            std::vector<Vertex> out = a_side_;
            out.insert(out.end(), b_side_.begin(), b_side_.end());
            return out;
        }
        return std::nullopt;
    }

private:
    bool choose(Vertex start, const VertexSet& common) {
        if (static_cast<int>(a_side_.size()) == s_) return pick_b(common);
        for (Vertex v = start; v < g_.n(); ++v) {
            if (induced_) {
                bool adjacent = false;
                for (Vertex a : a_side_) adjacent = adjacent || g_.has_edge(a, v);
                if (adjacent) continue;
            }
            VertexSet next = common & g_.row(v);
            if (static_cast<int>(next.count()) < t_) continue;
            a_side_.push_back(v);
            if (choose(v + 1, next)) return true;
            a_side_.pop_back();
        }
        return false;
    }

    bool pick_b(const VertexSet& common) {
        b_side_.clear();
        if (!induced_) {
            for (auto b = common.find_first(); b != VertexSet::npos && static_cast<int>(b_side_.size()) < t_;
                 b = common.find_next(b))
                b_side_.push_back(static_cast<Vertex>(b));
            return static_cast<int>(b_side_.size()) == t_;
        }
        return least_independent_subset(g_, common, t_, b_side_);
    }

    const SimpleGraph& g_;
    int s_;
    int t_;
    bool induced_;
    std::vector<Vertex> a_side_;
    std::vector<Vertex> b_side_;
};

std::optional<Witness> biclique(const SimpleGraph& g, int s, int t, PatternMode mode) {
    const auto pattern = ForbiddenPattern::complete_bipartite(s, t, mode);
    auto found = BicliqueSearch(g, pattern.s(), pattern.t(), pattern.induced()).run();
    if (!found) return std::nullopt;
    return Witness{pattern, std::move(*found)};
}

bool path_from(const SimpleGraph& g, Vertex cur, int have, int cap, VertexSet& used, int& best) {
    best = std::max(best, have);
    if (have >= cap) return true;
    VertexSet next = g.row(cur) - used;
    for (auto b = next.find_first(); b != VertexSet::npos; b = next.find_next(b)) {
        used.set(b);
        const bool done = path_from(g, static_cast<Vertex>(b), have + 1, cap, used, best);
        used.reset(b);
        if (done) return true;
    }
    return false;
}

}  // namespace

std::optional<Witness> contains_cycle_of_length(const SimpleGraph& g, int length, PatternMode mode) {
    const auto pattern = ForbiddenPattern::cycle(length, mode);
    auto found = CycleSearch(g, length, pattern.induced()).run();
    if (!found) return std::nullopt;
    return Witness{pattern, std::move(*found)};
}

std::optional<Witness> contains_kst(const SimpleGraph& g, int s, int t) { return biclique(g, s, t, PatternMode::Subgraph); }

std::optional<Witness> contains_induced_kst(const SimpleGraph& g, int s, int t) {
    return biclique(g, s, t, PatternMode::Induced);
}

std::optional<Witness> find_pattern(const SimpleGraph& g, const ForbiddenPattern& p) {
    if (p.kind() == ForbiddenPattern::Kind::Cycle) return contains_cycle_of_length(g, p.length(), p.mode());
    return biclique(g, p.s(), p.t(), p.mode());
}

std::optional<Witness> is_family_free(const SimpleGraph& g, const FamilySpec& family) {
    for (const auto& p : family.patterns())
        if (auto w = find_pattern(g, p)) return w;
    return std::nullopt;
}

bool validate_witness(const SimpleGraph& g, const Witness& w) {
    const auto& vs = w.vertices;
    if (static_cast<int>(vs.size()) != w.pattern.vertex_count()) return false;
    for (Vertex v : vs)
        if (v < 0 || v >= g.n()) return false;
    auto sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    const std::size_t k = vs.size();
    if (w.pattern.kind() == ForbiddenPattern::Kind::Cycle) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                const bool edge = g.has_edge(vs[i], vs[j]);
                if (consecutive && !edge) return false;
                if (!consecutive && edge && w.pattern.induced()) return false;
            }
        return true;
    }
    const std::size_t s = static_cast<std::size_t>(w.pattern.s());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool cross = (i < s) != (j < s);
            const bool edge = g.has_edge(vs[i], vs[j]);
            if (cross && !edge) return false;
            if (!cross && edge && w.pattern.induced()) return false;
        }
    return true;
}

CodegreeResult max_codegree_nonadjacent(const SimpleGraph& g) {
    CodegreeResult best;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            const int c = static_cast<int>((g.row(u) & g.row(v)).count());
            if (!best.pair || c > best.count) best = {c, std::make_pair(u, v)};
        }
    return best;
}

CodegreeResult max_codegree(const SimpleGraph& g) {
    CodegreeResult best;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            const int c = static_cast<int>((g.row(u) & g.row(v)).count());
            if (!best.pair || c > best.count) best = {c, std::make_pair(u, v)};
        }
    return best;
}

long long count_triangles(const SimpleGraph& g) {
    long long total = 0;
    for (auto [u, v] : g.edges()) total += static_cast<long long>((g.row(u) & g.row(v)).count());
    return total / 3;
}

std::optional<std::array<Vertex, 3>> find_triangle(const SimpleGraph& g) {
    for (auto [u, v] : g.edges()) {
        const VertexSet common = g.row(u) & g.row(v);
        const auto w = common.find_next(static_cast<std::size_t>(v));
        if (w != VertexSet::npos) return std::array<Vertex, 3>{u, v, static_cast<Vertex>(w)};
    }
    return std::nullopt;
}

bool has_path_on(const SimpleGraph& g, int vertices) { return longest_path_capped(g, vertices) >= vertices; }

int longest_path_capped(const SimpleGraph& g, int cap) {
    if (cap <= 0) return 0;
    int best = 0;
    VertexSet used = g.empty_set();
    for (Vertex v = 0; v < g.n(); ++v) {
        used.set(static_cast<std::size_t>(v));
        const bool done = path_from(g, v, 1, cap, used, best);
        used.reset(static_cast<std::size_t>(v));
        if (done) break;
    }
    return std::min(best, cap);
}

}  // namespace turanlab
