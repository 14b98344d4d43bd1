#include "turanlab/exact.hpp"

#include "turanlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

namespace turanlab {
namespace {

using Mask = std::uint32_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int x) { return Mask{1} << x; }
constexpr Mask below(int x) { return x >= 32 ? ~Mask{0} : bit(x) - 1; }

struct State {
    std::array<Mask, kSearchMaxVertices> rows{};
    std::array<int, kSearchMaxVertices> degree{};
    int edges = 0;

    void set(int u, int v) {
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        ++degree[u];
        ++degree[v];
        ++edges;
    }
    void unset(int u, int v) {
        rows[u] &= ~bit(v);
        rows[v] &= ~bit(u);
        --degree[u];
        --degree[v];
        --edges;
    }
    bool has(int u, int v) const { return rows[u] >> v & 1; }
};

template <typename F>
bool any_bit(Mask m, F&& f) {
    while (m) {
        const int x = std::countr_zero(m);
        m &= m - 1;
        if (f(x)) return true;
    }
    return false;
}

bool has_independent(const State& s, Mask pool, int k) {
    if (k <= 0) return true;
    if (std::popcount(pool) < k) return false;
    const int x = std::countr_zero(pool);
    const Mask rest = pool & (pool - 1);
    return has_independent(s, rest & ~s.rows[x], k - 1) || has_independent(s, rest, k);
}

Mask common_neighbours(const State& s, Mask within, Mask of) {
    any_bit(of, [&](int x) {
        within &= s.rows[x];
        return false;
    });
    return within;
}

bool is_independent(const State& s, Mask set) {
    return !any_bit(set, [&](int x) { return (s.rows[x] & set) != 0; });
}

/// Copy of K_{a,b} inside `within` whose a-side contains fixed_a and b-side contains fixed_b.
class BicliqueThrough {
public:
    BicliqueThrough(const State& s, Mask within, Mask fixed_a, Mask fixed_b, int a, int b, bool induced)
        : s_(s), fixed_b_(fixed_b), b_(b), induced_(induced) {
        ok_ = (fixed_a & within) == fixed_a && (fixed_b & within) == fixed_b && std::popcount(fixed_a) <= a &&
              std::popcount(fixed_b) <= b;
        if (induced && !(is_independent(s, fixed_a) && is_independent(s, fixed_b))) ok_ = false;
        pool_ = common_neighbours(s, within, fixed_b) & ~fixed_a & ~fixed_b;
        if (induced) any_bit(fixed_a, [&](int x) {
                pool_ &= ~s.rows[x];
                return false;
            });
        if ((common_neighbours(s, within, fixed_b) & fixed_a) != fixed_a) ok_ = false;
        need_ = a - std::popcount(fixed_a);
        common_ = common_neighbours(s, within, fixed_a);
    }

    bool run() const { return ok_ && choose(pool_, common_, need_); }

private:
    bool choose(Mask pool, Mask common, int need) const {
        if (std::popcount(common) < b_) return false;
        if (need == 0) {
            Mask b_pool = common & ~fixed_b_;
            const int want = b_ - std::popcount(fixed_b_);
            if (!induced_) return std::popcount(b_pool) >= want;
            any_bit(fixed_b_, [&](int y) {
                b_pool &= ~s_.rows[y];
                return false;
            });
            return has_independent(s_, b_pool, want);
        }
        if (std::popcount(pool) < need) return false;
        return any_bit(pool, [&](int x) {
            Mask rest = pool & ~below(x + 1);
            if (induced_) rest &= ~s_.rows[x];
            return choose(rest, common & s_.rows[x], need - 1);
        });
    }

    const State& s_;
    Mask fixed_b_;
    int b_;
    bool induced_;
    bool ok_ = true;
    Mask pool_ = 0;
    Mask common_ = 0;
    int need_ = 0;
};

/// Path cur -> ... -> target with exactly `edges_left` edges through `avail`.
bool path_to(const State& s, int cur, int target, int edges_left, Mask avail) {
    if (edges_left == 1) return s.has(cur, target);
    return any_bit(s.rows[cur] & avail,
                   [&](int x) { return path_to(s, x, target, edges_left - 1, avail & ~bit(x)); });
}

/// Induced cycle of the given length in G[within] through `root` and `also`.
class InducedCycleThrough {
public:
    InducedCycleThrough(const State& s, Mask within, int root, int also, int length)
        : s_(s), within_(within), root_(root), also_(also), length_(length) {}

    bool run() const { return extend(1, root_, bit(root_), 0); }

private:
    // `blocked` holds the neighbours of path vertices 1..i-2, which the next vertex must avoid.
    bool extend(int i, int last, Mask used, Mask blocked) const {
        Mask cand = s_.rows[last] & within_ & ~used & ~blocked;
        if (i == length_ - 1) {
            cand &= s_.rows[root_];
            if (!(used & bit(also_))) cand &= bit(also_);
            return cand != 0;
        }
        if (i >= 2) cand &= ~s_.rows[root_];
        const Mask next_blocked = i >= 2 ? blocked | s_.rows[last] : blocked;
        return any_bit(cand, [&](int x) { return extend(i + 1, x, used | bit(x), next_blocked); });
    }

    const State& s_;
    Mask within_;
    int root_;
    int also_;
    int length_;
};

class LocalChecker {
public:
    explicit LocalChecker(const FamilySpec& family) : patterns_(family.patterns()) {}

    /// Checks the copies whose status became final with the decision on pair (u, v), u < v.
    bool violated(const State& s, int u, int v) const {
        const bool edge = s.has(u, v);
        const Mask everything = below(v + 1);
        const Mask settled = below(u + 1) | bit(v);
        for (const auto& p : patterns_) {
            if (p.kind() == ForbiddenPattern::Kind::Cycle) {
                if (p.induced()) {
                    if (InducedCycleThrough(s, settled, v, u, p.length()).run()) return true;
                } else if (edge && path_to(s, u, v, p.length() - 1, everything & ~bit(u) & ~bit(v))) {
                    return true;
                }
                continue;
            }
            const int a = p.s(), b = p.t();
            const Mask within = p.induced() ? settled : everything;
            if (edge) {
                if (BicliqueThrough(s, within, bit(u), bit(v), a, b, p.induced()).run()) return true;
                if (a != b && BicliqueThrough(s, within, bit(u), bit(v), b, a, p.induced()).run()) return true;
            } else if (p.induced()) {
                const Mask both = bit(u) | bit(v);
                if (a >= 2 && BicliqueThrough(s, within, both, 0, a, b, true).run()) return true;
                if (a != b && BicliqueThrough(s, within, both, 0, b, a, true).run()) return true;
            }
        }
        return false;
    }

private:
    std::vector<ForbiddenPattern> patterns_;
};

long long codegree_cap(int n, long long t) {
    if (n < 2) return 0;
    // sum_w C(d_w, 2) <= (t-1) C(n, 2), and the left side is least for balanced degrees.
    const long long limit = (t - 1) * n * (n - 1) / 2;
    long long best = 0;
    for (long long m = 0; m <= 1LL * n * (n - 1) / 2; ++m) {
        const long long q = 2 * m / n, r = 2 * m % n;
        const long long sum = (n - r) * (q * (q - 1) / 2) + r * ((q + 1) * q / 2);
        if (sum > limit) break;
        best = m;
    }
    return best;
}

long long static_cap(int n, const FamilySpec& family, std::optional<long long> previous_exact) {
    long long cap = 1LL * n * (n - 1) / 2;
    for (const auto& p : family.patterns()) {
        if (p.kind() != ForbiddenPattern::Kind::CompleteBipartite || p.induced()) continue;
        if (p.s() == 1) cap = std::min(cap, 1LL * n * (p.t() - 1) / 2);
        if (p.s() == 2) cap = std::min(cap, codegree_cap(n, p.t()));
    }
    if (previous_exact && n >= 3) cap = std::min(cap, n * *previous_exact / (n - 2));
    return cap;
}

struct Outcome {
    long long best = -1;
    std::string graph6;
    SimpleGraph graph;
};

class Search {
public:
    Search(int n, const FamilySpec& family, const SearchBudget& budget, const SearchOptions& options,
           long long threshold)
        : n_(n),
          checker_(family),
          previous_(options.previous_exact),
          cap_(static_cap(n, family, options.previous_exact)),
          node_limit_(budget.node_limit),
          best_(threshold) {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) pairs_.push_back({u, v});
        if (budget.seconds_limit)
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(*budget.seconds_limit));
    }

    Outcome run(int workers) {
        const int pair_count = static_cast<int>(pairs_.size());
        if (workers <= 1 || pair_count < 8) {
            State root;
            Outcome out;
            dfs(root, 0, out);
            return out;
        }
        // Prefixes of the first few pairs are handed out to workers.
        const int split = std::min(pair_count - 1, 10);
        std::vector<State> tasks;
        collect(State{}, 0, split, tasks);
        std::atomic<std::size_t> next{0};
        std::vector<Outcome> outs(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) dfs(tasks[i], split, outs[w]);
            });
        for (auto& th : pool) th.join();
        Outcome merged;
        for (auto& o : outs) merge(merged, o);
        return merged;
    }

    bool stopped() const { return stop_.load(); }
    std::uint64_t nodes() const { return nodes_.load(); }

private:
    struct Pair {
        int u;
        int v;
    };

    static void merge(Outcome& into, const Outcome& from) {
        if (from.best < 0) return;
        if (from.best > into.best || (from.best == into.best && from.graph6 < into.graph6)) into = from;
    }

    bool tick() {
        const auto count = nodes_.fetch_add(1) + 1;
        if (node_limit_ && count > *node_limit_) stop_ = true;
        if (deadline_ && (count & 255) == 0 && Clock::now() > *deadline_) stop_ = true;
        return !stop_.load(std::memory_order_relaxed);
    }

    long long upper_bound(const State& s, int idx) const {
        const long long remaining = static_cast<long long>(pairs_.size()) - idx;
        long long ub = std::min<long long>(s.edges + remaining, cap_);
        if (previous_ && idx < static_cast<int>(pairs_.size())) {
            // Deleting w leaves a free graph on n-1 vertices.
            const auto [un, vn] = pairs_[static_cast<std::size_t>(idx)];
            int least = n_;
            for (int w = 0; w < n_; ++w) {
                int open;
                if (w < vn) open = (n_ - 1 - vn) + (w >= un ? 1 : 0);
                else if (w == vn) open = (vn - un) + (n_ - 1 - vn);
                else open = n_ - 1;
                least = std::min(least, s.degree[w] + open);
            }
            ub = std::min(ub, *previous_ + least);
        }
        return ub;
    }

    // Columns are lexicographically nonincreasing on the rows above both of them.
    bool breaks_symmetry(const State& s, int u, int v) const {
        const Mask prefix = s.rows[v] & below(u);
        for (int w = u + 1; w < v; ++w)
            if (!s.has(u, w) && (s.rows[w] & below(u)) == prefix) return true;
        return false;
    }

    template <typename Leaf>
    void branch(State& s, int idx, Leaf&& leaf) {
        const auto [u, v] = pairs_[static_cast<std::size_t>(idx)];
        if (!breaks_symmetry(s, u, v)) {
            s.set(u, v);
            if (!checker_.violated(s, u, v) && upper_bound(s, idx + 1) >= best_.load(std::memory_order_relaxed))
                leaf(s, idx + 1);
            s.unset(u, v);
        }
        if (!checker_.violated(s, u, v) && upper_bound(s, idx + 1) >= best_.load(std::memory_order_relaxed))
            leaf(s, idx + 1);
    }

    void collect(State s, int idx, int depth, std::vector<State>& out) {
        if (!tick()) return;
        if (idx == depth) {
            out.push_back(s);
            return;
        }
        branch(s, idx, [&](State& next, int i) { collect(next, i, depth, out); });
    }

    void dfs(State& s, int idx, Outcome& out) {
        if (!tick()) return;
        if (idx == static_cast<int>(pairs_.size())) {
            record(s, out);
            return;
        }
        branch(s, idx, [&](State& next, int i) { dfs(next, i, out); });
    }

    void record(const State& s, Outcome& out) {
        const long long m = s.edges;
        if (m < best_.load() || m < out.best) return;
        SimpleGraph g(n_);
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (s.has(u, v)) g.add_edge(u, v);
        auto canon = canonical_labeling(g);
        if (m > out.best || canon.graph6 < out.graph6) out = {m, std::move(canon.graph6), std::move(canon.graph)};
        long long seen = best_.load();
        while (m > seen && !best_.compare_exchange_weak(seen, m)) {
        }
    }

    int n_;
    LocalChecker checker_;
    std::optional<long long> previous_;
    long long cap_;
    std::optional<std::uint64_t> node_limit_;
    std::optional<Clock::time_point> deadline_;
    std::vector<Pair> pairs_;
    std::atomic<long long> best_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
};

}  // namespace

ExtremalRecord branch_and_bound_ex(int n, const FamilySpec& family, const SearchBudget& budget,
                                   const SearchOptions& options) {
    if (n < 0 || n > kSearchMaxVertices)
        throw std::invalid_argument("branch and bound supports 0 <= n <= " + std::to_string(kSearchMaxVertices) +
                                    ", got " + std::to_string(n));
    budget.validate();
    if (options.workers < 1) throw std::invalid_argument("workers must be positive");
    if (options.seed) {
        if (options.seed->n() != n) throw std::invalid_argument("seed graph has the wrong vertex count");
        if (auto w = is_family_free(*options.seed, family))
            throw std::invalid_argument("seed graph contains " + w->to_string());
    }
    const auto start = Clock::now();
    const long long seeded = options.seed ? options.seed->m() : 0;

    long long threshold = std::max(seeded, budget.initial_lower_bound.value_or(0));
    std::uint64_t nodes = 0;
    for (;;) {
        Search search(n, family, budget, options, threshold);
        Outcome out = search.run(options.workers);
        nodes += search.nodes();
        const bool complete = !search.stopped();
        if (complete && out.best < 0 && threshold > seeded) {
            // The caller's lower bound was not attainable; retry from the seed.
            threshold = seeded;
            continue;
        }
        if (out.best < seeded) {
            SimpleGraph fallback = options.seed ? *options.seed : SimpleGraph(n);
            auto canon = canonical_labeling(fallback);
            out = {fallback.m(), std::move(canon.graph6), std::move(canon.graph)};
        }
        if (auto w = is_family_free(out.graph, family))
            throw std::logic_error("search produced a witness containing " + w->to_string());
        return ExtremalRecord{
            .n = n,
            .family = family,
            .max_edges = out.best,
            .witness = std::move(out.graph),
            .method = SearchMethod::BranchAndBound,
            .exact = complete,
            .nodes = nodes,
            .seconds = std::chrono::duration<double>(Clock::now() - start).count(),
        };
    }
}

}  // namespace turanlab
