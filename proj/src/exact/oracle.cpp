#include "turanlab/exact.hpp"

#include "turanlab/canonical.hpp"

#include <chrono>
#include <unordered_set>

namespace turanlab {

ExtremalRecord brute_force_ex(int n, const FamilySpec& family) {
    if (n < 0 || n > kOracleMaxVertices)
        throw std::invalid_argument("oracle supports 0 <= n <= " + std::to_string(kOracleMaxVertices) + ", got " +
                                    std::to_string(n));
    const auto start = std::chrono::steady_clock::now();

    // Deleting a vertex keeps a graph free of every pattern in either mode, so each
    // free graph on k vertices extends some free representative on k-1 vertices.
    std::vector<CanonicalLabeling> level{canonical_labeling(SimpleGraph(0))};
    std::uint64_t nodes = 1;
    for (int k = 1; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<CanonicalLabeling> next;
        for (const auto& rep : level) {
            SimpleGraph base(k);
            for (auto [a, b] : rep.graph.edges()) base.add_edge(a, b);
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                SimpleGraph g = base;
                for (Vertex a = 0; a < k - 1; ++a)
                    if (mask >> a & 1) g.add_edge(a, k - 1);
                ++nodes;
                if (is_family_free(g, family).has_value()) continue;
                auto canon = canonical_labeling(g);
                if (seen.insert(canon.graph6).second) next.push_back(std::move(canon));
            }
        }
        level = std::move(next);
    }

    const CanonicalLabeling* best = &level.front();
    for (const auto& rep : level) {
        const auto m = rep.graph.m(), best_m = best->graph.m();
        if (m > best_m || (m == best_m && rep.graph6 < best->graph6)) best = &rep;
    }
    return ExtremalRecord{
        .n = n,
        .family = family,
        .max_edges = best->graph.m(),
        .witness = best->graph,
        .method = SearchMethod::Oracle,
        .exact = true,
        .nodes = nodes,
        .seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(),
    };
}

}  // namespace turanlab
