#include "turanlab/random_graphs.hpp"

#include <algorithm>

namespace turanlab {

SimpleGraph random_gnp(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

SimpleGraph random_free_graph(int n, const FamilySpec& family, Rng& rng, double keep_probability) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(keep_probability);

    SimpleGraph g(n);
    for (auto [u, v] : pairs) {
        if (!coin(rng)) continue;
        g.add_edge(u, v);
        if (is_family_free(g, family)) g.remove_edge(u, v);
    }
    return g;
}

}  // namespace turanlab
