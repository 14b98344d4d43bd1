#pragma once

#include "turanlab/graph.hpp"

#include <string>
#include <vector>

namespace turanlab {

/// Largest vertex count accepted by the canonical labelling search.
inline constexpr int kMaxCanonicalVertices = 64;

struct CanonicalLabeling {
    std::string graph6;            // least graph6 string over all relabellings
    std::vector<Vertex> order;     // order[i] = original vertex placed at position i
    SimpleGraph graph;             // the relabelled graph, decodes from graph6
};

/// Exhaustive search for the lexicographically least adjacency bit string (graph6
/// column order), branching only on candidates that tie for the least next column and
/// skipping twins. Exponential in the worst case; intended for small witnesses.
CanonicalLabeling canonical_labeling(const SimpleGraph& g);
std::string canonical_graph6(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace turanlab
