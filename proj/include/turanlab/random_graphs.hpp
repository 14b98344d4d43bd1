#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

#include <random>

namespace turanlab {

using Rng = std::mt19937_64;

/// Erdős–Rényi G(n, p).
SimpleGraph random_gnp(int n, double p, Rng& rng);

/// Random greedy F-free process: visit all pairs in random order and keep an edge
/// whenever the graph stays free of `family`. The result is F-free by construction
/// (induced patterns included, since every intermediate state is re-checked).
SimpleGraph random_free_graph(int n, const FamilySpec& family, Rng& rng, double keep_probability = 1.0);

}  // namespace turanlab
