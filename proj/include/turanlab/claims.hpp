#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"
#include "turanlab/rational.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace turanlab {

enum class Verdict { Holds, HypothesesNotMet, Violation };
std::string to_string(Verdict v);

struct Hypothesis {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// lhs <= rhs, exactly.
struct Inequality {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs <= rhs; }
};

struct ClaimReport {
    explicit ClaimReport(std::string id = {}) : claim(std::move(id)) {}

    std::string claim;
    std::vector<Hypothesis> hypotheses;
    std::vector<Inequality> inequalities;
    Verdict verdict = Verdict::Holds;
    nlohmann::json details = nlohmann::json::object();

    bool hypotheses_met() const;
    /// Sets the verdict: any failed hypothesis gives HypothesesNotMet, then any failed
    /// inequality gives Violation.
    void decide();
    nlohmann::json to_json() const;
};

/// Triangle found where the claim requires a triangle-free graph.
class TriangleError : public std::invalid_argument {
public:
    explicit TriangleError(std::array<Vertex, 3> triangle);
    const std::array<Vertex, 3>& triangle() const { return triangle_; }

private:
    std::array<Vertex, 3> triangle_;
};

/// Ordered sequences v0 v1 v2 v3 with consecutive vertices adjacent.
BigInt count_3_walks(const SimpleGraph& g);

/// walks >= n d^3 with d = 2m/n. Throws std::invalid_argument for n = 0.
ClaimReport blakley_roy_check(const SimpleGraph& g);

struct WalkStats {
    Vertex root = 0;
    BigInt total;
    BigInt good;              // v_i in N_i(root) for i = 1, 2, 3
    BigInt v2_is_root;
    BigInt last_in_n1;        // v2 in N_2, v3 in N_1
    BigInt last_in_n2;        // v2 in N_2, v3 in N_2
    BigInt other;             // anything else; zero on triangle-free graphs
    BigInt not_good() const { return total - good; }
};

/// Split of the 3-walks starting at v; no preconditions.
WalkStats walk_stats_from_vertex(const SimpleGraph& g, Vertex v);

struct WalkClassification {
    WalkStats stats;
    ClaimReport report;
};

/// Requires a triangle-free graph (throws TriangleError). Bounds the walks that are not
/// good by 32(4k-7)(t-1)d^2 when g is K_{2,t}-free, C_{2k+1}-free and d_max <= 4d.
WalkClassification classify_3_walks_from_vertex(const SimpleGraph& g, Vertex v, int t, int k);

/// Partition of N_2(v) by least N_1 parent, two-coloured by local search; checks the
/// bichromatic graph has half the N_2 edges and no path on 2k-2 vertices, and that
/// |E(G[N_2])| <= (2k-4)|N_2|.
ClaimReport n2_edge_bound_check(const SimpleGraph& g, Vertex v, int k);

struct Decomposition {
    SimpleGraph original;
    SimpleGraph g_delta;    // edges in at least one triangle
    SimpleGraph remainder;  // the rest
    long long triangle_count = 0;
};

Decomposition triangle_edge_decomposition(const SimpleGraph& g);

/// Partition, triangle-free remainder and |G_delta| <= 3 * triangles.
ClaimReport decomposition_invariants_check(const Decomposition& d);

/// Remainder is K_{s,t}-free whenever g has no induced K_{s,t}.
ClaimReport kst_removed_triangles_check(const Decomposition& d, int s, int t);

struct Good3PathStats {
    Vertex x = 0;
    Vertex y = 0;
    long long total = 0;
    std::map<Vertex, long long> per_endpoint;
    ClaimReport report;
};

/// 3-paths xyzw and yxzw whose second and fourth vertices are non-adjacent.
/// Throws std::invalid_argument unless xy is an edge.
Good3PathStats good_3path_stats(const SimpleGraph& g, Vertex x, Vertex y, int t);

struct Good3PathEdge {
    Vertex x = 0;
    Vertex y = 0;
    long long count = 0;
    ClaimReport report;
};

/// Edge with the most good 3-paths (first in edge order on ties) against 2d^2 - 84d.
Good3PathEdge max_good_3path_edge(const SimpleGraph& g, int t, int k = 2);

/// If g has no path on p vertices then m <= (p-2)/2 * n.
ClaimReport erdos_gallai_path_check(const SimpleGraph& g, int p);

/// Non-adjacent pairs have at most max(3,t)-1 common neighbours.
ClaimReport limited_cherries_check(const SimpleGraph& g, int t);

/// Triangle count and its ratio to n^{1+1/k}; informational.
ClaimReport gyori_li_triangle_report(const SimpleGraph& g, int k);

/// Names accepted by run_claims, in run order.
const std::vector<std::string>& claim_names();

/// Runs the named claims with parameters (t, k). Per-vertex claims run from every vertex,
/// per-edge claims on every edge, Erdős–Gallai with p = 4 on every neighbourhood.
/// A triangle makes the walk classification report HypothesesNotMet instead of throwing.
std::vector<ClaimReport> run_claims(const SimpleGraph& g, int t, int k, const std::vector<std::string>& names);

}  // namespace turanlab
