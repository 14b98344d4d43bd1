#include <doctest.h>

#include "turanlab/claims.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/random_graphs.hpp"

using namespace turanlab;

namespace {

long long brute_walks(const SimpleGraph& g) {
    long long count = 0;
    const int n = g.n();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                for (Vertex d = 0; d < n; ++d) count += g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d);
    return count;
}

struct BruteWalks {
    long long total = 0, good = 0, v2_root = 0, last_n1 = 0, last_n2 = 0;
};

BruteWalks brute_walk_classes(const SimpleGraph& g, Vertex v) {
    const auto layers = neighborhood_layers(g, v);
    const auto layer = [&](Vertex w) { return layers.layer_of[static_cast<std::size_t>(w)]; };
    BruteWalks out;
    for (Vertex b = 0; b < g.n(); ++b)
        for (Vertex c = 0; c < g.n(); ++c)
            for (Vertex d = 0; d < g.n(); ++d) {
                if (!(g.has_edge(v, b) && g.has_edge(b, c) && g.has_edge(c, d))) continue;
                ++out.total;
                if (layer(b) == 1 && layer(c) == 2 && layer(d) == 3) ++out.good;
                if (c == v) ++out.v2_root;
                if (layer(c) == 2 && layer(d) == 1) ++out.last_n1;
                if (layer(c) == 2 && layer(d) == 2) ++out.last_n2;
            }
    return out;
}

// All sequences (a, b, c, d) of distinct vertices forming a path with {a, b} = {x, y} and b, d non-adjacent.
std::map<Vertex, long long> brute_good_paths(const SimpleGraph& g, Vertex x, Vertex y) {
    std::map<Vertex, long long> out;
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b = 0; b < g.n(); ++b)
            for (Vertex c = 0; c < g.n(); ++c)
                for (Vertex d = 0; d < g.n(); ++d) {
                    const bool distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    const bool starts = (a == x && b == y) || (a == y && b == x);
                    if (distinct && starts && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
                        !g.has_edge(b, d))
                        ++out[d];
                }
    return out;
}

SimpleGraph heawood() { return projective_plane_incidence(2).graph(); }

SimpleGraph disjoint_triangles(int count) {
    SimpleGraph g(3 * count);
    for (int i = 0; i < count; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i + 1, 3 * i + 2);
        g.add_edge(3 * i, 3 * i + 2);
    }
    return g;
}

int count_verdict(const std::vector<ClaimReport>& reports, Verdict v) {
    int c = 0;
    for (const auto& r : reports) c += r.verdict == v;
    return c;
}

}  // namespace

TEST_CASE("counting 3-walks") {
    CHECK(count_3_walks(path_graph(2)) == 2);
    CHECK(count_3_walks(complete_graph(3)) == 24);
    CHECK(count_3_walks(complete_bipartite_graph(1, 3)) == 18);
    CHECK(count_3_walks(new_graph(4)) == 0);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_gnp(1 + trial % 10, 0.5, rng);
        CHECK(count_3_walks(g) == brute_walks(g));
    }
}

TEST_CASE("Blakley-Roy examples") {
    const auto edge = blakley_roy_check(path_graph(2));
    CHECK(edge.verdict == Verdict::Holds);
    CHECK(edge.inequalities[0].lhs == edge.inequalities[0].rhs);
    const auto k3 = blakley_roy_check(complete_graph(3));
    CHECK(k3.inequalities[0].lhs == 24);
    CHECK(k3.inequalities[0].rhs == 24);
    const auto star = blakley_roy_check(complete_bipartite_graph(1, 3));
    CHECK(star.inequalities[0].lhs == make_rational(27, 2));
    CHECK(star.inequalities[0].rhs == 18);
    CHECK(blakley_roy_check(new_graph(1)).verdict == Verdict::Holds);
    CHECK_THROWS_AS(blakley_roy_check(new_graph(0)), std::invalid_argument);
}

TEST_CASE("Blakley-Roy on 500 random graphs") {
    Rng rng(2024);
    std::uniform_int_distribution<int> size(2, 40);
    int violations = 0, tight = 0;
    for (int i = 0; i < 500; ++i) {
        const double p = 0.1 * (1 + i % 9);
        const auto g = random_gnp(size(rng), p, rng);
        const auto r = blakley_roy_check(g);
        violations += r.verdict == Verdict::Violation;
        tight += r.inequalities[0].lhs == r.inequalities[0].rhs;
        // Exactness: the left side is 8 m^3 / n^2.
        CHECK(r.inequalities[0].lhs == make_rational(8 * g.m() * g.m() * g.m(), 1LL * g.n() * g.n()));
    }
    CHECK(violations == 0);
    CHECK(tight >= 0);
}

TEST_CASE("walk classification") {
    SUBCASE("C6 from any vertex") {
        const auto c6 = cycle_graph(6);
        for (Vertex v = 0; v < 6; ++v) {
            const auto out = classify_3_walks_from_vertex(c6, v, 2, 3);
            const auto& s = out.stats;
            CHECK(s.total == 8);
            CHECK(s.good == 2);
            CHECK(s.v2_is_root == 4);
            CHECK(s.last_in_n1 == 2);
            CHECK(s.other == 0);
            CHECK(s.total == s.good + s.v2_is_root + s.last_in_n1 + s.last_in_n2);
            CHECK(out.report.verdict == Verdict::Holds);
        }
    }
    SUBCASE("star from its centre") {
        const auto out = classify_3_walks_from_vertex(complete_bipartite_graph(1, 3), 0, 2, 2);
        CHECK(out.stats.last_in_n1 == 0);
        CHECK(out.stats.last_in_n2 == 0);
        CHECK(out.stats.v2_is_root == 9);
    }
    SUBCASE("Heawood graph") {
        const auto g = heawood();
        for (Vertex v = 0; v < g.n(); ++v) {
            const auto out = classify_3_walks_from_vertex(g, v, 2, 3);
            CHECK(out.report.hypotheses_met());
            CHECK(out.report.verdict == Verdict::Holds);
            CHECK(out.report.details["c_kt"] == "160/3");
        }
    }
    SUBCASE("triangles are rejected by name") {
        try {
            classify_3_walks_from_vertex(complete_graph(4), 0, 2, 2);
            FAIL("expected a TriangleError");
        } catch (const TriangleError& e) {
            CHECK(e.triangle() == std::array<Vertex, 3>{0, 1, 2});
            CHECK(std::string(e.what()).find("0 1 2") != std::string::npos);
        }
        CHECK(walk_stats_from_vertex(complete_graph(4), 0).other > 0);
    }
    SUBCASE("classes match brute force on triangle-free graphs") {
        Rng rng(77);
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = random_free_graph(5 + trial % 8, parse_family("C3"), rng, 0.7);
            for (Vertex v = 0; v < g.n(); ++v) {
                const auto s = walk_stats_from_vertex(g, v);
                const auto b = brute_walk_classes(g, v);
                CHECK(s.total == b.total);
                CHECK(s.good == b.good);
                CHECK(s.v2_is_root == b.v2_root);
                CHECK(s.last_in_n1 == b.last_n1);
                CHECK(s.last_in_n2 == b.last_n2);
                CHECK(s.other == 0);
                CHECK(classify_3_walks_from_vertex(g, v, 2, 2).report.verdict != Verdict::Violation);
            }
        }
    }
}

TEST_CASE("N2 edge bound") {
    SUBCASE("C5-free triangle-free graphs have no N2 edges") {
        Rng rng(9);
        const auto family = parse_family("C3;C5");
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = random_free_graph(6 + trial % 12, family, rng);
            for (Vertex v = 0; v < g.n(); ++v) {
                const auto r = n2_edge_bound_check(g, v, 2);
                CHECK(r.verdict == Verdict::Holds);
                CHECK(r.details["n2_edges"] == 0);
            }
        }
    }
    SUBCASE("Heawood graph with k = 3") {
        const auto g = heawood();
        for (Vertex v = 0; v < g.n(); ++v) {
            const auto r = n2_edge_bound_check(g, v, 3);
            CHECK(r.verdict == Verdict::Holds);
            CHECK(r.details["n2_edges"] == 0);
            CHECK(r.details["n2"] == 6);
        }
    }
    SUBCASE("star") {
        const auto r = n2_edge_bound_check(complete_bipartite_graph(1, 3), 0, 2);
        CHECK(r.verdict == Verdict::Holds);
        CHECK(r.details["n2"] == 0);
    }
    SUBCASE("N2 edges appear once C5 is allowed") {
        Rng rng(13);
        const auto family = parse_family("C3;C7");
        int with_edges = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const auto g = random_free_graph(8 + trial % 10, family, rng);
            for (Vertex v = 0; v < g.n(); ++v) {
                const auto r = n2_edge_bound_check(g, v, 3);
                CHECK(r.verdict != Verdict::Violation);
                with_edges += r.details["n2_edges"].get<long long>() > 0;
                // The coloring keeps at least half the edges whatever the hypotheses.
                CHECK(r.inequalities[0].holds());
            }
        }
        CHECK(with_edges > 0);
    }
    SUBCASE("failed hypotheses are reported") {
        const auto r = n2_edge_bound_check(cycle_graph(5), 0, 2);
        CHECK(r.verdict == Verdict::HypothesesNotMet);
        CHECK(r.hypotheses[0].passed);
        CHECK_FALSE(r.hypotheses[1].passed);
    }
}

TEST_CASE("triangle edge decomposition") {
    const auto k3 = triangle_edge_decomposition(complete_graph(3));
    CHECK(k3.g_delta.m() == 3);
    CHECK(k3.remainder.m() == 0);
    const auto c5 = triangle_edge_decomposition(cycle_graph(5));
    CHECK(c5.g_delta.m() == 0);
    CHECK(c5.remainder == cycle_graph(5));
    const auto bg = triangle_edge_decomposition(bollobas_gyori_certificate(2).graph);
    CHECK(bg.remainder.m() == 0);
    CHECK(decomposition_invariants_check(bg).verdict == Verdict::Holds);

    Rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = random_gnp(4 + trial % 12, 0.15 + 0.05 * (trial % 10), rng);
        const auto d = triangle_edge_decomposition(g);
        CHECK(decomposition_invariants_check(d).verdict == Verdict::Holds);
        for (auto [s, t] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
            const auto r = kst_removed_triangles_check(d, s, t);
            CHECK(r.verdict != Verdict::Violation);
            if (r.hypotheses_met()) CHECK_FALSE(contains_kst(d.remainder, s, t).has_value());
        }
    }
    // K_{2,3} itself has an induced K_{2,3}, so the claim does not apply.
    const auto k23 = triangle_edge_decomposition(complete_bipartite_graph(2, 3));
    CHECK(kst_removed_triangles_check(k23, 2, 3).verdict == Verdict::HypothesesNotMet);
}

TEST_CASE("good 3-paths") {
    SUBCASE("path a-b-c-d from edge bc") {
        const auto r = good_3path_stats(path_graph(4), 1, 2, 2);
        CHECK(r.total == 0);
        const auto r2 = good_3path_stats(path_graph(4), 0, 1, 2);
        CHECK(r2.total == 1);  // a b c d
        CHECK(r2.per_endpoint.at(3) == 1);
    }
    SUBCASE("C6") {
        const auto c6 = cycle_graph(6);
        for (auto [x, y] : c6.edges()) {
            const auto r = good_3path_stats(c6, x, y, 2);
            CHECK(r.total == 2);
            for (auto [w, c] : r.per_endpoint) CHECK(c <= 2);
            CHECK(r.report.verdict == Verdict::Holds);
        }
    }
    SUBCASE("K4 has none") {
        CHECK(good_3path_stats(complete_graph(4), 0, 1, 2).total == 0);
    }
    SUBCASE("non-edges are rejected") {
        CHECK_THROWS_AS(good_3path_stats(path_graph(4), 0, 2, 2), std::invalid_argument);
    }
    SUBCASE("agreement with enumeration of vertex sequences") {
        Rng rng(57);
        for (int trial = 0; trial < 60; ++trial) {
            const auto g = random_gnp(4 + trial % 7, 0.5, rng);
            for (auto [x, y] : g.edges()) {
                const auto r = good_3path_stats(g, x, y, 2);
                const auto brute = brute_good_paths(g, x, y);
                CHECK(r.per_endpoint == brute);
                long long total = 0;
                for (auto [w, c] : brute) total += c;
                CHECK(r.total == total);
            }
        }
    }
}

TEST_CASE("most good 3-paths on one edge") {
    const auto bg = bollobas_gyori_certificate(3).graph;
    const auto r = max_good_3path_edge(bg, 2);
    CHECK(r.report.hypotheses_met());
    CHECK(r.report.verdict == Verdict::Holds);
    CHECK(r.count > 0);
    const auto edge = max_good_3path_edge(path_graph(2), 2);
    CHECK(edge.count == 0);
    CHECK(edge.report.verdict == Verdict::Holds);
    const auto c6 = max_good_3path_edge(cycle_graph(6), 2);
    CHECK(c6.count == 2);
    CHECK(c6.report.inequalities[0].lhs < 0);
    CHECK_THROWS_AS(max_good_3path_edge(new_graph(3), 2), std::invalid_argument);
}

TEST_CASE("Erdos-Gallai path bound") {
    const auto k3 = erdos_gallai_path_check(complete_graph(3), 4);
    CHECK(k3.verdict == Verdict::Holds);
    CHECK(k3.inequalities[0].lhs == k3.inequalities[0].rhs);
    const auto tri = erdos_gallai_path_check(disjoint_triangles(4), 4);
    CHECK(tri.verdict == Verdict::Holds);
    CHECK(tri.inequalities[0].lhs == 12);
    CHECK(tri.inequalities[0].rhs == 12);
    const auto c5 = erdos_gallai_path_check(cycle_graph(5), 5);
    CHECK(c5.verdict == Verdict::HypothesesNotMet);
    CHECK(c5.details["has_path"] == true);
    CHECK_THROWS_AS(erdos_gallai_path_check(cycle_graph(5), 1), std::invalid_argument);

    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_gnp(3 + trial % 8, 0.3, rng);
        for (int p = 2; p <= 6; ++p) CHECK(erdos_gallai_path_check(g, p).verdict != Verdict::Violation);
    }
}

TEST_CASE("limited cherries") {
    const auto bg = limited_cherries_check(bollobas_gyori_certificate(2).graph, 2);
    CHECK(bg.verdict == Verdict::Holds);
    CHECK(bg.details["max_codegree"].get<int>() <= 2);
    CHECK(limited_cherries_check(complete_bipartite_graph(2, 3), 3).verdict == Verdict::HypothesesNotMet);
    // C5 fails its own C5-freeness hypothesis, though the count is within the bound.
    const auto c5 = limited_cherries_check(cycle_graph(5), 2);
    CHECK(c5.verdict == Verdict::HypothesesNotMet);
    CHECK(c5.details["max_codegree"] == 1);
    CHECK(c5.inequalities[0].holds());
}

TEST_CASE("triangle report") {
    const auto bg = gyori_li_triangle_report(bollobas_gyori_certificate(2).graph, 2);
    CHECK(bg.verdict == Verdict::Holds);
    CHECK(bg.details["triangles"] == 21);
    CHECK(bg.details["ratio_to_n_pow"].get<double>() > 0);
    CHECK(gyori_li_triangle_report(heawood(), 3).details["triangles"] == 0);
    CHECK(gyori_li_triangle_report(complete_graph(3), 2).details["triangles"] == 1);
    CHECK(gyori_li_triangle_report(complete_graph(5), 2).verdict == Verdict::HypothesesNotMet);
}

TEST_CASE("all claims on constructions and filtered random graphs") {
    std::vector<std::pair<SimpleGraph, int>> cases;  // graph, t
    for (int q : {2, 3}) cases.emplace_back(bollobas_gyori_certificate(q).graph, 2);
    cases.emplace_back(furedi_k2t_graph(5, 3), 3);
    cases.emplace_back(bipartite_k2t_extremal(3, 2).graph(), 2);
    Rng rng(99);
    for (int i = 0; i < 30; ++i) cases.emplace_back(random_free_graph(8 + i % 10, parse_family("C5;K2,2-ind"), rng), 2);

    for (const auto& [g, t] : cases) {
        const auto reports = run_claims(g, t, 2, claim_names());
        CHECK(count_verdict(reports, Verdict::Violation) == 0);
        CHECK(reports.size() > static_cast<std::size_t>(g.n()));
        for (const auto& r : reports) {
            const auto j = r.to_json();
            CHECK(j["claim"] == r.claim);
            CHECK(j["verdict"] == to_string(r.verdict));
        }
    }
    CHECK_THROWS_AS(run_claims(cycle_graph(5), 2, 2, {"no_such_claim"}), std::invalid_argument);
    const auto k4 = run_claims(complete_graph(4), 2, 2, {"walk_classification"});
    CHECK(k4.size() == 4);
    CHECK(count_verdict(k4, Verdict::HypothesesNotMet) == 4);
}

TEST_CASE("verdict logic") {
    ClaimReport r("demo");
    r.inequalities.push_back({"1 <= 2", 1, 2});
    r.decide();
    CHECK(r.verdict == Verdict::Holds);
    r.inequalities.push_back({"3 <= 2", 3, 2});
    r.decide();
    CHECK(r.verdict == Verdict::Violation);
    r.hypotheses.push_back({"h", false, ""});
    r.decide();
    CHECK(r.verdict == Verdict::HypothesesNotMet);
    CHECK(to_string(Verdict::Violation) == "VIOLATION");
}
