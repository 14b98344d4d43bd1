#include <doctest.h>

#include "turanlab/graph6.hpp"
#include "turanlab/patterns.hpp"
#include "turanlab/random_graphs.hpp"

#include <algorithm>
#include <numeric>

using namespace turanlab;

namespace {

// Brute-force oracles: enumerate vertex tuples in lexicographic order and return the
// first one realising the pattern, checking adjacency pair by pair.

bool is_cycle_sequence(const SimpleGraph& g, const std::vector<Vertex>& seq, bool induced) {
    const std::size_t k = seq.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (consecutive && !g.has_edge(seq[i], seq[j])) return false;
            if (!consecutive && induced && g.has_edge(seq[i], seq[j])) return false;
        }
    return true;
}

std::optional<std::vector<Vertex>> naive_cycle(const SimpleGraph& g, int length, bool induced) {
    const int n = g.n();
    if (length > n) return std::nullopt;
    std::vector<Vertex> seq(static_cast<std::size_t>(length), 0);
    // Odometer over all length-tuples in lexicographic order.
    for (;;) {
        auto sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && is_cycle_sequence(g, seq, induced))
            return seq;
        int pos = length - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == n - 1) seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return std::nullopt;
        ++seq[static_cast<std::size_t>(pos)];
    }
}

std::vector<std::vector<Vertex>> subsets_of_size(int n, int k) {
    std::vector<std::vector<Vertex>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<Vertex> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Vertex>> naive_biclique(const SimpleGraph& g, int s, int t, bool induced) {
    const int n = g.n();
    for (const auto& a : subsets_of_size(n, s))
        for (const auto& b : subsets_of_size(n, t)) {
            std::vector<Vertex> both = a;
            both.insert(both.end(), b.begin(), b.end());
            auto sorted = both;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            bool ok = true;
            for (Vertex x : a)
                for (Vertex y : b) ok = ok && g.has_edge(x, y);
            if (induced) {
                for (std::size_t i = 0; i < a.size(); ++i)
                    for (std::size_t j = i + 1; j < a.size(); ++j) ok = ok && !g.has_edge(a[i], a[j]);
                for (std::size_t i = 0; i < b.size(); ++i)
                    for (std::size_t j = i + 1; j < b.size(); ++j) ok = ok && !g.has_edge(b[i], b[j]);
            }
            if (ok) return both;
        }
    return std::nullopt;
}

SimpleGraph k23_plus_edge() {
    auto g = complete_bipartite_graph(2, 3);
    g.add_edge(0, 1);
    return g;
}

SimpleGraph heawood() {
    // Points 0..6, lines 7..13 of the Fano plane: line i = {i, i+1, i+3} mod 7.
    SimpleGraph g(14);
    for (int i = 0; i < 7; ++i)
        for (int d : {0, 1, 3}) g.add_edge((i + d) % 7, 7 + i);
    return g;
}

}  // namespace

TEST_CASE("family parsing") {
    auto f = parse_family("C5;K2,2-ind");
    REQUIRE(f.patterns().size() == 2);
    CHECK(f.patterns()[0] == ForbiddenPattern::cycle(5));
    CHECK(f.patterns()[1] == ForbiddenPattern::complete_bipartite(2, 2, PatternMode::Induced));
    CHECK(f.to_string() == "C5;K2,2-ind");

    CHECK(parse_family("C5,K2,2-ind") == f);
    CHECK(parse_family(" C5 ; K2,2-ind ") == f);
    CHECK(parse_family("K3,2").patterns()[0] == ForbiddenPattern::complete_bipartite(2, 3));
    CHECK(parse_family("C4;C4;C5").patterns().size() == 2);
    CHECK(parse_family("K2,2;C5;C3").canonical_string() == "C3;C5;K2,2");
    CHECK(parse_family("C4-ind").patterns()[0].induced());

    auto position_of = [](std::string_view s) -> long {
        try {
            parse_family(s);
        } catch (const FamilyParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("X5") == 0);
    CHECK(position_of("C") == 1);
    CHECK(position_of("C2") == 1);
    CHECK(position_of("K2") == 2);
    CHECK(position_of("K2,2-in") == 5);
    CHECK(position_of("C5;") == 3);
    CHECK(position_of("C5 C4") == 3);
    CHECK(position_of("K0,3") == 1);

    CHECK_THROWS_AS(ForbiddenPattern::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec({}), std::invalid_argument);
}

TEST_CASE("contains_cycle_of_length") {
    auto w = contains_cycle_of_length(cycle_graph(5), 5);
    REQUIRE(w.has_value());
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});

    CHECK_FALSE(contains_cycle_of_length(complete_graph(4), 5).has_value());

    auto p = contains_cycle_of_length(petersen_graph(), 5);
    REQUIRE(p.has_value());
    CHECK(validate_witness(petersen_graph(), *p));
    CHECK(p->vertices == *naive_cycle(petersen_graph(), 5, false));
    for (int len : {3, 4}) CHECK_FALSE(contains_cycle_of_length(petersen_graph(), len).has_value());

    CHECK_THROWS_AS(contains_cycle_of_length(cycle_graph(5), 2), std::invalid_argument);
}

TEST_CASE("contains_kst and contains_induced_kst") {
    auto k23 = complete_bipartite_graph(2, 3);
    auto w = contains_kst(k23, 2, 3);
    REQUIRE(w.has_value());
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(contains_kst(k23_plus_edge(), 2, 3).has_value());
    CHECK_FALSE(contains_kst(cycle_graph(5), 2, 2).has_value());

    CHECK(contains_induced_kst(k23, 2, 3).has_value());
    CHECK_FALSE(contains_induced_kst(k23_plus_edge(), 2, 3).has_value());
    CHECK_FALSE(contains_induced_kst(cycle_graph(6), 2, 2).has_value());
}

TEST_CASE("C_6 has no induced C_4, by exhaustion over 4-subsets") {
    auto c6 = cycle_graph(6);
    for (const auto& s : subsets_of_size(6, 4)) {
        auto sub = induced_subgraph(c6, s);
        CHECK(sub.graph.m() <= 3);
    }
    CHECK_FALSE(naive_biclique(c6, 2, 2, true).has_value());
}

TEST_CASE("max_codegree_nonadjacent") {
    auto k23 = max_codegree_nonadjacent(complete_bipartite_graph(2, 3));
    CHECK(k23.count == 3);
    CHECK(k23.pair == std::make_pair(0, 1));

    auto k4 = max_codegree_nonadjacent(complete_graph(4));
    CHECK(k4.count == 0);
    CHECK_FALSE(k4.pair.has_value());

    auto c5 = max_codegree_nonadjacent(cycle_graph(5));
    CHECK(c5.count == 1);
    CHECK(c5.pair == std::make_pair(0, 2));
}

TEST_CASE("is_family_free") {
    auto c5 = is_family_free(cycle_graph(5), parse_family("C5"));
    REQUIRE(c5.has_value());
    CHECK(c5->pattern == ForbiddenPattern::cycle(5));

    CHECK_FALSE(is_family_free(heawood(), parse_family("C4;C5")).has_value());
    CHECK(is_family_free(heawood(), parse_family("C6")).has_value());

    // K_4: every 4-subset induces K_4, never C_4; 4 vertices cannot host a C_5.
    CHECK_FALSE(is_family_free(complete_graph(4), parse_family("C5;K2,2-ind")).has_value());

    // First violation in list order.
    auto first = is_family_free(complete_graph(5), parse_family("C5;C3"));
    REQUIRE(first.has_value());
    CHECK(first->pattern == ForbiddenPattern::cycle(5));
}

TEST_CASE("count_triangles") {
    CHECK(count_triangles(complete_graph(3)) == 1);
    CHECK(count_triangles(complete_graph(4)) == 4);
    CHECK(count_triangles(cycle_graph(5)) == 0);
    CHECK(count_triangles(complete_graph(7)) == 35);
    CHECK(find_triangle(complete_graph(4)) == std::array<Vertex, 3>{0, 1, 2});
}

TEST_CASE("paths") {
    CHECK(has_path_on(complete_graph(3), 3));
    CHECK_FALSE(has_path_on(complete_graph(3), 4));
    CHECK(has_path_on(cycle_graph(5), 5));
    CHECK(longest_path_capped(petersen_graph(), 20) == 10);
    CHECK(longest_path_capped(new_graph(3), 5) == 1);
    CHECK(longest_path_capped(new_graph(0), 5) == 0);
}

TEST_CASE("checkers agree with brute force on small graphs, including the least witness") {
    Rng rng(41);
    std::vector<SimpleGraph> graphs;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {  // every labelled graph on 5 vertices
        SimpleGraph g(5);
        int bit = 0;
        for (Vertex v = 1; v < 5; ++v)
            for (Vertex u = 0; u < v; ++u, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        graphs.push_back(g);
    }
    for (int trial = 0; trial < 250; ++trial) graphs.push_back(random_gnp(6 + trial % 2, 0.2 + 0.6 * (trial % 7) / 6.0, rng));

    const std::vector<std::pair<int, int>> sides{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    long found_total = 0;
    for (const auto& g : graphs) {
        for (bool induced : {false, true}) {
            const auto mode = induced ? PatternMode::Induced : PatternMode::Subgraph;
            for (int len = 3; len <= 7; ++len) {
                auto fast = contains_cycle_of_length(g, len, mode);
                auto slow = naive_cycle(g, len, induced);
                REQUIRE(fast.has_value() == slow.has_value());
                if (fast) {
                    CHECK(fast->vertices == *slow);
                    CHECK(validate_witness(g, *fast));
                    ++found_total;
                }
            }
            for (auto [s, t] : sides) {
                auto fast = induced ? contains_induced_kst(g, s, t) : contains_kst(g, s, t);
                auto slow = naive_biclique(g, s, t, induced);
                REQUIRE(fast.has_value() == slow.has_value());
                if (fast) {
                    CHECK(fast->vertices == *slow);
                    CHECK(validate_witness(g, *fast));
                    ++found_total;
                }
                // An induced copy is a copy.
                if (induced && fast) CHECK(contains_kst(g, s, t).has_value());
            }
        }
    }
    CHECK(found_total > 1000);
}

TEST_CASE("bipartite graphs contain no odd cycles") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_gnp(4 + trial % 6, 0.6, rng);
        auto cover = bipartite_double_cover(g).graph();
        for (int len : {3, 5, 7, 9, 11}) CHECK_FALSE(contains_cycle_of_length(cover, len).has_value());
        for (int len : {3, 5, 7}) CHECK_FALSE(contains_cycle_of_length(cover, len, PatternMode::Induced).has_value());
    }
}

TEST_CASE("a free verdict implies each pattern check is free") {
    Rng rng(47);
    const auto family = parse_family("C5;K2,2-ind");
    int free_count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_free_graph(6 + trial % 8, family, rng, 0.8);
        REQUIRE_FALSE(is_family_free(g, family).has_value());
        for (const auto& p : family.patterns()) CHECK_FALSE(find_pattern(g, p).has_value());
        ++free_count;
    }
    CHECK(free_count == 100);
}

TEST_CASE("witnesses that do not realise their pattern are rejected") {
    auto c5 = cycle_graph(5);
    CHECK_FALSE(validate_witness(c5, Witness{ForbiddenPattern::cycle(5), {0, 2, 4, 1, 3}}));
    CHECK_FALSE(validate_witness(c5, Witness{ForbiddenPattern::cycle(5), {0, 1, 2, 3}}));
    CHECK_FALSE(validate_witness(k23_plus_edge(),
                                 Witness{ForbiddenPattern::complete_bipartite(2, 3, PatternMode::Induced), {0, 1, 2, 3, 4}}));
    CHECK(validate_witness(k23_plus_edge(), Witness{ForbiddenPattern::complete_bipartite(2, 3), {0, 1, 2, 3, 4}}));
}
