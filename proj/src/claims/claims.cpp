#include "turanlab/claims.hpp"

#include <algorithm>
#include <cmath>

namespace turanlab {
namespace {

Rational average_degree(const SimpleGraph& g) { return Rational(2 * g.m(), g.n()); }

int max_degree(const SimpleGraph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const SimpleGraph& g) {
    int best = g.n() == 0 ? 0 : g.degree(0);
    for (Vertex v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

Hypothesis free_of(const SimpleGraph& g, const ForbiddenPattern& p) {
    auto w = find_pattern(g, p);
    return {p.to_string() + "-free", !w.has_value(), w ? "contains " + w->to_string() : ""};
}

Hypothesis triangle_free(const SimpleGraph& g) { return free_of(g, ForbiddenPattern::cycle(3)); }

Hypothesis max_degree_at_most(const SimpleGraph& g, int factor) {
    const int dmax = max_degree(g);
    const Rational cap = factor * average_degree(g);
    return {"d_max <= " + std::to_string(factor) + "d", Rational(dmax) <= cap,
            "d_max = " + std::to_string(dmax) + ", " + std::to_string(factor) + "d = " + to_string(cap)};
}

void require_parameters(int t, int k) {
    if (t < 2) throw std::invalid_argument("t must be at least 2, got " + std::to_string(t));
    if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
}

void require_vertex(const SimpleGraph& g, Vertex v) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::string str(const BigInt& v) { return to_string(v); }

long long good_paths(const SimpleGraph& g, Vertex x, Vertex y, std::map<Vertex, long long>* per_endpoint) {
    long long total = 0;
    // first, second: the path is first-second-z-w and must avoid second ~ w.
    for (auto [first, second] : {std::pair{x, y}, std::pair{y, x}}) {
        for_each_bit(g.row(second), [&](Vertex z) {
            if (z == first) return;
            for_each_bit(g.row(z), [&](Vertex w) {
                if (w == first || w == second || g.has_edge(second, w)) return;
                ++total;
                if (per_endpoint) ++(*per_endpoint)[w];
            });
        });
    }
    return total;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "HOLDS";
        case Verdict::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
        case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

bool ClaimReport::hypotheses_met() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.passed; });
}

void ClaimReport::decide() {
    if (!hypotheses_met()) verdict = Verdict::HypothesesNotMet;
    else if (std::all_of(inequalities.begin(), inequalities.end(), [](const Inequality& i) { return i.holds(); }))
        verdict = Verdict::Holds;
    else
        verdict = Verdict::Violation;
}

nlohmann::json ClaimReport::to_json() const {
    nlohmann::json hyps = nlohmann::json::array();
    for (const auto& h : hypotheses) hyps.push_back({{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
    nlohmann::json ineqs = nlohmann::json::array();
    for (const auto& i : inequalities)
        ineqs.push_back({{"name", i.name},
                         {"lhs", to_string(i.lhs)},
                         {"rhs", to_string(i.rhs)},
                         {"lhs_approx", to_double(i.lhs)},
                         {"rhs_approx", to_double(i.rhs)},
                         {"holds", i.holds()}});
    return {{"claim", claim},
            {"verdict", to_string(verdict)},
            {"hypotheses", hyps},
            {"inequalities", ineqs},
            {"details", details}};
}

TriangleError::TriangleError(std::array<Vertex, 3> triangle)
    : std::invalid_argument("graph must be triangle-free, found triangle " + std::to_string(triangle[0]) + " " +
                            std::to_string(triangle[1]) + " " + std::to_string(triangle[2])),
      triangle_(triangle) {}

BigInt count_3_walks(const SimpleGraph& g) {
    BigInt total = 0;
    for (auto [u, v] : g.edges()) total += BigInt(2) * g.degree(u) * g.degree(v);
    return total;
}

ClaimReport blakley_roy_check(const SimpleGraph& g) {
    if (g.n() == 0) throw std::invalid_argument("Blakley-Roy check needs at least one vertex");
    const Rational d = average_degree(g);
    const BigInt walks = count_3_walks(g);
    ClaimReport r{"blakley_roy"};
    r.inequalities.push_back({"n d^3 <= 3-walks", g.n() * d * d * d, Rational(walks)});
    r.details = {{"n", g.n()}, {"m", g.m()}, {"d", to_string(d)}, {"walks", str(walks)}};
    r.decide();
    return r;
}

WalkStats walk_stats_from_vertex(const SimpleGraph& g, Vertex v) {
    require_vertex(g, v);
    const auto layers = neighborhood_layers(g, v);
    const auto in_layer = [&](Vertex w, int i) { return layers.layer_of[static_cast<std::size_t>(w)] == i; };
    WalkStats s;
    s.root = v;
    for_each_bit(g.row(v), [&](Vertex v1) {
        for_each_bit(g.row(v1), [&](Vertex v2) {
            const long long deg = g.degree(v2);
            s.total += deg;
            if (v2 == v) {
                s.v2_is_root += deg;
                return;
            }
            if (!in_layer(v2, 2)) {
                s.other += deg;
                return;
            }
            for_each_bit(g.row(v2), [&](Vertex v3) {
                if (in_layer(v3, 3)) ++s.good;
                else if (in_layer(v3, 1)) ++s.last_in_n1;
                else if (in_layer(v3, 2)) ++s.last_in_n2;
                else ++s.other;
            });
        });
    });
    return s;
}

WalkClassification classify_3_walks_from_vertex(const SimpleGraph& g, Vertex v, int t, int k) {
    require_parameters(t, k);
    require_vertex(g, v);
    if (auto tri = find_triangle(g)) throw TriangleError(*tri);

    WalkClassification out{walk_stats_from_vertex(g, v), ClaimReport{"walk_classification"}};
    const WalkStats& s = out.stats;
    ClaimReport& r = out.report;
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::complete_bipartite(2, t)));
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::cycle(2 * k + 1)));
    r.hypotheses.push_back(max_degree_at_most(g, 4));

    const Rational d = average_degree(g);
    const long long dmax = max_degree(g);
    const auto layers = neighborhood_layers(g, v);
    const VertexSet n2 = layers.layer_set(2, g.n());
    long long n2_edges = 0;
    for_each_bit(n2, [&](Vertex a) { n2_edges += static_cast<long long>((g.row(a) & n2).count()); });
    n2_edges /= 2;

    r.inequalities.push_back({"walks with v2 = v <= d_max^2", Rational(s.v2_is_root), Rational(dmax * dmax)});
    r.inequalities.push_back(
        {"walks ending in N1 <= d_max^2 (t-1)", Rational(s.last_in_n1), Rational(dmax * dmax * (t - 1))});
    r.inequalities.push_back(
        {"walks ending in N2 <= 2(t-1)|E(G[N2])|", Rational(s.last_in_n2), Rational(2LL * (t - 1) * n2_edges)});
    r.inequalities.push_back(
        {"walks not good <= 32(4k-7)(t-1)d^2", Rational(s.not_good()), Rational(32LL * (4 * k - 7) * (t - 1)) * d * d});
    r.details = {{"root", v},
                 {"total", str(s.total)},
                 {"good", str(s.good)},
                 {"v2_is_root", str(s.v2_is_root)},
                 {"last_in_n1", str(s.last_in_n1)},
                 {"last_in_n2", str(s.last_in_n2)},
                 {"other", str(s.other)},
                 {"n2_edges", n2_edges},
                 {"c_kt", to_string(Rational(32LL * (4 * k - 7) * (t - 1), 3))}};
    r.decide();
    return out;
}

ClaimReport n2_edge_bound_check(const SimpleGraph& g, Vertex v, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
    require_vertex(g, v);
    ClaimReport r{"n2_edge_bound"};
    r.hypotheses.push_back(triangle_free(g));
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::cycle(2 * k + 1)));

    const auto layers = neighborhood_layers(g, v);
    const VertexSet n1 = layers.layer_set(1, g.n());
    const VertexSet n2 = layers.layer_set(2, g.n());
    const std::vector<Vertex> n2_list = layers.layers.size() > 2 ? layers.layers[2] : std::vector<Vertex>{};

    // Parts S'_q: each N2 vertex joins its least N1 neighbour.
    std::vector<int> part(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> parents;
    for (Vertex y : n2_list) {
        const Vertex q = static_cast<Vertex>((g.row(y) & n1).find_first());
        auto it = std::find(parents.begin(), parents.end(), q);
        if (it == parents.end()) it = parents.insert(parents.end(), q);
        part[static_cast<std::size_t>(y)] = static_cast<int>(it - parents.begin());
    }
    // Sort parts by parent index so colouring order is by parent.
    std::vector<int> order(parents.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return parents[a] < parents[b]; });

    std::vector<std::pair<Vertex, Vertex>> n2_edges;
    for (auto [a, b] : g.edges())
        if (n2.test(static_cast<std::size_t>(a)) && n2.test(static_cast<std::size_t>(b))) n2_edges.emplace_back(a, b);

    const std::size_t parts = parents.size();
    std::vector<std::vector<std::pair<int, int>>> between(parts);  // part -> (other part, edge count)
    {
        std::map<std::pair<int, int>, int> weight;
        for (auto [a, b] : n2_edges) {
            const int pa = part[static_cast<std::size_t>(a)], pb = part[static_cast<std::size_t>(b)];
            if (pa != pb) ++weight[{pa, pb}], ++weight[{pb, pa}];
        }
        for (auto [key, w] : weight) between[static_cast<std::size_t>(key.first)].emplace_back(key.second, w);
    }
    std::vector<int> colour(parts, -1);
    const auto gain_of_flip = [&](int p) {
        int same = 0, differ = 0;
        for (auto [o, w] : between[static_cast<std::size_t>(p)]) {
            if (colour[static_cast<std::size_t>(o)] < 0) continue;
            (colour[static_cast<std::size_t>(o)] == colour[static_cast<std::size_t>(p)] ? same : differ) += w;
        }
        return same - differ;
    };
    for (int p : order) {
        colour[static_cast<std::size_t>(p)] = 0;
        if (gain_of_flip(p) > 0) colour[static_cast<std::size_t>(p)] = 1;
    }
    int flips = 0;
    for (bool improved = true; improved;) {
        improved = false;
        for (int p : order)
            if (gain_of_flip(p) > 0) {
                colour[static_cast<std::size_t>(p)] ^= 1;
                improved = true;
                ++flips;
            }
    }

    const auto local = induced_subgraph(g, n2);
    std::vector<int> index_of(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < local.parent_index.size(); ++i)
        index_of[static_cast<std::size_t>(local.parent_index[i])] = static_cast<int>(i);
    SimpleGraph bichromatic(local.graph.n());
    for (auto [a, b] : n2_edges) {
        const int pa = part[static_cast<std::size_t>(a)], pb = part[static_cast<std::size_t>(b)];
        if (colour[static_cast<std::size_t>(pa)] != colour[static_cast<std::size_t>(pb)])
            bichromatic.add_edge(index_of[static_cast<std::size_t>(a)], index_of[static_cast<std::size_t>(b)]);
    }
    const int longest = longest_path_capped(bichromatic, 2 * k - 2);
    const long long e2 = static_cast<long long>(n2_edges.size());
    const long long size2 = static_cast<long long>(n2_list.size());

    r.inequalities.push_back({"|E(G[N2])|/2 <= |B|", Rational(e2, 2), Rational(bichromatic.m())});
    r.inequalities.push_back({"vertices on a longest path in B <= 2k-3", Rational(longest), Rational(2 * k - 3)});
    r.inequalities.push_back({"|E(G[N2])| <= (2k-4)|N2|", Rational(e2), Rational((2LL * k - 4) * size2)});
    const bool bounded_degree = g.n() > 0 && Rational(max_degree(g)) <= 4 * average_degree(g);
    if (bounded_degree) {
        const Rational d = average_degree(g);
        r.inequalities.push_back({"|E(G[N2])| <= (2k-4) 16 d^2", Rational(e2), (2 * k - 4) * 16 * d * d});
    }
    r.details = {{"root", v},         {"n1", static_cast<long long>(n1.count())},
                 {"n2", size2},       {"n2_edges", e2},
                 {"parts", parts},    {"bichromatic_edges", bichromatic.m()},
                 {"longest_path_in_b", longest},
                 {"local_search_flips", flips},
                 {"degree_bound_applied", bounded_degree}};
    r.decide();
    return r;
}

Decomposition triangle_edge_decomposition(const SimpleGraph& g) {
    Decomposition d{g, SimpleGraph(g.n()), SimpleGraph(g.n()), count_triangles(g)};
    for (auto [u, v] : g.edges()) {
        if ((g.row(u) & g.row(v)).any()) d.g_delta.add_edge(u, v);
        else d.remainder.add_edge(u, v);
    }
    return d;
}

ClaimReport decomposition_invariants_check(const Decomposition& d) {
    ClaimReport r{"triangle_decomposition"};
    long long shared = 0, missing = 0, foreign = 0;
    for (auto [u, v] : d.original.edges()) {
        const bool a = d.g_delta.has_edge(u, v), b = d.remainder.has_edge(u, v);
        shared += a && b;
        missing += !a && !b;
    }
    for (const SimpleGraph* part : {&d.g_delta, &d.remainder})
        for (auto [u, v] : part->edges()) foreign += !d.original.has_edge(u, v);
    const long long remainder_triangles = count_triangles(d.remainder);
    r.inequalities.push_back({"edges in both parts <= 0", Rational(shared), Rational(0)});
    r.inequalities.push_back({"edges in neither part <= 0", Rational(missing), Rational(0)});
    r.inequalities.push_back({"part edges outside G <= 0", Rational(foreign), Rational(0)});
    r.inequalities.push_back({"triangles in remainder <= 0", Rational(remainder_triangles), Rational(0)});
    r.inequalities.push_back({"|E(G_delta)| <= 3 triangles", Rational(d.g_delta.m()), Rational(3 * d.triangle_count)});
    r.details = {{"m", d.original.m()},
                 {"g_delta_edges", d.g_delta.m()},
                 {"remainder_edges", d.remainder.m()},
                 {"triangles", d.triangle_count}};
    r.decide();
    return r;
}

ClaimReport kst_removed_triangles_check(const Decomposition& d, int s, int t) {
    const auto pattern = ForbiddenPattern::complete_bipartite(s, t, PatternMode::Induced);
    ClaimReport r{"kst_removed_triangles"};
    r.hypotheses.push_back(free_of(d.original, pattern));
    const auto copy = contains_kst(d.remainder, pattern.s(), pattern.t());
    r.inequalities.push_back({"copies of K" + std::to_string(pattern.s()) + "," + std::to_string(pattern.t()) +
                                  " in remainder <= 0",
                              Rational(copy ? 1 : 0), Rational(0)});
    r.details = {{"s", pattern.s()}, {"t", pattern.t()}, {"witness", copy ? copy->to_string() : ""}};
    r.decide();
    return r;
}

Good3PathStats good_3path_stats(const SimpleGraph& g, Vertex x, Vertex y, int t) {
    if (t < 2) throw std::invalid_argument("t must be at least 2, got " + std::to_string(t));
    require_vertex(g, x);
    require_vertex(g, y);
    if (!g.has_edge(x, y))
        throw std::invalid_argument(std::to_string(x) + " " + std::to_string(y) + " is not an edge");
    Good3PathStats out{x, y, 0, {}, ClaimReport{"good_3path_endpoint"}};
    out.total = good_paths(g, x, y, &out.per_endpoint);

    ClaimReport& r = out.report;
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::cycle(5)));
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::complete_bipartite(2, t, PatternMode::Induced)));
    Vertex worst = -1;
    long long most = 0;
    for (auto [w, c] : out.per_endpoint)
        if (c > most) most = c, worst = w;
    r.inequalities.push_back({"good 3-paths ending at one vertex <= max(3,t)-1", Rational(most),
                              Rational(std::max(3, t) - 1)});
    r.details = {{"x", x}, {"y", y}, {"total", out.total}, {"max_endpoint", worst}, {"max_endpoint_count", most}};
    r.decide();
    return out;
}

Good3PathEdge max_good_3path_edge(const SimpleGraph& g, int t, int k) {
    require_parameters(t, k);
    if (k != 2) throw std::invalid_argument("the good 3-path bound is stated for k = 2");
    if (g.m() == 0) throw std::invalid_argument("graph has no edges");
    Good3PathEdge out{0, 0, -1, ClaimReport{"good_3path_lower"}};
    for (auto [u, v] : g.edges()) {
        const long long c = good_paths(g, u, v, nullptr);
        if (c > out.count) out.x = u, out.y = v, out.count = c;
    }
    const Rational d = average_degree(g);
    ClaimReport& r = out.report;
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::cycle(5)));
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::complete_bipartite(2, t, PatternMode::Induced)));
    r.hypotheses.push_back({"min degree >= d/2", Rational(min_degree(g)) >= d / 2,
                            "min degree = " + std::to_string(min_degree(g)) + ", d/2 = " + to_string(d / 2)});
    r.hypotheses.push_back(max_degree_at_most(g, 6));
    r.inequalities.push_back({"2d^2 - 84d <= most good 3-paths on one edge", 2 * d * d - 84 * d, Rational(out.count)});
    r.details = {{"x", out.x}, {"y", out.y}, {"count", out.count}, {"d", to_string(d)}};
    r.decide();
    return out;
}

ClaimReport erdos_gallai_path_check(const SimpleGraph& g, int p) {
    if (p < 2) throw std::invalid_argument("path vertex count must be at least 2, got " + std::to_string(p));
    ClaimReport r{"erdos_gallai"};
    const bool has_path = has_path_on(g, p);
    r.hypotheses.push_back({"no path on " + std::to_string(p) + " vertices", !has_path, has_path ? "path exists" : ""});
    r.inequalities.push_back({"m <= (p-2)/2 n", Rational(g.m()), Rational((p - 2) * static_cast<long long>(g.n()), 2)});
    r.details = {{"p", p}, {"n", g.n()}, {"m", g.m()}, {"has_path", has_path}};
    r.decide();
    return r;
}

ClaimReport limited_cherries_check(const SimpleGraph& g, int t) {
    if (t < 2) throw std::invalid_argument("t must be at least 2, got " + std::to_string(t));
    ClaimReport r{"limited_cherries"};
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::cycle(5)));
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::complete_bipartite(2, t, PatternMode::Induced)));
    const auto c = max_codegree_nonadjacent(g);
    r.inequalities.push_back(
        {"common neighbours of a non-adjacent pair <= max(3,t)-1", Rational(c.count), Rational(std::max(3, t) - 1)});
    r.details = {{"max_codegree", c.count}};
    if (c.pair) r.details["pair"] = {c.pair->first, c.pair->second};
    r.decide();
    return r;
}

ClaimReport gyori_li_triangle_report(const SimpleGraph& g, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
    ClaimReport r{"gyori_li"};
    r.hypotheses.push_back(free_of(g, ForbiddenPattern::cycle(2 * k + 1)));
    const long long triangles = count_triangles(g);
    const double scale = g.n() > 0 ? std::pow(static_cast<double>(g.n()), 1.0 + 1.0 / k) : 0.0;
    r.details = {{"triangles", triangles}, {"k", k}, {"ratio_to_n_pow", scale > 0 ? triangles / scale : 0.0}};
    r.decide();
    return r;
}

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names{"blakley_roy",         "walk_classification", "n2_edge_bound",
                                                "triangle_decomposition", "kst_removed_triangles",
                                                "good_3path_endpoint", "good_3path_lower",     "erdos_gallai",
                                                "limited_cherries",    "gyori_li"};
    return names;
}

std::vector<ClaimReport> run_claims(const SimpleGraph& g, int t, int k, const std::vector<std::string>& names) {
    require_parameters(t, k);
    for (const auto& name : names)
        if (std::find(claim_names().begin(), claim_names().end(), name) == claim_names().end())
            throw std::invalid_argument("unknown claim \"" + name + "\"");
    const auto wants = [&](const std::string& name) { return std::find(names.begin(), names.end(), name) != names.end(); };

    std::vector<ClaimReport> out;
    if (wants("blakley_roy") && g.n() > 0) out.push_back(blakley_roy_check(g));
    if (wants("walk_classification")) {
        const auto tri = find_triangle(g);
        for (Vertex v = 0; v < g.n(); ++v) {
            if (!tri) {
                out.push_back(classify_3_walks_from_vertex(g, v, t, k).report);
                continue;
            }
            ClaimReport r{"walk_classification"};
            r.hypotheses.push_back({"C3-free", false, TriangleError(*tri).what()});
            r.details = {{"root", v}};
            r.decide();
            out.push_back(std::move(r));
        }
    }
    if (wants("n2_edge_bound"))
        for (Vertex v = 0; v < g.n(); ++v) out.push_back(n2_edge_bound_check(g, v, k));
    if (wants("triangle_decomposition") || wants("kst_removed_triangles")) {
        const auto d = triangle_edge_decomposition(g);
        if (wants("triangle_decomposition")) out.push_back(decomposition_invariants_check(d));
        if (wants("kst_removed_triangles"))
            for (auto [s, tt] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}})
                out.push_back(kst_removed_triangles_check(d, s, tt));
    }
    if (wants("good_3path_endpoint"))
        for (auto [x, y] : g.edges()) out.push_back(good_3path_stats(g, x, y, t).report);
    if (wants("good_3path_lower") && g.m() > 0 && k == 2) out.push_back(max_good_3path_edge(g, t, k).report);
    if (wants("erdos_gallai"))
        for (Vertex v = 0; v < g.n(); ++v) {
            auto r = erdos_gallai_path_check(induced_subgraph(g, g.row(v)).graph, 4);
            r.details["neighbourhood_of"] = v;
            out.push_back(std::move(r));
        }
    if (wants("limited_cherries")) out.push_back(limited_cherries_check(g, t));
    if (wants("gyori_li")) out.push_back(gyori_li_triangle_report(g, k));
    return out;
}

}  // namespace turanlab
