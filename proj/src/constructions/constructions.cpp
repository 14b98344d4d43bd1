#include "turanlab/constructions.hpp"

#include "turanlab/finite_field.hpp"

#include <array>
#include <cmath>

namespace turanlab {
namespace {

using Vec3 = std::array<int, 3>;

std::vector<Vec3> projective_points(const FiniteField& f) {
    const int q = f.order();
    std::vector<Vec3> out;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) out.push_back({1, a, b});
    for (int b = 0; b < q; ++b) out.push_back({0, 1, b});
    out.push_back({0, 0, 1});
    return out;
}

int dot(const FiniteField& f, const Vec3& x, const Vec3& y) {
    int s = 0;
    for (std::size_t i = 0; i < 3; ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

void check_furedi_parameters(int q, int t) {
    if (t < 2) throw std::invalid_argument("t must be at least 2, got " + std::to_string(t));
    if (!FiniteField::is_supported(q)) throw UnsupportedFieldError(q);
    if ((q - 1) % (t - 1) != 0)
        throw std::invalid_argument("t-1 = " + std::to_string(t - 1) + " does not divide q-1 = " + std::to_string(q - 1));
}

std::vector<std::uint8_t> sides_of(int n0, int n1) {
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n0 + n1), 0);
    std::fill(side.begin() + n0, side.end(), std::uint8_t{1});
    return side;
}

}  // namespace

CertificationError::CertificationError(const std::string& construction, const Witness& witness)
    : std::runtime_error(construction + " failed certification: contains " + witness.to_string()), witness_(witness) {}

nlohmann::json ConstructionCertificate::to_json() const {
    nlohmann::json params_json = nlohmann::json::object();
    for (const auto& [key, value] : params) params_json[key] = value;
    return {{"construction", name},
            {"n", n},
            {"m", m},
            {"family", family.to_string()},
            {"target_formula", target_formula},
            {"target", target},
            {"ratio_to_asymptotic", ratio},
            {"params", params_json}};
}

ConstructionCertificate certify(std::string name, std::map<std::string, int> params, SimpleGraph graph,
                                FamilySpec family, std::string target_formula, double target) {
    if (auto w = is_family_free(graph, family)) throw CertificationError(name, *w);
    const int n = graph.n();
    const long long m = graph.m();
    return ConstructionCertificate{std::move(name), std::move(params), std::move(graph), std::move(family),
                                   n, m, std::move(target_formula), target,
                                   target > 0 ? static_cast<double>(m) / target : 0.0};
}

BipartiteGraph projective_plane_incidence(int q) {
    const FiniteField f(q);
    const auto points = projective_points(f);
    const int n = static_cast<int>(points.size());
    SimpleGraph g(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dot(f, points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]) == 0) g.add_edge(i, n + j);
    return BipartiteGraph(std::move(g), sides_of(n, n));
}

SimpleGraph furedi_k2t_graph(int q, int t) {
    check_furedi_parameters(q, t);
    const FiniteField f(q);
    const auto h = f.subgroup(t - 1);
    std::vector<bool> in_h(static_cast<std::size_t>(q), false);
    for (int x : h) in_h[static_cast<std::size_t>(x)] = true;

    // Vector (a, b) has index a*q + b; class_of maps it to its H-orbit.
    const int total = q * q;
    std::vector<int> class_of(static_cast<std::size_t>(total), -1);
    std::vector<std::pair<int, int>> reps;
    for (int idx = 1; idx < total; ++idx) {
        if (class_of[static_cast<std::size_t>(idx)] >= 0) continue;
        const int a = idx / q, b = idx % q;
        for (int s : h) class_of[static_cast<std::size_t>(f.mul(s, a) * q + f.mul(s, b))] = static_cast<int>(reps.size());
        reps.emplace_back(a, b);
    }

    SimpleGraph g(static_cast<int>(reps.size()));
    for (int i = 0; i < g.n(); ++i) {
        const auto [a, b] = reps[static_cast<std::size_t>(i)];
        for (int idx = 1; idx < total; ++idx) {
            const int j = class_of[static_cast<std::size_t>(idx)];
            if (j <= i) continue;
            if (in_h[static_cast<std::size_t>(f.add(f.mul(a, idx / q), f.mul(b, idx % q)))]) g.add_edge(i, j);
        }
    }

    const std::string name = "furedi(q=" + std::to_string(q) + ",t=" + std::to_string(t) + ")";
    if (auto w = contains_kst(g, 2, t)) throw CertificationError(name, *w);
    if (max_codegree(g).count > t - 1) throw std::logic_error(name + ": codegree exceeds t-1");
    return g;
}

BipartiteGraph bipartite_k2t_extremal(int q, int t) {
    auto cover = bipartite_double_cover(furedi_k2t_graph(q, t));
    if (auto w = contains_kst(cover.graph(), 2, t))
        throw CertificationError("bipartite furedi(q=" + std::to_string(q) + ",t=" + std::to_string(t) + ")", *w);
    return cover;
}

ConstructionCertificate bollobas_gyori_double(const BipartiteGraph& g0, int doubled_side) {
    if (doubled_side != 0 && doubled_side != 1) throw std::invalid_argument("doubled side must be 0 or 1");
    const SimpleGraph& base = g0.graph();
    if (auto w = contains_cycle_of_length(base, 4))
        throw std::invalid_argument("base graph must be C4-free, found " + w->to_string());

    const auto doubled = g0.side_vertices(doubled_side);
    SimpleGraph g(base.n() + static_cast<int>(doubled.size()));
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    for (std::size_t i = 0; i < doubled.size(); ++i) {
        const Vertex b = doubled[i];
        const Vertex copy = base.n() + static_cast<Vertex>(i);
        for_each_bit(base.row(b), [&](Vertex a) { g.add_edge(a, copy); });
        g.add_edge(b, copy);
    }
    const double n = g.n();
    return certify("bollobas-gyori", {{"doubled_side", doubled_side}}, std::move(g), parse_family("C5;K2,2-ind"),
                   "2/(3*sqrt(3))*n^(3/2)", 2.0 / (3.0 * std::sqrt(3.0)) * std::pow(n, 1.5));
}

ConstructionCertificate projective_plane_certificate(int q) {
    auto g = projective_plane_incidence(q).graph();
    const double n = g.n();
    return certify("projective-plane", {{"q", q}}, std::move(g), parse_family("C4"), "(n/2)^(3/2)",
                   std::pow(n / 2.0, 1.5));
}

ConstructionCertificate furedi_certificate(int q, int t) {
    auto g = furedi_k2t_graph(q, t);
    const double n = g.n();
    return certify("furedi", {{"q", q}, {"t", t}}, std::move(g),
                   FamilySpec({ForbiddenPattern::complete_bipartite(2, t)}), "sqrt(t-1)*n^(3/2)/2",
                   std::sqrt(t - 1.0) * std::pow(n, 1.5) / 2.0);
}

ConstructionCertificate bipartite_furedi_certificate(int q, int t) {
    auto g = bipartite_k2t_extremal(q, t).graph();
    const double n = g.n();
    return certify("bipartite-furedi", {{"q", q}, {"t", t}}, std::move(g),
                   FamilySpec({ForbiddenPattern::complete_bipartite(2, t), ForbiddenPattern::cycle(3),
                               ForbiddenPattern::cycle(5), ForbiddenPattern::cycle(7)}),
                   "sqrt(t-1)*(n/2)^(3/2)", std::sqrt(t - 1.0) * std::pow(n / 2.0, 1.5));
}

ConstructionCertificate bollobas_gyori_certificate(int q, int doubled_side) {
    auto c = bollobas_gyori_double(projective_plane_incidence(q), doubled_side);
    c.params["q"] = q;
    return c;
}

}  // namespace turanlab
