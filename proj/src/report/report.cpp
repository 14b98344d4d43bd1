#include "turanlab/report.hpp"

#include "turanlab/bounds.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/finite_field.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace turanlab {
namespace {

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

template <class T>
std::string csv_cell(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>)
        return fixed(*v);
    else
        return std::to_string(*v);
}

template <class T>
nlohmann::json json_cell(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void consider(std::vector<ConstructionPoint>& out, const ConstructionCertificate& c, const FamilySpec& family) {
    if (is_family_free(c.graph, family)) return;
    std::string name = c.name;
    for (const auto& [key, value] : c.params) name += " " + key + "=" + std::to_string(value);
    out.push_back({name, c.n, c.m});
}

}  // namespace

ReportParams report_params_for(const FamilySpec& family) {
    ReportParams p;
    bool have_kst = false, have_cycle = false;
    for (const auto& pattern : family.patterns()) {
        if (pattern.kind() == ForbiddenPattern::Kind::CompleteBipartite && !have_kst && pattern.s() >= 2) {
            p.s = pattern.s();
            p.t = pattern.t();
            have_kst = true;
        }
        if (pattern.kind() == ForbiddenPattern::Kind::Cycle && !have_cycle && pattern.length() >= 5 &&
            pattern.length() % 2 == 1) {
            p.k = (pattern.length() - 1) / 2;
            have_cycle = true;
        }
    }
    return p;
}

std::vector<ConstructionPoint> construction_points(int n_lo, int n_hi, const FamilySpec& family, int t_max) {
    std::vector<ConstructionPoint> out;
    const auto in_range = [&](long long n) { return n >= n_lo && n <= n_hi; };
    for (int q = 2; 1LL * q * q <= 2LL * n_hi * std::max(t_max, 2) + 1; ++q) {
        if (!FiniteField::is_supported(q)) continue;
        const long long plane = 1LL * q * q + q + 1;
        if (in_range(2 * plane)) consider(out, projective_plane_certificate(q), family);
        if (in_range(3 * plane)) consider(out, bollobas_gyori_certificate(q), family);
        for (int t = 2; t <= t_max; ++t) {
            if ((q - 1) % (t - 1) != 0) continue;
            const long long nf = (1LL * q * q - 1) / (t - 1);
            if (in_range(nf)) consider(out, furedi_certificate(q, t), family);
            if (in_range(2 * nf)) consider(out, bipartite_furedi_certificate(q, t), family);
        }
    }
    return out;
}

std::vector<ReportRow> build_report(int n_lo, int n_hi, const FamilySpec& family, const ReportOptions& options) {
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("report needs 1 <= n_lo <= n_hi");
    const auto& p = options.params;
    const auto main = main_bound_formula(p.s, p.t);
    const auto ltt = ltt_formula(p.k, p.t);

    std::map<int, ExtremalRecord> exact;
    if (options.compute_exact) {
        for (auto& r : extremal_table(n_lo, n_hi, family, options.budget, options.table)) exact.emplace(r.n, std::move(r));
    } else if (options.table.cache) {
        for (int n = n_lo; n <= n_hi; ++n)
            if (auto r = options.table.cache->lookup(n, family)) exact.emplace(n, std::move(*r));
    }

    std::map<int, ConstructionPoint> best;
    for (auto& c : construction_points(n_lo, n_hi, family, p.t)) {
        auto it = best.find(c.n);
        if (it == best.end() || c.m > it->second.m) best[c.n] = c;
    }

    std::vector<ReportRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        ReportRow row;
        row.n = n;
        row.family = family.to_string();
        row.bound_main = main(n);
        row.bound_c4c5_lower = c4c5_lower_bound(n);
        row.bound_c4c5_upper = c4c5_upper_bound(n);
        row.bound_ltt = ltt(n);
        row.ratio_ltt_main = row.bound_ltt / row.bound_main;
        if (auto it = exact.find(n); it != exact.end()) {
            const double e = static_cast<double>(it->second.max_edges);
            row.exact = it->second.max_edges;
            row.exact_is_proven = it->second.exact;
            row.ratio_exact_main = e / row.bound_main;
            row.ratio_exact_c4c5_lower = e / row.bound_c4c5_lower;
            row.ratio_exact_c4c5_upper = e / row.bound_c4c5_upper;
        }
        if (auto it = best.find(n); it != best.end()) {
            row.construction = it->second.name;
            row.construction_m = it->second.m;
            row.ratio_construction_main = static_cast<double>(it->second.m) / row.bound_main;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> columns = {
        "n",
        "family",
        "exact",
        "exact_is_proven",
        "construction",
        "construction_m",
        "bound_main",
        "bound_c4c5_lower",
        "bound_c4c5_upper",
        "bound_ltt",
        "ratio_exact_main",
        "ratio_exact_c4c5_lower",
        "ratio_exact_c4c5_upper",
        "ratio_construction_main",
        "ratio_ltt_main",
    };
    return columns;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    const auto& cols = report_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& r : rows) {
        // Family strings contain commas (K2,2), so they are quoted.
        out << r.n << ",\"" << r.family << "\"," << csv_cell(r.exact) << ',' << (r.exact ? (r.exact_is_proven ? "1" : "0") : "")
            << ",\"" << r.construction << "\"," << csv_cell(r.construction_m) << ',' << fixed(r.bound_main) << ','
            << fixed(r.bound_c4c5_lower) << ',' << fixed(r.bound_c4c5_upper) << ',' << fixed(r.bound_ltt) << ','
            << csv_cell(r.ratio_exact_main) << ',' << csv_cell(r.ratio_exact_c4c5_lower) << ','
            << csv_cell(r.ratio_exact_c4c5_upper) << ',' << csv_cell(r.ratio_construction_main) << ','
            << fixed(r.ratio_ltt_main) << '\n';
    }
    return out.str();
}

nlohmann::json report_json(const std::vector<ReportRow>& rows, const ReportParams& params) {
    nlohmann::json j;
    j["columns"] = report_columns();
    j["params"] = {{"s", params.s}, {"t", params.t}, {"k", params.k}};
    j["bounds"] = {{"bound_main", main_bound_formula(params.s, params.t).name},
                   {"bound_c4c5_lower", c4c5_lower_formula().name},
                   {"bound_c4c5_upper", c4c5_upper_formula().name},
                   {"bound_ltt", ltt_formula(params.k, params.t).name},
                   {"note", "principal terms only"}};
    auto& out = j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        out.push_back({{"n", r.n},
                       {"family", r.family},
                       {"exact", json_cell(r.exact)},
                       {"exact_is_proven", r.exact ? nlohmann::json(r.exact_is_proven) : nlohmann::json(nullptr)},
                       {"construction", r.construction.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.construction)},
                       {"construction_m", json_cell(r.construction_m)},
                       {"bound_main", r.bound_main},
                       {"bound_c4c5_lower", r.bound_c4c5_lower},
                       {"bound_c4c5_upper", r.bound_c4c5_upper},
                       {"bound_ltt", r.bound_ltt},
                       {"ratio_exact_main", json_cell(r.ratio_exact_main)},
                       {"ratio_exact_c4c5_lower", json_cell(r.ratio_exact_c4c5_lower)},
                       {"ratio_exact_c4c5_upper", json_cell(r.ratio_exact_c4c5_upper)},
                       {"ratio_construction_main", json_cell(r.ratio_construction_main)},
                       {"ratio_ltt_main", r.ratio_ltt_main}});
    }
    return j;
}

}  // namespace turanlab
