#pragma once

#include "turanlab/exact.hpp"
#include "turanlab/patterns.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turanlab {

/// Parameters of the bound columns: K_{s,t} and C_{2k+1}.
struct ReportParams {
    int s = 2;
    int t = 2;
    int k = 2;
};

/// s, t from the first K_{s,t} with s >= 2; k from the first odd cycle of length >= 5.
/// Missing parts keep the defaults (2, 2, 2).
ReportParams report_params_for(const FamilySpec& family);

struct ConstructionPoint {
    std::string name;
    int n = 0;
    long long m = 0;
};

/// Catalogue constructions (projective plane, doubled plane, Füredi and its double cover for
/// every t' <= t_max) with n in [n_lo, n_hi] that are free of `family`.
std::vector<ConstructionPoint> construction_points(int n_lo, int n_hi, const FamilySpec& family, int t_max);

struct ReportRow {
    int n = 0;
    std::string family;
    std::optional<long long> exact;
    bool exact_is_proven = false;
    std::string construction;
    std::optional<long long> construction_m;
    double bound_main = 0.0;
    double bound_c4c5_lower = 0.0;
    double bound_c4c5_upper = 0.0;
    double bound_ltt = 0.0;
    std::optional<double> ratio_exact_main;
    std::optional<double> ratio_exact_c4c5_lower;
    std::optional<double> ratio_exact_c4c5_upper;
    std::optional<double> ratio_construction_main;
    double ratio_ltt_main = 0.0;
};

struct ReportOptions {
    ReportParams params;
    SearchBudget budget;
    TableOptions table;
    bool compute_exact = true;  // otherwise exact values come from the cache only
};

std::vector<ReportRow> build_report(int n_lo, int n_hi, const FamilySpec& family, const ReportOptions& options);

/// Fixed CSV header order; JSON rows use the same keys.
const std::vector<std::string>& report_columns();
std::string report_csv(const std::vector<ReportRow>& rows);
nlohmann::json report_json(const std::vector<ReportRow>& rows, const ReportParams& params);

}  // namespace turanlab
