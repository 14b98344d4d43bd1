#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace turanlab {

inline constexpr int kOracleMaxVertices = 9;
inline constexpr int kSearchMaxVertices = 32;
inline constexpr int kEngineVersion = 1;

enum class SearchMethod { Oracle, BranchAndBound };
std::string to_string(SearchMethod method);
SearchMethod parse_search_method(std::string_view text);

struct ExtremalRecord {
    int n = 0;
    FamilySpec family;
    long long max_edges = 0;
    SimpleGraph witness;  // canonically labelled
    SearchMethod method = SearchMethod::Oracle;
    bool exact = false;
    std::uint64_t nodes = 0;
    double seconds = 0.0;

    /// Compares the result fields only (not nodes or timing).
    bool same_result(const ExtremalRecord& other) const;

    nlohmann::json to_json() const;
    static ExtremalRecord from_json(const nlohmann::json& j);
};

struct SearchBudget {
    std::optional<std::uint64_t> node_limit;
    std::optional<double> seconds_limit;
    std::optional<long long> initial_lower_bound;

    /// Throws std::invalid_argument unless every given limit is positive.
    void validate() const;
};

struct SearchOptions {
    int workers = 1;
    /// ex(n-1, family), when known exactly; enables vertex-deletion upper bounds.
    std::optional<long long> previous_exact;
    /// Any known family-free graph on n vertices; seeds the lower bound.
    std::optional<SimpleGraph> seed;
};

/// Exhaustive oracle: grows every family-free graph one vertex at a time, keeping one
/// representative per isomorphism class. Throws std::invalid_argument for n > 9.
ExtremalRecord brute_force_ex(int n, const FamilySpec& family);

/// Edge-by-edge branch and bound in column-major pair order with lex-max symmetry breaking.
ExtremalRecord branch_and_bound_ex(int n, const FamilySpec& family, const SearchBudget& budget = {},
                                   const SearchOptions& options = {});

/// Append-only JSON-lines store keyed by (n, canonical family string).
class ResultsCache {
public:
    explicit ResultsCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }

    /// Best stored record: an exact one if any, else the one with most edges.
    std::optional<ExtremalRecord> lookup(int n, const FamilySpec& family) const;

    /// Appends under an exclusive advisory lock.
    void store(const ExtremalRecord& record);

    std::size_t size() const { return records_.size(); }

private:
    void load();

    std::filesystem::path path_;
    std::vector<ExtremalRecord> records_;
};

struct TableOptions {
    int workers = 1;
    ResultsCache* cache = nullptr;
    bool use_oracle = false;  // oracle instead of branch and bound where n <= 9
};

/// One record per n in [n_lo, n_hi], ascending; empty when n_lo > n_hi.
std::vector<ExtremalRecord> extremal_table(int n_lo, int n_hi, const FamilySpec& family, const SearchBudget& budget = {},
                                           const TableOptions& options = {});

}  // namespace turanlab
