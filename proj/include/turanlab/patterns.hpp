#pragma once

#include "turanlab/graph.hpp"

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turanlab {

enum class PatternMode { Subgraph, Induced };

/// A forbidden cycle C_L or complete bipartite K_{s,t}, as a subgraph or induced.
class ForbiddenPattern {
public:
    enum class Kind { Cycle, CompleteBipartite };

    /// L >= 3.
    static ForbiddenPattern cycle(int length, PatternMode mode = PatternMode::Subgraph);
    /// 1 <= min(s, t); sides are reordered so that s <= t.
    static ForbiddenPattern complete_bipartite(int s, int t, PatternMode mode = PatternMode::Subgraph);

    Kind kind() const { return kind_; }
    PatternMode mode() const { return mode_; }
    bool induced() const { return mode_ == PatternMode::Induced; }
    /// Cycle length (cycles only).
    int length() const { return a_; }
    /// Smaller and larger side (complete bipartite only).
    int s() const { return a_; }
    int t() const { return b_; }
    int vertex_count() const { return kind_ == Kind::Cycle ? a_ : a_ + b_; }

    /// "C5", "K2,3", "K2,2-ind".
    std::string to_string() const;

    friend bool operator==(const ForbiddenPattern&, const ForbiddenPattern&) = default;
    friend auto operator<=>(const ForbiddenPattern&, const ForbiddenPattern&) = default;

private:
    ForbiddenPattern(Kind k, int a, int b, PatternMode m) : kind_(k), a_(a), b_(b), mode_(m) {}

    Kind kind_;
    int a_;
    int b_;
    PatternMode mode_;
};

/// Nonempty list of forbidden patterns; duplicates collapse, first occurrence wins.
class FamilySpec {
public:
    explicit FamilySpec(std::vector<ForbiddenPattern> patterns);

    const std::vector<ForbiddenPattern>& patterns() const { return patterns_; }
    bool contains(const ForbiddenPattern& p) const;

    /// Patterns in list order, ';'-separated.
    std::string to_string() const;
    /// Patterns in sorted order, ';'-separated; used as a cache key.
    std::string canonical_string() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    std::vector<ForbiddenPattern> patterns_;
};

class FamilyParseError : public std::invalid_argument {
public:
    FamilyParseError(std::size_t position, std::string expected, const std::string& input);
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// Grammar accepted by parse_family.
inline constexpr std::string_view kFamilyGrammar =
    "family  := term (sep term)*\n"
    "sep     := ';' | ','\n"
    "term    := ('C' INT | 'K' INT ',' INT) ['-ind']\n"
    "examples: C5;K2,2-ind   C3;C5;K2,2   C4   C7;K2,2-ind";

FamilySpec parse_family(std::string_view text);

/// Vertices realising a pattern: the cycle in order, or the s-side then the t-side.
struct Witness {
    ForbiddenPattern pattern;
    std::vector<Vertex> vertices;

    std::string to_string() const;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Least witness: the cycle's vertex sequence is lexicographically least among all
/// rotations and reflections of all copies.
std::optional<Witness> contains_cycle_of_length(const SimpleGraph& g, int length,
                                                PatternMode mode = PatternMode::Subgraph);
/// Least (A, B): A is the lexicographically first s-set admitting a t-set B.
std::optional<Witness> contains_kst(const SimpleGraph& g, int s, int t);
std::optional<Witness> contains_induced_kst(const SimpleGraph& g, int s, int t);
std::optional<Witness> find_pattern(const SimpleGraph& g, const ForbiddenPattern& p);

/// First violation in pattern order, or nullopt when the graph is free of the family.
std::optional<Witness> is_family_free(const SimpleGraph& g, const FamilySpec& family);

/// True when the listed vertices realise the pattern in `g`.
bool validate_witness(const SimpleGraph& g, const Witness& w);

struct CodegreeResult {
    int count = 0;
    std::optional<std::pair<Vertex, Vertex>> pair;
};

/// Largest common-neighbourhood size over non-adjacent pairs; ties go to the least pair.
CodegreeResult max_codegree_nonadjacent(const SimpleGraph& g);
/// Largest common-neighbourhood size over all pairs.
CodegreeResult max_codegree(const SimpleGraph& g);

long long count_triangles(const SimpleGraph& g);
/// Least triangle (a < b < c), if any.
std::optional<std::array<Vertex, 3>> find_triangle(const SimpleGraph& g);

/// True if the graph has a (not necessarily induced) path on `vertices` vertices.
bool has_path_on(const SimpleGraph& g, int vertices);
/// Longest path vertex count, capped at `cap` (search stops once the cap is reached).
int longest_path_capped(const SimpleGraph& g, int cap);

}  // namespace turanlab
