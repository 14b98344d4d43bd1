#include "turanlab/exact.hpp"

#include "turanlab/graph6.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <system_error>

namespace turanlab {

std::string to_string(SearchMethod method) {
    return method == SearchMethod::Oracle ? "oracle" : "branch_and_bound";
}

SearchMethod parse_search_method(std::string_view text) {
    if (text == "oracle") return SearchMethod::Oracle;
    if (text == "branch_and_bound") return SearchMethod::BranchAndBound;
    throw std::invalid_argument("unknown search method \"" + std::string(text) + "\"");
}

bool ExtremalRecord::same_result(const ExtremalRecord& other) const {
    return n == other.n && family == other.family && max_edges == other.max_edges && witness == other.witness &&
           method == other.method && exact == other.exact;
}

nlohmann::json ExtremalRecord::to_json() const {
    return {{"engine_version", kEngineVersion},
            {"n", n},
            {"family", family.canonical_string()},
            {"max_edges", max_edges},
            {"witness", graph6_encode(witness)},
            {"method", to_string(method)},
            {"exact", exact},
            {"nodes", nodes},
            {"seconds", seconds}};
}

ExtremalRecord ExtremalRecord::from_json(const nlohmann::json& j) {
    ExtremalRecord r{
        .n = j.at("n").get<int>(),
        .family = parse_family(j.at("family").get<std::string>()),
        .max_edges = j.at("max_edges").get<long long>(),
        .witness = graph6_decode(j.at("witness").get<std::string>()),
        .method = parse_search_method(j.at("method").get<std::string>()),
        .exact = j.at("exact").get<bool>(),
        .nodes = j.value("nodes", std::uint64_t{0}),
        .seconds = j.value("seconds", 0.0),
    };
    if (r.witness.n() != r.n || r.witness.m() != r.max_edges)
        throw std::invalid_argument("record witness does not match n and max_edges");
    return r;
}

void SearchBudget::validate() const {
    if (node_limit && *node_limit == 0) throw std::invalid_argument("node limit must be positive");
    if (seconds_limit && !(*seconds_limit > 0)) throw std::invalid_argument("time limit must be positive");
    if (initial_lower_bound && *initial_lower_bound < 0) throw std::invalid_argument("lower bound must be nonnegative");
}

ResultsCache::ResultsCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

void ResultsCache::load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            if (j.value("engine_version", 0) != kEngineVersion) continue;
            records_.push_back(ExtremalRecord::from_json(j));
        } catch (const std::exception&) {
            // A torn or foreign line; later lines are still usable.
        }
    }
}

std::optional<ExtremalRecord> ResultsCache::lookup(int n, const FamilySpec& family) const {
    const auto key = family.canonical_string();
    const ExtremalRecord* best = nullptr;
    for (const auto& r : records_) {
        if (r.n != n || r.family.canonical_string() != key) continue;
        if (!best || (r.exact && !best->exact) || (r.exact == best->exact && r.max_edges > best->max_edges)) best = &r;
    }
    if (!best) return std::nullopt;
    auto out = *best;
    out.family = family;
    return out;
}

void ResultsCache::store(const ExtremalRecord& record) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) throw std::system_error(errno, std::generic_category(), "open " + path_.string());
    const std::string line = record.to_json().dump() + "\n";
    int rc = ::flock(fd, LOCK_EX);
    std::size_t written = 0;
    while (rc == 0 && written < line.size()) {
        const auto w = ::write(fd, line.data() + written, line.size() - written);
        if (w < 0) {
            if (errno == EINTR) continue;
            rc = -1;
            break;
        }
        written += static_cast<std::size_t>(w);
    }
    const int saved = errno;
    ::flock(fd, LOCK_UN);
    ::close(fd);
    if (rc != 0) throw std::system_error(saved, std::generic_category(), "append " + path_.string());
    records_.push_back(record);
}

std::vector<ExtremalRecord> extremal_table(int n_lo, int n_hi, const FamilySpec& family, const SearchBudget& budget,
                                           const TableOptions& options) {
    std::vector<ExtremalRecord> out;
    if (n_lo > n_hi) return out;
    if (n_lo < 0) throw std::invalid_argument("vertex counts must be nonnegative");
    budget.validate();

    std::optional<ExtremalRecord> previous;
    if (options.cache && n_lo > 0) previous = options.cache->lookup(n_lo - 1, family);
    for (int n = n_lo; n <= n_hi; ++n) {
        std::optional<ExtremalRecord> cached = options.cache ? options.cache->lookup(n, family) : std::nullopt;
        if (cached && cached->exact) {
            out.push_back(*cached);
            previous = cached;
            continue;
        }

        ExtremalRecord record = [&] {
            if (options.use_oracle && n <= kOracleMaxVertices) return brute_force_ex(n, family);
            SearchOptions search;
            search.workers = options.workers;
            if (previous && previous->exact) search.previous_exact = previous->max_edges;
            // Lower-bound seeds: the previous witness plus an isolated vertex, or an inexact cached result.
            if (previous && previous->n == n - 1) {
                SimpleGraph g(n);
                for (auto [a, b] : previous->witness.edges()) g.add_edge(a, b);
                search.seed = std::move(g);
            }
            if (cached && (!search.seed || cached->max_edges > search.seed->m())) search.seed = cached->witness;
            return branch_and_bound_ex(n, family, budget, search);
        }();
        if (options.cache) options.cache->store(record);
        out.push_back(record);
        previous = std::move(record);
    }
    return out;
}

}  // namespace turanlab
