#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turanlab {

/// `key = value` lines; '#' starts a comment. Keys: cache, budget_nodes, budget_secs, workers.
struct Config {
    std::optional<std::string> cache;
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_secs;
    std::optional<int> workers;

    /// Throws std::invalid_argument naming the offending line.
    static Config parse(std::string_view text);
    static Config load(const std::filesystem::path& path);
};

/// "a..b" or "a". Throws std::invalid_argument.
std::pair<int, int> parse_n_range(std::string_view text);

/// Exit codes: 0 success, 1 a claim VIOLATION, 2 usage or input error, 3 other failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace turanlab
