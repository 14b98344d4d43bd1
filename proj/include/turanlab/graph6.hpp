#pragma once

#include "turanlab/graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turanlab {

class Graph6Error : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, InvalidCharacter, Truncated, TrailingGarbage };

    Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Standard graph6: N(n) header then the upper triangle, column by column, packed
/// six bits per printable character (63..126).
std::string graph6_encode(const SimpleGraph& g);
/// Accepts an optional ">>graph6<<" prefix; a single trailing '\n' is tolerated.
SimpleGraph graph6_decode(std::string_view text);

/// One graph per line; blank lines are skipped.
std::vector<SimpleGraph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<SimpleGraph>& graphs);

}  // namespace turanlab
