#include "turanlab/graph6.hpp"

#include <fstream>

namespace turanlab {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void encode_size(std::string& out, int n) {
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    // n <= 2^16 always fits the 18-bit form.
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
}

int sextet(char c, std::size_t pos) {
    if (c < 63 || c > 126)
        throw Graph6Error(Graph6Error::Kind::InvalidCharacter,
                          "graph6: byte " + std::to_string(static_cast<unsigned char>(c)) + " at offset " +
                              std::to_string(pos) + " is outside 63..126");
    return c - kBias;
}

}  // namespace

std::string graph6_encode(const SimpleGraph& g) {
    const int n = g.n();
    std::string out;
    encode_size(out, n);
    int acc = 0;
    int nbits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

SimpleGraph graph6_decode(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = sextet(text[0], 0);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126)
            throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: 36-bit size form exceeds the supported vertex count");
        if (text.size() < 4)
            throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: size header truncated");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(text[k], k);
        pos = 4;
        if (n < 63) throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: non-minimal size header");
        if (n > kMaxVertices)
            throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: vertex count " + std::to_string(n) + " exceeds limit");
    }

    const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    const std::size_t body = text.size() - pos;
    for (std::size_t k = pos; k < text.size() && k < pos + nbytes; ++k) sextet(text[k], k);
    if (body < nbytes)
        throw Graph6Error(Graph6Error::Kind::Truncated, "graph6: expected " + std::to_string(nbytes) +
                                                            " data bytes, found " + std::to_string(body));
    if (body > nbytes)
        throw Graph6Error(Graph6Error::Kind::TrailingGarbage,
                          "graph6: " + std::to_string(body - nbytes) + " unexpected trailing bytes");

    SimpleGraph g(static_cast<int>(n));
    long long bit = 0;
    Vertex i = 0;
    Vertex j = 1;
    for (std::size_t k = 0; k < nbytes; ++k) {
        const int s = sextet(text[pos + k], pos + k);
        for (int b = 5; b >= 0 && bit < nbits; --b, ++bit) {
            if ((s >> b) & 1) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

std::vector<SimpleGraph> read_graph6_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<SimpleGraph>& graphs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace turanlab
