#include "turanlab/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace turanlab {

ForbiddenPattern ForbiddenPattern::cycle(int length, PatternMode mode) {
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3, got " + std::to_string(length));
    return ForbiddenPattern(Kind::Cycle, length, 0, mode);
}

ForbiddenPattern ForbiddenPattern::complete_bipartite(int s, int t, PatternMode mode) {
    if (s > t) std::swap(s, t);
    if (s < 1) throw std::invalid_argument("complete bipartite sides must be at least 1");
    return ForbiddenPattern(Kind::CompleteBipartite, s, t, mode);
}

std::string ForbiddenPattern::to_string() const {
    std::string out = kind_ == Kind::Cycle ? "C" + std::to_string(a_)
                                           : "K" + std::to_string(a_) + "," + std::to_string(b_);
    if (induced()) out += "-ind";
    return out;
}

FamilySpec::FamilySpec(std::vector<ForbiddenPattern> patterns) {
    if (patterns.empty()) throw std::invalid_argument("a family needs at least one pattern");
    for (auto& p : patterns)
        if (!contains(p)) patterns_.push_back(p);
}

bool FamilySpec::contains(const ForbiddenPattern& p) const {
    return std::find(patterns_.begin(), patterns_.end(), p) != patterns_.end();
}

std::string FamilySpec::to_string() const {
    std::string out;
    for (const auto& p : patterns_) {
        if (!out.empty()) out += ';';
        out += p.to_string();
    }
    return out;
}

std::string FamilySpec::canonical_string() const {
    auto sorted = patterns_;
    std::sort(sorted.begin(), sorted.end());
    return FamilySpec(std::move(sorted)).to_string();
}

FamilyParseError::FamilyParseError(std::size_t position, std::string expected, const std::string& input)
    : std::invalid_argument("family spec \"" + input + "\": at position " + std::to_string(position) + ": expected " +
                            expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class FamilyParser {
public:
    explicit FamilyParser(std::string_view text) : text_(text) {}

    FamilySpec parse() {
        std::vector<ForbiddenPattern> out;
        skip_space();
        if (at_end()) fail("'C' or 'K'");
        for (;;) {
            out.push_back(term());
            skip_space();
            if (at_end()) break;
            if (peek() != ';' && peek() != ',') fail("';' or ',' or end of input");
            ++pos_;
            skip_space();
        }
        return FamilySpec(std::move(out));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(std::string expected) const {
        throw FamilyParseError(pos_, std::move(expected), std::string(text_));
    }

    int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digit");
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000) fail("integer below 1000000");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    PatternMode mode_suffix() {
        if (peek() != '-') return PatternMode::Subgraph;
        ++pos_;
        if (text_.substr(pos_, 3) != "ind") fail("'ind'");
        pos_ += 3;
        return PatternMode::Induced;
    }

    ForbiddenPattern term() {
        const char head = peek();
        if (head == 'C') {
            ++pos_;
            const std::size_t at = pos_;
            const int length = integer();
            if (length < 3) {
                pos_ = at;
                fail("cycle length >= 3");
            }
            return ForbiddenPattern::cycle(length, mode_suffix());
        }
        if (head == 'K') {
            ++pos_;
            const std::size_t at = pos_;
            const int s = integer();
            if (peek() != ',') fail("','");
            ++pos_;
            const int t = integer();
            if (std::min(s, t) < 1) {
                pos_ = at;
                fail("side sizes >= 1");
            }
            return ForbiddenPattern::complete_bipartite(s, t, mode_suffix());
        }
        fail("'C' or 'K'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family(std::string_view text) { return FamilyParser(text).parse(); }

std::string Witness::to_string() const {
    std::string out = pattern.to_string() + " [";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += ' ';
        if (pattern.kind() == ForbiddenPattern::Kind::CompleteBipartite && i == static_cast<std::size_t>(pattern.s()))
            out += "| ";
        out += std::to_string(vertices[i]);
    }
    return out + "]";
}

}  // namespace turanlab
