#include "turanlab/cli.hpp"

#include "turanlab/canonical.hpp"
#include "turanlab/claims.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/exact.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace turanlab {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

// A bad argument detected after CLI11 parsing; reported like a parse error.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

struct Settings {
    std::string config_path;
    std::string cache_path;
    bool no_cache = false;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    int workers = 0;

    std::string family_text;
    std::string n_text;
    std::string input;
    std::string json_path;
    std::string csv_path;
    std::string output;

    std::string construction;
    int q = 0;
    int s = 0;
    int t = 0;
    int k = 0;
    int side = 1;
    std::string method = "branch_and_bound";
    std::string claims;
    bool cache_only = false;
    bool compare_oracle = false;
};

struct Resolved {
    std::optional<std::string> cache;
    SearchBudget budget;
    int workers = 1;
};

Resolved resolve(const Settings& s) {
    Config config;
    std::string config_path = s.config_path;
    if (config_path.empty())
        if (const char* env = std::getenv("TURANLAB_CONFIG")) config_path = env;
    if (!config_path.empty()) config = Config::load(config_path);

    Resolved r;
    if (!s.cache_path.empty())
        r.cache = s.cache_path;
    else if (const char* env = std::getenv("TURANLAB_CACHE"); env && *env)
        r.cache = env;
    else
        r.cache = config.cache;
    if (s.no_cache) r.cache.reset();

    if (s.budget_nodes > 0)
        r.budget.node_limit = s.budget_nodes;
    else
        r.budget.node_limit = config.budget_nodes;
    if (s.budget_secs > 0)
        r.budget.seconds_limit = s.budget_secs;
    else
        r.budget.seconds_limit = config.budget_secs;
    r.workers = s.workers > 0 ? s.workers : config.workers.value_or(1);
    if (r.workers < 1) throw UsageError("workers must be positive");
    r.budget.validate();
    return r;
}

FamilySpec family_of(const Settings& s) { return parse_family(s.family_text); }

std::pair<int, int> range_of(const Settings& s) {
    try {
        return parse_n_range(s.n_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<SimpleGraph> read_input(const Settings& s) {
    if (s.input == "-") {
        std::vector<SimpleGraph> out;
        std::string line;
        while (std::getline(std::cin, line))
            if (!trim(line).empty()) out.push_back(graph6_decode(trim(line)));
        return out;
    }
    return read_graph6_file(s.input);
}

int cmd_construct(const Settings& s, std::ostream& out) {
    ConstructionCertificate cert = [&] {
        if (s.construction == "bollobas-gyori") return bollobas_gyori_certificate(s.q, s.side);
        if (s.construction == "projective-plane") return projective_plane_certificate(s.q);
        if (s.construction == "furedi") return furedi_certificate(s.q, s.t > 0 ? s.t : 2);
        if (s.construction == "bipartite-furedi") return bipartite_furedi_certificate(s.q, s.t > 0 ? s.t : 2);
        throw UsageError("unknown construction '" + s.construction +
                         "' (bollobas-gyori, projective-plane, furedi, bipartite-furedi)");
    }();
    const auto g6 = graph6_encode(cert.graph);
    out << g6 << '\n' << cert.to_json().dump(2) << '\n';
    if (!s.output.empty()) write_text(s.output, g6 + "\n");
    if (!s.json_path.empty()) write_text(s.json_path, cert.to_json().dump(2) + "\n");
    return 0;
}

int cmd_check(const Settings& s, std::ostream& out) {
    const auto family = family_of(s);
    const auto graphs = read_input(s);
    auto results = nlohmann::json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        const auto w = is_family_free(g, family);
        out << "graph " << i << " n=" << g.n() << " m=" << g.m() << ": ";
        if (w)
            out << "NOT FREE, witness " << w->to_string() << '\n';
        else
            out << "free of " << family.to_string() << '\n';
        nlohmann::json j = {{"index", i}, {"n", g.n()}, {"m", g.m()}, {"free", !w}};
        if (w) j["witness"] = {{"pattern", w->pattern.to_string()}, {"vertices", w->vertices}};
        results.push_back(std::move(j));
    }
    if (!s.json_path.empty())
        write_text(s.json_path, nlohmann::json{{"family", family.to_string()}, {"graphs", results}}.dump(2) + "\n");
    return 0;
}

int cmd_exact(const Settings& s, std::ostream& out) {
    const auto family = family_of(s);
    const auto [lo, hi] = range_of(s);
    const auto r = resolve(s);
    std::optional<ResultsCache> cache;
    if (r.cache) cache.emplace(*r.cache);

    TableOptions options;
    options.workers = r.workers;
    options.cache = cache ? &*cache : nullptr;
    options.use_oracle = parse_search_method(s.method) == SearchMethod::Oracle;
    const auto table = extremal_table(lo, hi, family, r.budget, options);

    std::ostringstream csv;
    csv << "n,family,max_edges,exact,method,nodes,seconds,witness\n";
    auto rows = nlohmann::json::array();
    for (const auto& rec : table) {
        const auto g6 = graph6_encode(rec.witness);
        out << "n=" << rec.n << " ex=" << rec.max_edges << (rec.exact ? " exact" : " lower-bound") << " method="
            << to_string(rec.method) << " nodes=" << rec.nodes << " seconds=" << rec.seconds << " witness=" << g6 << '\n';
        csv << rec.n << ",\"" << family.to_string() << "\"," << rec.max_edges << ',' << (rec.exact ? 1 : 0) << ','
            << to_string(rec.method) << ',' << rec.nodes << ',' << rec.seconds << ',' << g6 << '\n';
        rows.push_back(rec.to_json());
    }
    if (!s.csv_path.empty()) write_text(s.csv_path, csv.str());
    if (!s.json_path.empty()) write_text(s.json_path, rows.dump(2) + "\n");
    return 0;
}

int cmd_verify(const Settings& s, std::ostream& out) {
    std::vector<std::string> names;
    if (s.claims.empty() || s.claims == "all") {
        names = claim_names();
    } else {
        std::stringstream ss(s.claims);
        for (std::string item; std::getline(ss, item, ',');) names.emplace_back(trim(item));
    }
    const int t = s.t > 0 ? s.t : 2;
    const int k = s.k > 0 ? s.k : 2;
    const auto graphs = read_input(s);

    bool violation = false;
    auto all = nlohmann::json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto reports = run_claims(graphs[i], t, k, names);
        std::map<std::string, std::map<Verdict, int>> tally;
        for (const auto& rep : reports) {
            ++tally[rep.claim][rep.verdict];
            violation |= rep.verdict == Verdict::Violation;
            auto j = rep.to_json();
            j["graph"] = i;
            all.push_back(std::move(j));
        }
        out << "graph " << i << " n=" << graphs[i].n() << " m=" << graphs[i].m() << '\n';
        for (const auto& name : names) {
            const auto& v = tally[name];
            const auto get = [&](Verdict x) { return v.contains(x) ? v.at(x) : 0; };
            out << "  " << name << ": " << get(Verdict::Holds) << " holds, " << get(Verdict::HypothesesNotMet)
                << " hypotheses not met, " << get(Verdict::Violation) << " violations\n";
        }
        for (const auto& rep : reports)
            if (rep.verdict == Verdict::Violation) out << "  VIOLATION " << rep.to_json().dump() << '\n';
    }
    if (!s.json_path.empty()) write_text(s.json_path, all.dump(2) + "\n");
    return violation ? 1 : 0;
}

int cmd_report(const Settings& s, std::ostream& out) {
    const auto family = family_of(s);
    const auto [lo, hi] = range_of(s);
    const auto r = resolve(s);
    std::optional<ResultsCache> cache;
    if (r.cache) cache.emplace(*r.cache);

    ReportOptions options;
    options.params = report_params_for(family);
    if (s.s > 0) options.params.s = s.s;
    if (s.t > 0) options.params.t = s.t;
    if (s.k > 0) options.params.k = s.k;
    options.budget = r.budget;
    options.table.workers = r.workers;
    options.table.cache = cache ? &*cache : nullptr;
    options.compute_exact = !s.cache_only;
    const auto rows = build_report(lo, hi, family, options);

    const auto csv = report_csv(rows);
    if (!s.csv_path.empty())
        write_text(s.csv_path, csv);
    if (!s.json_path.empty()) write_text(s.json_path, report_json(rows, options.params).dump(2) + "\n");
    if (s.csv_path.empty()) out << csv;
    return 0;
}

int cmd_bench(const Settings& s, std::ostream& out) {
    const auto family = family_of(s);
    const auto [lo, hi] = range_of(s);
    const auto r = resolve(s);
    using Clock = std::chrono::steady_clock;
    out << "n,ex,exact,nodes,seconds,nodes_per_second,oracle_seconds\n";
    std::optional<long long> previous;
    for (int n = lo; n <= hi; ++n) {
        SearchOptions opts;
        opts.workers = r.workers;
        opts.previous_exact = previous;
        const auto start = Clock::now();
        const auto rec = branch_and_bound_ex(n, family, r.budget, opts);
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        previous = rec.exact ? std::optional<long long>(rec.max_edges) : std::nullopt;
        out << n << ',' << rec.max_edges << ',' << (rec.exact ? 1 : 0) << ',' << rec.nodes << ',' << secs << ','
            << (secs > 0 ? static_cast<double>(rec.nodes) / secs : 0.0) << ',';
        if (s.compare_oracle && n <= kOracleMaxVertices) {
            const auto o_start = Clock::now();
            const auto oracle = brute_force_ex(n, family);
            out << std::chrono::duration<double>(Clock::now() - o_start).count();
            if (rec.exact && oracle.max_edges != rec.max_edges)
                throw std::runtime_error("oracle disagrees at n=" + std::to_string(n));
        }
        out << '\n';
    }
    return 0;
}

void print_usage_extra(std::ostream& err) {
    err << "\nFamily grammar (--family):\n" << kFamilyGrammar << "\n";
    err << "Ranges (--n): a..b or a, with 1 <= a <= b\n";
}

}  // namespace

Config Config::parse(std::string_view text) {
    Config c;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const auto where = "config line " + std::to_string(line_no);
        if (eq == std::string_view::npos) throw std::invalid_argument(where + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (value.empty()) throw std::invalid_argument(where + ": empty value");
        try {
            if (key == "cache")
                c.cache = std::string(value);
            else if (key == "budget_nodes")
                c.budget_nodes = parse_number<std::uint64_t>(value, "budget_nodes");
            else if (key == "budget_secs")
                c.budget_secs = std::stod(std::string(value));
            else if (key == "workers")
                c.workers = parse_number<int>(value, "workers");
            else
                throw std::invalid_argument("unknown key '" + std::string(key) + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + ": " + e.what());
        }
    }
    return c;
}

Config Config::load(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::pair<int, int> parse_n_range(std::string_view text) {
    text = trim(text);
    const auto dots = text.find("..");
    const int lo = parse_number<int>(dots == std::string_view::npos ? text : text.substr(0, dots), "range start");
    const int hi = dots == std::string_view::npos ? lo : parse_number<int>(text.substr(dots + 2), "range end");
    if (lo < 1 || lo > hi) throw std::invalid_argument("range must satisfy 1 <= a <= b, got '" + std::string(text) + "'");
    return {lo, hi};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Turán numbers, extremal constructions and proof-claim checks", "turanlab"};
    app.require_subcommand(1);

    const auto add_search = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", s.budget_nodes, "node limit per search")->check(CLI::PositiveNumber);
        sub->add_option("--budget-secs", s.budget_secs, "time limit per search (seconds)")->check(CLI::PositiveNumber);
        sub->add_option("--workers", s.workers, "search threads")->check(CLI::PositiveNumber);
        sub->add_option("--config", s.config_path, "key = value config file");
    };
    const auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache", s.cache_path, "results cache (JSON lines)");
        sub->add_flag("--no-cache", s.no_cache, "ignore any configured cache");
    };

    auto* construct = app.add_subcommand("construct", "build and certify a construction; prints graph6 and JSON");
    construct->add_option("name", s.construction, "bollobas-gyori | projective-plane | furedi | bipartite-furedi")
        ->required();
    construct->add_option("--q", s.q, "field order")->required();
    construct->add_option("--t", s.t, "K2,t parameter (furedi variants)");
    construct->add_option("--side", s.side, "doubled colour class (bollobas-gyori)")->check(CLI::Range(0, 1));
    construct->add_option("--output", s.output, "write graph6 here");
    construct->add_option("--json", s.json_path, "write the certificate here");

    auto* check = app.add_subcommand("check", "test graphs for forbidden patterns");
    check->add_option("--family", s.family_text, "forbidden family")->required();
    check->add_option("--input", s.input, "graph6 file, one graph per line ('-' for stdin)")->required();
    check->add_option("--json", s.json_path, "write results here");

    auto* exact = app.add_subcommand("exact", "exact Turán numbers over a range of n");
    exact->add_option("--family", s.family_text, "forbidden family")->required();
    exact->add_option("--n", s.n_text, "range a..b")->required();
    exact->add_option("--method", s.method, "branch_and_bound | oracle")
        ->check(CLI::IsMember({"branch_and_bound", "oracle"}));
    exact->add_option("--csv", s.csv_path, "write CSV here");
    exact->add_option("--json", s.json_path, "write records here");
    add_search(exact);
    add_cache(exact);

    auto* verify = app.add_subcommand("verify-claims", "run the proof-claim verifiers on graphs");
    verify->add_option("--input", s.input, "graph6 file ('-' for stdin)")->required();
    verify->add_option("--t", s.t, "K2,t parameter (default 2)")->check(CLI::Range(2, 1000));
    verify->add_option("--k", s.k, "odd cycle C_{2k+1} parameter (default 2)")->check(CLI::Range(2, 1000));
    verify->add_option("--claims", s.claims, "comma-separated claim names or 'all'");
    verify->add_option("--json", s.json_path, "write every report here");

    auto* report = app.add_subcommand("report", "compare exact values, constructions and bound formulas");
    report->add_option("--family", s.family_text, "forbidden family")->required();
    report->add_option("--n", s.n_text, "range a..b")->required();
    report->add_option("--s", s.s, "override s of the main bound")->check(CLI::Range(2, 1000));
    report->add_option("--t", s.t, "override t of the bounds")->check(CLI::Range(2, 1000));
    report->add_option("--k", s.k, "override k of the LTT bound")->check(CLI::Range(2, 1000));
    report->add_option("--csv", s.csv_path, "write CSV here instead of stdout");
    report->add_option("--json", s.json_path, "write JSON here");
    report->add_flag("--cache-only", s.cache_only, "take exact values from the cache without searching");
    add_search(report);
    add_cache(report);

    auto* bench = app.add_subcommand("bench", "time the branch and bound over a range of n");
    bench->add_option("--family", s.family_text, "forbidden family")->required();
    bench->add_option("--n", s.n_text, "range a..b")->required();
    bench->add_flag("--compare-oracle", s.compare_oracle, "also time the exhaustive oracle (n <= 9)");
    add_search(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        print_usage_extra(err);
        return 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(s, out);
        if (check->parsed()) return cmd_check(s, out);
        if (exact->parsed()) return cmd_exact(s, out);
        if (verify->parsed()) return cmd_verify(s, out);
        if (report->parsed()) return cmd_report(s, out);
        if (bench->parsed()) return cmd_bench(s, out);
    } catch (const FamilyParseError& e) {
        err << "error: " << e.what() << '\n';
        print_usage_extra(err);
        return 2;
    } catch (const Graph6Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        print_usage_extra(err);
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace turanlab
