// iterate-census: enumerate n-iterates, dump tableaux and incidence matrices,
// count formally reducible identities, and tabulate asymptotic ratios.
//
// Exit codes: 0 success, 1 argument error, 2 resource limit, 3 consistency failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iterate_census.hpp"

namespace ic = iterate_census;

namespace {

constexpr const char* kVersion = "iterate-census 1.0.0";

enum ExitCode : int { kOk = 0, kArgument = 1, kResource = 2, kConsistency = 3 };

struct Config {
    int n = 0;
    std::vector<long> n_list;
    int max_n = 8;
    std::string mode = "both";
    std::string format;
    std::string tableau = "ab";
    std::string output;
    int enum_cap = ic::kDefaultEnumerationCap;
    std::optional<int> brute_cap;
    long closed_cap = ic::kDefaultClosedFormCap;
    unsigned workers = 1;
    bool extended = false;
    bool verbose = false;
};

unsigned default_workers() {
    if (const char* env = std::getenv("ITERATE_CENSUS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid ITERATE_CENSUS_THREADS='" << env << "'\n";
    }
    return 1;
}

int brute_cap(const Config& cfg) {
    if (cfg.brute_cap) return *cfg.brute_cap;
    return cfg.extended ? ic::kExtendedBruteForceCap : ic::kDefaultBruteForceCap;
}

std::vector<long> orders(const Config& cfg, const char* command) {
    if (!cfg.n_list.empty()) return cfg.n_list;
    if (cfg.n > 0) return {cfg.n};
    throw ic::ArgumentError(std::string(command) + ": one of --n or --n-list is required");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) return;
    }
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw ic::ArgumentError("unsupported --format '" + format + "' (expected one of " + list + ")");
}

std::string run_enumerate(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json", "csv"});
    const auto trees = ic::enumerate_iterates(cfg.n, cfg.enum_cap);
    if (format == "json") return ic::iterates_json(trees).dump(2) + "\n";
    if (format == "csv") return ic::iterates_csv(trees);
    std::ostringstream os;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        os << i + 1 << '\t' << trees[i].code_string() << '\t' << trees[i].word() << '\n';
    }
    return os.str();
}

std::string run_tableau(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    require_format(format, {"json", "text"});
    const auto t = ic::build_tableau(cfg.n, ic::parse_kind(cfg.tableau), {cfg.enum_cap, cfg.workers});
    if (format == "json") return ic::tableau_json(t).dump() + "\n";
    std::ostringstream os;
    for (int i = 1; i <= t.line_count(); ++i) {
        os << 'L' << i << ':';
        for (auto member : t.line(i).members) os << ' ' << member.word();
        os << '\n';
    }
    return os.str();
}

std::string run_matrix(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"csv", "json", "text"});
    const auto kind = ic::parse_kind(cfg.tableau);
    ic::detail::require(kind != ic::TableauKind::B, "matrix: --tableau must be a or ab");
    ic::detail::require_cap(cfg.n, ic::kIncidenceMatrixCap, "incidence matrix order");
    const auto t = ic::build_tableau(cfg.n, kind, {cfg.enum_cap, cfg.workers});
    const auto m = ic::incidence_matrix(t);
    if (format == "csv") return ic::matrix_csv(m);
    if (format == "json") return ic::matrix_json(cfg.n, kind, m).dump() + "\n";
    std::ostringstream os;
    long total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        long row = 0;
        os << 'J' << i + 1 << '\t';
        for (int v : m[i]) {
            os << v << ' ';
            row += v;
        }
        os << "| " << row << '\n';
        total += row;
    }
    os << "I = " << total << '\n';
    return os.str();
}

std::string run_census(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    require_format(format, {"json", "csv", "text"});
    const ic::CensusOptions opts{cfg.enum_cap, brute_cap(cfg), cfg.closed_cap, cfg.workers};
    const auto mode = ic::parse_mode(cfg.mode);
    std::vector<ic::CensusReport> reports;
    for (long n : orders(cfg, "census")) {
        reports.push_back(ic::run_census(static_cast<int>(n), mode, opts));
    }
    std::ostringstream os;
    if (format == "json") {
        if (cfg.n_list.empty()) {
            os << ic::census_json(reports.front()).dump(2) << '\n';
        } else {
            ic::Json all = ic::Json::array();
            for (const auto& r : reports) all.push_back(ic::census_json(r));
            os << all.dump(2) << '\n';
        }
    } else if (format == "csv") {
        os << ic::kCensusCsvHeader << '\n';
        for (const auto& r : reports) os << ic::census_csv_row(r) << '\n';
    } else {
        for (const auto& r : reports) os << ic::census_text(r);
    }
    return os.str();
}

std::string run_asymptote(const Config& cfg) {
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    require_format(format, {"csv", "json", "gnuplot"});
    std::vector<ic::AsymptoticRow> rows;
    for (long n : orders(cfg, "asymptote")) rows.push_back(ic::asymptotic_row(n, cfg.closed_cap));
    std::ostringstream os;
    if (format == "json") {
        ic::Json all = ic::Json::array();
        for (const auto& r : rows) all.push_back(ic::asymptotic_json(r));
        os << all.dump(2) << '\n';
    } else if (format == "gnuplot") {
        os << "# n exact_ratio\n";
        for (const auto& r : rows) os << ic::asymptotic_gnuplot_row(r) << '\n';
    } else {
        os << ic::kAsymptoticCsvHeader << '\n';
        for (const auto& r : rows) os << ic::asymptotic_csv_row(r) << '\n';
    }
    return os.str();
}

std::string run_verify(const Config& cfg, bool& all_passed) {
    ic::VerifyOptions opts;
    opts.max_n = cfg.max_n;
    opts.brute_cap = brute_cap(cfg);
    opts.enumeration_cap = cfg.enum_cap;
    opts.workers = cfg.workers;
    const auto results = ic::run_verification(opts);
    std::ostringstream os;
    all_passed = true;
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all_passed = all_passed && r.passed;
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    cfg.workers = default_workers();

    CLI::App app{"Exact census of formally reducible identities between n-iterates"};
    app.require_subcommand(1, 1);
    app.add_option("--workers", cfg.workers, "Worker threads (default: $ITERATE_CENSUS_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--enum-cap", cfg.enum_cap, "Largest order accepted for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--output,-o", cfg.output, "Write data to this file instead of stdout");
    app.add_flag("--verbose,-v", cfg.verbose, "Print version and timing to stderr");

    auto* enumerate = app.add_subcommand("enumerate", "List all n-iterates in canonical order");
    enumerate->add_option("--n", cfg.n, "Order")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--format", cfg.format, "text | json | csv");

    auto* tableau = app.add_subcommand("tableau", "Dump a tableau as JSON");
    tableau->add_option("--n", cfg.n, "Order")->required()->check(CLI::PositiveNumber);
    tableau->add_option("--tableau", cfg.tableau, "a | b | ab");
    tableau->add_option("--format", cfg.format, "json | text");

    auto* matrix = app.add_subcommand("matrix", "Incidence matrix of δ (n <= 6)");
    matrix->add_option("--n", cfg.n, "Order")->required()->check(CLI::PositiveNumber);
    matrix->add_option("--tableau", cfg.tableau, "a | ab");
    matrix->add_option("--format", cfg.format, "csv | json | text");

    auto* census = app.add_subcommand("census", "Count reducible identities");
    auto* census_n = census->add_option("--n", cfg.n, "Order")->check(CLI::PositiveNumber);
    census->add_option("--n-list", cfg.n_list, "Comma-separated orders")
        ->delimiter(',')
        ->excludes(census_n);
    census->add_option("--mode", cfg.mode, "brute | closed | both");
    census->add_option("--format", cfg.format, "json | csv | text");
    census->add_option("--brute-cap", cfg.brute_cap, "Largest order for brute force")
        ->check(CLI::PositiveNumber);
    census->add_option("--closed-cap", cfg.closed_cap, "Largest order for closed forms")
        ->check(CLI::PositiveNumber);
    census->add_flag("--extended", cfg.extended, "Raise the brute-force cap to 10");

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--max-n", cfg.max_n, "Largest order to check")->check(CLI::PositiveNumber);
    verify->add_flag("--extended", cfg.extended, "Raise the brute-force cap to 10");

    auto* asymptote = app.add_subcommand("asymptote", "Exact vs heuristic ratios");
    auto* asym_n = asymptote->add_option("--n", cfg.n, "Order")->check(CLI::PositiveNumber);
    asymptote->add_option("--n-list", cfg.n_list, "Comma-separated orders")
        ->delimiter(',')
        ->excludes(asym_n);
    asymptote->add_option("--format", cfg.format, "csv | json | gnuplot");
    asymptote->add_option("--closed-cap", cfg.closed_cap, "Largest order for closed forms")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kArgument;
    }

    const auto start = std::chrono::steady_clock::now();
    if (cfg.verbose) std::cerr << kVersion << '\n';

    int code = kOk;
    std::string data;
    try {
        if (*enumerate) {
            data = run_enumerate(cfg);
        } else if (*tableau) {
            data = run_tableau(cfg);
        } else if (*matrix) {
            data = run_matrix(cfg);
        } else if (*census) {
            data = run_census(cfg);
        } else if (*verify) {
            bool passed = false;
            data = run_verify(cfg, passed);
            if (!passed) code = kConsistency;
        } else if (*asymptote) {
            data = run_asymptote(cfg);
        }
    } catch (const ic::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kArgument;
    } catch (const ic::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kResource;
    } catch (const ic::ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return kConsistency;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kConsistency;
    }

    if (cfg.output.empty()) {
        std::cout << data;
        std::cout.flush();
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file '" << cfg.output << "'\n";
            return kArgument;
        }
        out << data;
    }

    if (cfg.verbose) {
        const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::cerr << "elapsed: " << elapsed.count() << " s\n";
    }
    return code;
}
