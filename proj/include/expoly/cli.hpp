#ifndef EXPOLY_CLI_HPP
#define EXPOLY_CLI_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expoly/family.hpp"
#include "expoly/verify.hpp"

namespace expoly::cli {

inline constexpr std::uint32_t kMaxDegree = 64;

enum class ExitCode : int { ok = 0, verification_failure = 1, usage = 2 };

enum class Format { text, json };

struct CliConfig {
    std::string command;
    std::uint32_t n = 0;
    std::string suite = "all";
    Format format = Format::text;
    std::optional<std::uint32_t> ab_grid_max;
    std::vector<std::string> assignments;
    unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One unit of verification work.
struct Cell {
    IdentityId id;
    std::uint32_t n;
    std::optional<std::uint32_t> k;
    std::uint32_t grid_side;
};

inline std::vector<IdentityId> select_suites(const std::string& suite) {
    std::vector<IdentityId> ids;
    if (suite == "all") {
        for (const auto& spec : kCatalog) {
            if (!spec.literal) ids.push_back(spec.id);
        }
        return ids;
    }
    const auto id = identity_from_name(suite);
    if (!id) throw UsageError("unknown suite '" + suite + "'");
    ids.push_back(*id);
    return ids;
}

/// Cells in report order: catalog order, then n, then k.
inline std::vector<Cell> plan_cells(const std::vector<IdentityId>& ids, std::uint32_t n_max,
                                    std::optional<std::uint32_t> grid_side) {
    std::vector<Cell> cells;
    for (IdentityId id : ids) {
        const auto& spec = identity_spec(id);
        for (std::uint32_t n = spec.min_n; n <= n_max; ++n) {
            const std::uint32_t side = grid_side.value_or(ab_degree_bound(n) + 1);
            if (spec.uses_k) {
                for (std::uint32_t k = 0; k <= n; ++k) cells.push_back({id, n, k, side});
            } else {
                cells.push_back({id, n, std::nullopt, side});
            }
        }
    }
    return cells;
}

inline VerificationReport run_cell(const Cell& cell) {
    const auto& spec = identity_spec(cell.id);
    VerificationParams params{.n = cell.n, .k = cell.k};
    if (spec.uses_ab) params.ab_pairs = ab_grid(cell.grid_side);
    return verify(cell.id, params);
}

/// Runs every cell, spreading work over `jobs` threads; results keep cell order.
inline std::vector<VerificationReport> run_cells(const std::vector<Cell>& cells, unsigned jobs) {
    std::vector<VerificationReport> reports(cells.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(cells.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                reports[i] = run_cell(cells[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return reports;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json params;
    params["n"] = r.params.n;
    if (r.params.k) params["k"] = *r.params.k;
    if (!r.params.ab_pairs.empty()) params["ab_pairs"] = r.params.ab_pairs.size();
    if (r.grid_conclusive) params["grid_conclusive"] = *r.grid_conclusive;
    params["check"] = r.check;
    params["expected"] = expected_to_pass(r.identity_id, r.params.n) ? "pass" : "fail";

    nlohmann::ordered_json j;
    j["identity"] = std::string(identity_name(r.identity_id));
    j["n"] = r.params.n;
    j["params"] = std::move(params);
    j["passed"] = r.passed;
    j["lhs"] = r.lhs_text;
    j["rhs"] = r.rhs_text;
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    return j;
}

inline std::string_view outcome_tag(const VerificationReport& r) {
    const bool expected_pass = expected_to_pass(r.identity_id, r.params.n);
    if (r.passed) return expected_pass ? "PASS" : "XPASS";
    return expected_pass ? "FAIL" : "XFAIL";
}

inline void write_report_text(std::ostream& out, const VerificationReport& r) {
    out << outcome_tag(r) << ' ' << identity_name(r.identity_id) << " n=" << r.params.n;
    if (r.params.k) out << " k=" << *r.params.k;
    if (!r.params.ab_pairs.empty()) {
        out << " pairs=" << r.params.ab_pairs.size();
        if (r.grid_conclusive) out << (*r.grid_conclusive ? " conclusive" : " inconclusive");
    }
    out << '\n';
    if (!r.passed) {
        out << "  check: " << r.check << '\n';
        out << "  lhs: " << r.lhs_text << '\n';
        out << "  rhs: " << r.rhs_text << '\n';
        out << "  witness: " << r.witness.value_or("") << '\n';
    }
}

struct Tally {
    std::size_t passed = 0;
    std::size_t expected_failures = 0;
    std::size_t unexpected = 0;

    ExitCode exit_code() const { return unexpected == 0 ? ExitCode::ok : ExitCode::verification_failure; }
};

inline Tally tally_reports(const std::vector<VerificationReport>& reports) {
    Tally t;
    for (const auto& r : reports) {
        if (!meets_expectation(r)) {
            ++t.unexpected;
        } else if (r.passed) {
            ++t.passed;
        } else {
            ++t.expected_failures;
        }
    }
    return t;
}

inline ExitCode run_table(std::uint32_t n_max, Format format, std::ostream& out) {
    if (format == Format::json) {
        auto rows = nlohmann::ordered_json::array();
        for (std::uint32_t n = 0; n <= n_max; ++n) {
            rows.push_back({{"n", n}, {"poly", closed_form(n).to_string()}, {"number", number(n).to_string()}});
        }
        out << rows.dump(2) << '\n';
    } else {
        for (std::uint32_t n = 0; n <= n_max; ++n) {
            out << n << " | " << closed_form(n) << " | " << number(n) << '\n';
        }
    }
    return ExitCode::ok;
}

inline ExitCode run_coeff(std::uint32_t n, Format format, std::ostream& out) {
    const MultiPoly egf = via_gf(n);
    const MultiPoly closed = closed_form(n);
    const bool equal = egf == closed;
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["egf"] = egf.to_string();
        j["closed"] = closed.to_string();
        j["equal"] = equal;
        out << j.dump(2) << '\n';
    } else {
        out << n << " | " << egf << " | " << closed << " | " << (equal ? "equal" : "differ") << '\n';
    }
    return equal ? ExitCode::ok : ExitCode::verification_failure;
}

inline ExitCode run_expand(std::uint32_t n, const std::vector<std::string>& assignments, std::ostream& out) {
    Substitution sigma;
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw UsageError("assignment '" + a + "' is not of the form var=value");
        const std::string var = a.substr(0, eq);
        Rational value;
        try {
            value = Rational::parse(a.substr(eq + 1));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        if (var == "l") {
            sigma.lambda = MultiPoly(value);
        } else if (var == "x") {
            sigma.x = MultiPoly(value);
        } else {
            throw UsageError("unknown variable '" + var + "' (expected l or x)");
        }
    }
    out << closed_form_at(n, sigma) << '\n';
    return ExitCode::ok;
}

inline ExitCode run_verify(const CliConfig& config, std::ostream& out) {
    const auto ids = select_suites(config.suite);
    if (config.ab_grid_max && *config.ab_grid_max == 0) throw UsageError("--ab-grid-max must be positive");
    const auto cells = plan_cells(ids, config.n, config.ab_grid_max);
    const auto reports = run_cells(cells, config.jobs);

    const Tally tally = tally_reports(reports);

    if (config.format == Format::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& r : reports) write_report_text(out, r);
        out << "summary: " << reports.size() << " reports, " << tally.passed << " passed, "
            << tally.expected_failures << " expected failures, " << tally.unexpected << " unexpected\n";
    }
    return tally.exit_code();
}

/// Parses `args` (without the program name) and runs the command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and identity verification for E_n(l:x) = l*(x-l)^n", "expoly"};
    app.require_subcommand(1);

    CliConfig config;
    std::string format = "text";
    const auto degree_check = CLI::Range(0U, kMaxDegree);
    const auto format_check = CLI::IsMember({"text", "json"});

    auto* table = app.add_subcommand("table", "Print E_n(l:x) and E_n(l) for n = 0..n-max");
    table->add_option("--n-max", config.n, "Largest degree")->required()->check(degree_check);
    table->add_option("--format", format, "text or json")->check(format_check);

    auto* coeff = app.add_subcommand("coeff", "Compare the generating-function and closed-form routes");
    coeff->add_option("--n", config.n, "Degree")->required()->check(degree_check);
    coeff->add_option("--format", format, "text or json")->check(format_check);

    auto* expand = app.add_subcommand("expand", "Print E_n(l:x) with optional exact values for l and x");
    expand->add_option("--n", config.n, "Degree")->required()->check(degree_check);
    expand->add_option("--set", config.assignments, "var=value with var in {l, x}, value p or p/q");

    auto* verify_cmd = app.add_subcommand("verify", "Run identity suites for n = 0..n-max");
    std::string suite_help = "'all' (every corrected suite) or one of:";
    for (const auto& spec : kCatalog) suite_help += std::string(" ") + std::string(spec.name);
    verify_cmd->add_option("--suite", config.suite, suite_help);
    verify_cmd->add_option("--n-max", config.n, "Largest degree")->required()->check(degree_check);
    verify_cmd->add_option("--ab-grid-max", config.ab_grid_max, "Side of the (a,b) grid (default 4n+3)");
    verify_cmd->add_option("--format", format, "text or json")->check(format_check);
    config.jobs = std::max(1U, std::thread::hardware_concurrency());
    verify_cmd->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("expoly");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return static_cast<int>(ExitCode::usage);
    }
    config.format = format == "json" ? Format::json : Format::text;

    try {
        ExitCode code = ExitCode::ok;
        if (*table) {
            config.command = "table";
            code = run_table(config.n, config.format, out);
        } else if (*coeff) {
            config.command = "coeff";
            code = run_coeff(config.n, config.format, out);
        } else if (*expand) {
            config.command = "expand";
            code = run_expand(config.n, config.assignments, out);
        } else {
            config.command = "verify";
            code = run_verify(config, out);
        }
        return static_cast<int>(code);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return static_cast<int>(ExitCode::usage);
    }
}

}  // namespace expoly::cli

#endif
