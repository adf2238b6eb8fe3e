// arcsid — batch verifier for exact binomial/Catalan identities built on
// truncated arcsine power series.
//
// Exit codes: 0 = every requested check passed; 1 = at least one identity
// refuted (first counterexample reported); 2 = usage, parse, or IO error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arcsid/arcsid.hpp"

namespace {

struct SweepFlags {
    long long n_lo = 0;
    long long n_hi = 0;
    std::string report_path;
    std::string format = "json";
    int jobs = -1;  // -1: not given on the command line
    bool keep_going = false;
};

// "lo..hi" inclusive; a single integer means lo = hi.
std::pair<long long, long long> parse_range(const std::string& text) {
    auto parse_int = [&](const std::string& s) -> long long {
        std::size_t used = 0;
        long long v;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid range '" + text + "'");
        }
        if (used != s.size() || s.empty()) {
            throw std::invalid_argument("invalid range '" + text + "'");
        }
        return v;
    };
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        long long v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

int resolve_jobs(int cli_jobs) {
    if (cli_jobs > 0) return cli_jobs;
    if (const char* env = std::getenv("ARCSID_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    return 1;
}

std::string row_label(const arcsid::VerifyReport& r) {
    if (r.form) return r.identity + "(" + *r.form + ")";
    return r.identity;
}

void print_summary(const arcsid::VerifyReport& r) {
    if (r.passed) {
        std::cout << row_label(r) << ": PASS (" << (r.n_hi - r.n_lo + 1) << " values)\n";
    } else {
        const auto& f = *r.first_failure;
        std::cout << row_label(r) << ": FAIL at n=" << f.n << ": lhs = " << f.lhs
                  << ", rhs = " << f.rhs << "\n";
    }
}

void write_report(const std::vector<arcsid::VerifyReport>& reports,
                  const std::string& path, const std::string& format) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report file '" + path + "'");
    if (format == "csv") {
        out << arcsid::reports_to_csv(reports);
    } else {
        out << arcsid::reports_to_json(reports).dump(2) << "\n";
    }
    out.flush();
    if (!out) throw std::runtime_error("cannot write report file '" + path + "'");
}

// Run rows (id, form) in order, stopping after the first refuted row unless
// keep_going. Returns the process exit code.
int run_rows(const std::vector<std::pair<std::string, arcsid::Form>>& rows,
             const SweepFlags& flags) {
    arcsid::VerifyOptions opts;
    opts.jobs = resolve_jobs(flags.jobs);

    std::vector<arcsid::VerifyReport> reports;
    bool any_fail = false;
    for (const auto& [id, form] : rows) {
        arcsid::VerifyReport r =
            arcsid::verify_range(id, form, flags.n_lo, flags.n_hi, opts);
        print_summary(r);
        bool failed = !r.passed;
        reports.push_back(std::move(r));
        if (failed) {
            any_fail = true;
            if (!flags.keep_going) break;
        }
    }
    write_report(reports, flags.report_path, flags.format);
    return any_fail ? 1 : 0;
}

int cmd_verify(const std::string& ids_arg, const std::string& form_arg,
               const SweepFlags& flags) {
    std::vector<std::pair<std::string, arcsid::Form>> rows;
    std::stringstream ss(ids_arg);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (id.empty()) throw std::invalid_argument("empty identity id in --id list");
        const arcsid::IdentityInfo* info = arcsid::find_identity(id);
        if (!info) throw std::invalid_argument("unknown identity id '" + id + "'");
        if (!form_arg.empty()) {
            arcsid::Form f =
                form_arg == "printed" ? arcsid::Form::printed : arcsid::Form::corrected;
            rows.emplace_back(id, f);
        } else {
            for (arcsid::Form f : arcsid::default_forms(*info)) rows.emplace_back(id, f);
        }
    }
    if (rows.empty()) throw std::invalid_argument("no identity ids given");
    return run_rows(rows, flags);
}

int cmd_verify_file(const std::string& path, const SweepFlags& flags) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read identity file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();

    std::vector<arcsid::NamedIdentity> entries;
    try {
        entries = arcsid::parse_identity_file(buf.str());
    } catch (const arcsid::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    if (entries.empty()) {
        throw std::runtime_error("identity file '" + path + "' contains no identities");
    }

    arcsid::VerifyOptions opts;
    opts.jobs = resolve_jobs(flags.jobs);

    std::vector<arcsid::VerifyReport> reports;
    bool any_fail = false;
    for (const auto& entry : entries) {
        arcsid::VerifyReport r =
            arcsid::verify_ast(entry.ast, flags.n_lo, flags.n_hi, opts, entry.name);
        print_summary(r);
        bool failed = !r.passed;
        reports.push_back(std::move(r));
        if (failed) {
            any_fail = true;
            if (!flags.keep_going) break;
        }
    }
    write_report(reports, flags.report_path, flags.format);
    return any_fail ? 1 : 0;
}

int cmd_series(const std::string& name, long long order) {
    if (order < 1) throw std::invalid_argument("--order must be >= 1");
    arcsid::TruncSeries s =
        arcsid::series_by_name(name, static_cast<std::size_t>(order));
    for (std::size_t j = 0; j < s.order(); ++j) {
        std::cout << j << "\t" << arcsid::to_string(s.coeff(j)) << "\n";
    }
    return 0;
}

// Fixed battery over 0..300: every display that circulates with a misprint,
// in both its printed and corrected version, plus the displays that are
// correct as printed. The printed misprints are refuted with exact
// counterexamples, so this command exits 1 by design.
int cmd_errata(const SweepFlags& flags) {
    std::vector<std::pair<std::string, arcsid::Form>> rows = {
        {"raw3.1", arcsid::Form::printed},    {"raw3.1", arcsid::Form::corrected},
        {"raw3.2", arcsid::Form::printed},    {"raw3.3", arcsid::Form::printed},
        {"catalan_rw1", arcsid::Form::printed}, {"catalan_rw2", arcsid::Form::printed},
        {"catalan_rw3", arcsid::Form::printed}, {"catalan_rw3", arcsid::Form::corrected},
        {"catalan_rw4", arcsid::Form::printed}, {"catalan_rw4", arcsid::Form::corrected},
        {"catalan_rw5", arcsid::Form::printed}, {"catalan_rw5", arcsid::Form::corrected},
    };
    SweepFlags f = flags;
    f.n_lo = 0;
    f.n_hi = 300;
    f.keep_going = true;  // the point is the complete pass/fail table
    return run_rows(rows, f);
}

int cmd_consistency(long long order) {
    if (order < 0) throw std::invalid_argument("--order must be >= 8");
    auto reports = arcsid::catalog_consistency(static_cast<std::size_t>(order));
    bool any_fail = false;
    for (const auto& r : reports) {
        if (r.passed) {
            std::cout << r.identity << ": PASS (orders 0.." << r.n_hi << ")\n";
        } else {
            const auto& f = *r.first_failure;
            std::cout << r.identity << ": FAIL at power " << f.n << ": lhs = " << f.lhs
                      << ", rhs = " << f.rhs << "\n";
            any_fail = true;
        }
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact verifier for binomial and Catalan-number identities drawn from "
        "arcsine power series"};
    app.require_subcommand(1);

    std::string ids_arg, form_arg, range_arg, file_path, series_name;
    long long order = 0;
    SweepFlags flags;

    auto add_sweep_flags = [&](CLI::App* cmd, bool with_form) {
        cmd->add_option("--n", range_arg, "index range lo..hi (or single value)")
            ->required();
        if (with_form) {
            cmd->add_option("--form", form_arg, "printed or corrected")
                ->check(CLI::IsMember({"printed", "corrected"}));
        }
        cmd->add_option("--report", flags.report_path, "write a structured report here");
        cmd->add_option("--format", flags.format, "report format (default json)")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--jobs", flags.jobs, "worker threads (default $ARCSID_JOBS or 1)")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--keep-going", flags.keep_going,
                      "verify remaining identities after a refutation");
    };

    CLI::App* verify = app.add_subcommand("verify", "verify built-in identities");
    verify->add_option("--id", ids_arg, "identity id(s), comma-separated")->required();
    add_sweep_flags(verify, true);

    CLI::App* verify_file =
        app.add_subcommand("verify-file", "verify identities from a file");
    verify_file->add_option("path", file_path, "identity file, one identity per line")
        ->required();
    add_sweep_flags(verify_file, false);

    CLI::App* series = app.add_subcommand("series", "print series coefficients");
    series->add_option("name", series_name, "series name")->required();
    series->add_option("--order", order, "number of coefficients")->required();

    CLI::App* errata =
        app.add_subcommand("errata", "run the printed-vs-corrected battery");
    errata->add_option("--report", flags.report_path, "write a structured report here");
    errata->add_option("--format", flags.format, "report format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* consistency =
        app.add_subcommand("consistency", "cross-check the series catalog");
    consistency->add_option("--order", order, "truncation order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            auto [lo, hi] = parse_range(range_arg);
            flags.n_lo = lo;
            flags.n_hi = hi;
            return cmd_verify(ids_arg, form_arg, flags);
        }
        if (verify_file->parsed()) {
            auto [lo, hi] = parse_range(range_arg);
            flags.n_lo = lo;
            flags.n_hi = hi;
            return cmd_verify_file(file_path, flags);
        }
        if (series->parsed()) return cmd_series(series_name, order);
        if (errata->parsed()) return cmd_errata(flags);
        if (consistency->parsed()) return cmd_consistency(order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
