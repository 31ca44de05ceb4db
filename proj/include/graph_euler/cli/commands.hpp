#ifndef GRAPH_EULER_CLI_COMMANDS_HPP
#define GRAPH_EULER_CLI_COMMANDS_HPP

#include "graph_euler/asymptotics.hpp"
#include "graph_euler/cli/cache.hpp"
#include "graph_euler/cli/report.hpp"
#include "graph_euler/euler.hpp"
#include "graph_euler/graph_oracle.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace graph_euler::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_consistency = 2, exit_cache_corrupt = 3 };

inline constexpr const char* default_cache_dir = ".graph-euler-cache";

/// Unusable arguments that CLI11 cannot reject on its own.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Session {
    SeriesCache cache;
    unsigned threads;
    std::ostream& out;
    std::ostream& err;
};

namespace detail {

// A sequence a_0..a_N cached as the series sum a_n u^{2n}; a longer cached
// sequence serves any shorter request.
template <class Compute>
std::vector<Rational> cached_sequence(Session& s, const std::string& name, std::int64_t max_index, Compute compute)
{
    if (auto hit = s.cache.load(name)) {
        try {
            if (hit->truncation().u_max && *hit->truncation().u_max >= 2 * max_index) {
                auto values = hbar_coefficients(*hit);
                values.resize(static_cast<std::size_t>(max_index) + 1);
                if (!values.empty() && values[0] == 1)
                    return values;
            }
        } catch (const std::invalid_argument&) {
        }
        if (hit->truncation().u_max && *hit->truncation().u_max >= 2 * max_index)
            s.err << "cache: " << name << " does not hold a sequence; recomputing\n";
    }
    auto values = compute();
    s.cache.store(name, hbar_series(values));
    return values;
}

} // namespace detail

inline std::vector<Rational> cached_e_hat(Session& s, std::int64_t max_index, Orientation orientation)
{
    return detail::cached_sequence(s, orientation == Orientation::even ? "ehat-even" : "ehat-odd", max_index,
                                   [&] { return e_hat_sequence(max_index, orientation, s.threads); });
}

inline std::vector<Rational> cached_chi_hat(Session& s, std::int64_t max_index)
{
    return detail::cached_sequence(s, "chihat", max_index, [&] { return chi_hat_all(max_index); });
}

/// Whatever prefix of e_hat the cache already holds (possibly just e_hat_0).
inline std::vector<Rational> cached_e_hat_prefix(Session& s)
{
    if (auto hit = s.cache.load("ehat-even")) {
        try {
            auto values = hbar_coefficients(*hit);
            if (!values.empty() && values[0] == 1)
                return values;
        } catch (const std::invalid_argument&) {
        }
    }
    return {};
}

inline int run_compute(Session& s, std::int64_t max_rank, const Kinds& kinds, Format format)
{
    if (max_rank < 2)
        throw UsageError("--max-n must be at least 2");
    const std::int64_t last = max_rank - 1;
    std::vector<ResultRow> rows(static_cast<std::size_t>(max_rank - 1));
    for (std::int64_t n = 2; n <= max_rank; ++n)
        rows[static_cast<std::size_t>(n - 2)].n = n;

    if (kinds.rational) {
        const auto chi_hat = cached_chi_hat(s, last);
        const auto chi = chi_out_from_chi_hat(chi_hat);
        std::vector<Rational> chi_logs = chi;
        chi_logs[0] = 0;
        if (hbar_exp(chi_logs) != chi_hat)
            throw ConsistencyError("exp of the chi series does not reproduce chi_hat");
        for (std::int64_t n = 1; n <= last; ++n)
            rows[static_cast<std::size_t>(n - 1)].chi = chi[static_cast<std::size_t>(n)];
    }
    if (kinds.integral) {
        const auto e_hat = cached_e_hat(s, last, Orientation::even);
        const auto e = e_out_from_e_hat(e_hat);
        if (e_hat_from_product_formula(e, static_cast<std::size_t>(last)) != e_hat)
            throw ConsistencyError("product formula does not reproduce e_hat");
        for (std::int64_t n = 2; n <= max_rank; ++n)
            rows[static_cast<std::size_t>(n - 2)].e = e[static_cast<std::size_t>(n)];
    }
    if (kinds.odd) {
        const auto e_hat = cached_e_hat(s, last, Orientation::odd);
        const auto e = e_out_odd_from_e_hat_odd(e_hat);
        if (e_hat_odd_from_product_formula(e, static_cast<std::size_t>(last)) != e_hat)
            throw ConsistencyError("odd product formula does not reproduce e_hat_odd");
        for (std::int64_t n = 2; n <= max_rank; ++n)
            rows[static_cast<std::size_t>(n - 2)].e_odd = e[static_cast<std::size_t>(n)];
    }
    s.out << format_results(rows, kinds, format);
    return exit_ok;
}

inline int run_oracle(Session& s, int max_chi, const std::string& census_path)
{
    if (max_chi < 1 || max_chi > 2)
        throw UsageError("--max-chi must be 1 or 2");
    const auto e_hat = cached_e_hat(s, max_chi, Orientation::even);
    const auto e_hat_odd = cached_e_hat(s, max_chi, Orientation::odd);
    const auto e_out = e_out_from_e_hat(e_hat);

    bool agree = true;
    auto report = [&](const std::string& what, const Rational& pipeline, const Rational& oracle) {
        const bool same = pipeline == oracle;
        agree = agree && same;
        s.out << what << ": pipeline " << to_string(pipeline) << ", oracle " << to_string(oracle)
              << (same ? "  ok" : "  MISMATCH") << "\n";
    };

    nlohmann::json census = nlohmann::json::array();
    for (int n = 1; n <= max_chi; ++n) {
        s.out << "chi = -" << n << "\n";
        report("  e_hat", e_hat[n], e_hat_oracle(n));
        report("  e_hat_odd", e_hat_odd[n], e_hat_odd_oracle(n));
        report("  e(Out F_" + std::to_string(n + 1) + ")", Rational(e_out[n + 1]), e_out_oracle(n));
        report("  e(Out F_" + std::to_string(n + 1) + ") from connected even classes", Rational(e_out[n + 1]),
               Rational(even_class_count(n, true)));
        report("  e_hat from even classes", e_hat[n], Rational(even_class_count(n, false)));

        const auto graphs = enumerate_graphs(-n);
        std::size_t connected = 0;
        for (auto& g : graphs)
            connected += g.connected() ? 1 : 0;
        const auto rows = census_json(-n);
        std::size_t even = 0;
        for (auto& r : rows)
            even += r["evenFlag"].get<bool>() ? 1 : 0;
        s.out << "  census: " << graphs.size() << " graphs (" << connected << " connected), " << rows.size()
              << " forested classes (" << even << " even)\n";
        for (auto& r : rows)
            census.push_back(r);
    }
    if (!census_path.empty()) {
        std::ofstream f(census_path);
        if (!f)
            throw UsageError("cannot write census to " + census_path);
        f << census.dump(2) << "\n";
    }
    return agree ? exit_ok : exit_consistency;
}

inline int run_asymptotics(Session& s, std::int64_t max_n, Format format)
{
    if (max_n < 1)
        throw UsageError("--max-n must be at least 1");
    const auto chi_hat = cached_chi_hat(s, max_n);
    auto e_hat = cached_e_hat_prefix(s);
    if (e_hat.size() > static_cast<std::size_t>(max_n) + 1)
        e_hat.resize(static_cast<std::size_t>(max_n) + 1);
    s.out << format_asymptotics(asymptotic_rows(max_n, chi_hat, e_hat), format);
    return exit_ok;
}

inline int run_crosscheck(Session& s, std::int64_t max_n)
{
    if (max_n < 0 || max_n > 6)
        throw UsageError("--max-n must lie in 0..6 for the crosscheck");
    const auto e_hat = cached_e_hat(s, max_n, Orientation::even);
    bool agree = true;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        const Rational other = e_hat_crosscheck(n);
        const bool same = other == e_hat[static_cast<std::size_t>(n)];
        agree = agree && same;
        s.out << "e_hat(" << n << "): forests " << to_string(e_hat[static_cast<std::size_t>(n)]) << ", legged forests "
              << to_string(other) << (same ? "  ok" : "  MISMATCH") << "\n";
    }
    return agree ? exit_ok : exit_consistency;
}

inline std::string cache_dir_default()
{
    if (const char* env = std::getenv("GRAPH_EULER_CACHE_DIR"); env && *env)
        return env;
    return default_cache_dir;
}

/// Parses the command line and runs one subcommand; returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Euler characteristics of Out(F_n) by exact generating-function computation", "graph_euler"};
    app.require_subcommand(1);

    std::string cache_dir = cache_dir_default();
    bool no_cache = false;
    unsigned threads = 1;
    std::string format_name = "md";
    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--cache-dir", cache_dir, "Directory for cached series")->capture_default_str();
        sub->add_flag("--no-cache", no_cache, "Neither read nor write the cache");
        sub->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
        if (with_format)
            sub->add_option("--format", format_name, "Output format")
                ->check(CLI::IsMember({"md", "csv", "json"}))
                ->capture_default_str();
    };

    std::int64_t compute_max = 0;
    std::vector<std::string> kinds_list{"rational", "integral", "odd"};
    auto* compute = app.add_subcommand("compute", "Tabulate chi, e and e_odd of Out(F_n) for 2 <= n <= max-n");
    compute->add_option("--max-n", compute_max, "Largest rank")->required();
    compute->add_option("--kind", kinds_list, "Columns: integral, rational, odd")
        ->delimiter(',')
        ->check(CLI::IsMember({"integral", "rational", "odd"}))
        ->capture_default_str();
    add_common(compute, true);

    int oracle_max_chi = 2;
    std::string census_path;
    auto* oracle = app.add_subcommand("oracle", "Compare the pipeline with brute-force graph enumeration");
    oracle->add_option("--max-chi", oracle_max_chi, "Largest |chi| to enumerate (1 or 2)")->capture_default_str();
    oracle->add_option("--census", census_path, "Write the forested-graph census as JSON to this file");
    add_common(oracle, false);

    std::int64_t asym_max = 30;
    auto* asym = app.add_subcommand("asymptotics", "Report B_n, L_n, P_n, partial sums and ratios");
    asym->add_option("--max-n", asym_max, "Largest n")->capture_default_str();
    add_common(asym, true);

    std::int64_t cross_max = 6;
    auto* cross = app.add_subcommand("crosscheck", "Compare e_hat with the legged-forest route (n <= 6)");
    cross->add_option("--max-n", cross_max, "Largest n (at most 6)")->capture_default_str();
    add_common(cross, false);

    std::vector<const char*> argv{"graph_euler"};
    for (auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        Session session{SeriesCache(cache_dir, !no_cache, err), threads, out, err};
        const Format format = parse_format(format_name);
        if (compute->parsed()) {
            Kinds kinds;
            for (auto& k : kinds_list) {
                kinds.rational |= k == "rational";
                kinds.integral |= k == "integral";
                kinds.odd |= k == "odd";
            }
            return run_compute(session, compute_max, kinds, format);
        }
        if (oracle->parsed())
            return run_oracle(session, oracle_max_chi, census_path);
        if (asym->parsed())
            return run_asymptotics(session, asym_max, format);
        if (cross->parsed())
            return run_crosscheck(session, cross_max);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CacheCorruption& e) {
        err << "error: " << e.what() << "\n";
        return exit_cache_corrupt;
    } catch (const IntegralityError& e) {
        err << "integrality failure: " << e.what() << "\n";
        return exit_consistency;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return exit_consistency;
    }
    return exit_usage;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace graph_euler::cli

#endif
