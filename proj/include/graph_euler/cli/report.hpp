#ifndef GRAPH_EULER_CLI_REPORT_HPP
#define GRAPH_EULER_CLI_REPORT_HPP

#include "graph_euler/asymptotics.hpp"
#include "graph_euler/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace graph_euler::cli {

enum class Format { md, csv, json };

inline Format parse_format(const std::string& s)
{
    if (s == "md")
        return Format::md;
    if (s == "csv")
        return Format::csv;
    if (s == "json")
        return Format::json;
    throw std::invalid_argument("unknown format '" + s + "'");
}

/// Which columns of the table to produce.
struct Kinds {
    bool rational = false;
    bool integral = false;
    bool odd = false;
};

/// One row of the output table, in the shape of the published table.
struct ResultRow {
    std::int64_t n = 0;
    std::optional<Rational> chi;
    std::optional<Integer> e;
    std::optional<Integer> e_odd;
};

inline nlohmann::json rational_json(const Rational& q)
{
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

inline std::string format_results(const std::vector<ResultRow>& rows, const Kinds& kinds, Format format)
{
    std::ostringstream out;
    if (format == Format::json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["n"] = r.n;
            if (kinds.rational)
                j["chi"] = rational_json(*r.chi);
            if (kinds.integral)
                j["e"] = r.e->get_str();
            if (kinds.odd)
                j["eOdd"] = r.e_odd->get_str();
            arr.push_back(std::move(j));
        }
        out << nlohmann::json{{"rows", std::move(arr)}}.dump(2) << "\n";
        return out.str();
    }

    std::vector<std::string> header{"n"};
    if (kinds.rational)
        header.emplace_back(format == Format::md ? "chi(Out F_n)" : "chi");
    if (kinds.integral)
        header.emplace_back(format == Format::md ? "e(Out F_n)" : "e");
    if (kinds.odd)
        header.emplace_back(format == Format::md ? "e_odd(Out F_n)" : "e_odd");

    auto emit = [&](const std::vector<std::string>& cells) {
        if (format == Format::md) {
            out << "|";
            for (auto& c : cells)
                out << " " << c << " |";
        } else {
            for (std::size_t i = 0; i < cells.size(); ++i)
                out << (i ? "," : "") << cells[i];
        }
        out << "\n";
    };
    emit(header);
    if (format == Format::md) {
        out << "|";
        for (std::size_t i = 0; i < header.size(); ++i)
            out << "---:|";
        out << "\n";
    }
    for (const auto& r : rows) {
        std::vector<std::string> cells{std::to_string(r.n)};
        if (kinds.rational)
            cells.push_back(to_string(*r.chi));
        if (kinds.integral)
            cells.push_back(r.e->get_str());
        if (kinds.odd)
            cells.push_back(r.e_odd->get_str());
        emit(cells);
    }
    return out.str();
}

/// Asymptotic rows plus the partial sums S_n and their odd analogue.
inline std::string format_asymptotics(const std::vector<AsymptoticRow>& rows, Format format)
{
    std::ostringstream out;
    auto opt_d = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(); };
    auto opt_q = [](const std::optional<Rational>& x) { return x ? to_string(*x) : std::string(); };

    if (format == Format::json) {
        nlohmann::json doc;
        doc["targets"] = {{"even", e_minus_quarter}, {"odd", e_plus_quarter}};
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["n"] = r.n;
            j["B"] = r.b ? nlohmann::json(*r.b) : nlohmann::json();
            j["L"] = r.l ? nlohmann::json(*r.l) : nlohmann::json();
            j["P"] = r.p ? rational_json(*r.p) : nlohmann::json();
            j["chiHat"] = r.chi_hat ? rational_json(*r.chi_hat) : nlohmann::json();
            j["eHat"] = r.e_hat ? rational_json(*r.e_hat) : nlohmann::json();
            j["S"] = rational_json(e14_partial_sum(r.n));
            j["SOdd"] = rational_json(e14_partial_sum_odd(r.n));
            j["SMinusTarget"] = to_double(e14_partial_sum(r.n)) - e_minus_quarter;
            j["eOverChi"] = r.ratio_e_over_chi ? nlohmann::json(*r.ratio_e_over_chi) : nlohmann::json();
            j["eOddOverChi"] = r.ratio_e_odd_over_chi ? nlohmann::json(*r.ratio_e_odd_over_chi) : nlohmann::json();
            j["conjectureResidual"] = r.conjecture_residual ? nlohmann::json(*r.conjecture_residual) : nlohmann::json();
            arr.push_back(std::move(j));
        }
        doc["rows"] = std::move(arr);
        out << doc.dump(2) << "\n";
        return out.str();
    }

    const std::string sep = format == Format::md ? " | " : ",";
    const std::string lead = format == Format::md ? "| " : "";
    const std::string tail = format == Format::md ? " |" : "";
    char even4[32], odd4[32];
    std::snprintf(even4, sizeof even4, "%.4f", e_minus_quarter);
    std::snprintf(odd4, sizeof odd4, "%.4f", e_plus_quarter);
    if (format == Format::md) {
        out << "target e^(-1/4) ~ " << even4 << " (" << format_double(e_minus_quarter) << ", even), e^(1/4) ~ " << odd4
            << " (" << format_double(e_plus_quarter) << ", odd)\n\n";
    } else {
        out << "# target_even," << even4 << "," << format_double(e_minus_quarter) << "\n";
        out << "# target_odd," << odd4 << "," << format_double(e_plus_quarter) << "\n";
    }
    const std::vector<std::string> header{"n", "B_n", "L_n", "P_n", "chi_hat_n", "e_hat_n", "S_n", "S_n - e^(-1/4)",
                                          "S_odd_n", "e/chi", "e_odd/chi", "conjecture_residual"};
    out << lead;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? sep : "") << header[i];
    out << tail << "\n";
    if (format == Format::md) {
        out << "|";
        for (std::size_t i = 0; i < header.size(); ++i)
            out << "---:|";
        out << "\n";
    }
    for (const auto& r : rows) {
        const Rational s = e14_partial_sum(r.n);
        const std::vector<std::string> cells{std::to_string(r.n),
                                             opt_d(r.b),
                                             opt_d(r.l),
                                             opt_q(r.p),
                                             opt_q(r.chi_hat),
                                             opt_q(r.e_hat),
                                             format_double(to_double(s)),
                                             format_double(to_double(s) - e_minus_quarter),
                                             format_double(to_double(e14_partial_sum_odd(r.n))),
                                             opt_d(r.ratio_e_over_chi),
                                             opt_d(r.ratio_e_odd_over_chi),
                                             opt_d(r.conjecture_residual)};
        out << lead;
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? sep : "") << cells[i];
        out << tail << "\n";
    }
    return out.str();
}

} // namespace graph_euler::cli

#endif
