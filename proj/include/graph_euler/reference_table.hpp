#ifndef GRAPH_EULER_REFERENCE_TABLE_HPP
#define GRAPH_EULER_REFERENCE_TABLE_HPP

#include "graph_euler/rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace graph_euler {

/// Published values of chi(Out F_n), e(Out F_n) and e_odd(Out F_n).
struct ReferenceRow {
    int rank;
    const char* chi;
    const char* e;
    const char* e_odd;

    Rational chi_value() const { return parse_rational(chi); }
    Integer e_value() const { return parse_integer(e); }
    Integer e_odd_value() const { return parse_integer(e_odd); }
};

inline constexpr std::array<ReferenceRow, 14> reference_table{{
    {2, "-1/24", "1", "0"},
    {3, "-1/48", "1", "0"},
    {4, "-161/5760", "2", "-1"},
    {5, "-367/5760", "1", "0"},
    {6, "-120257/580608", "2", "-1"},
    {7, "-39793/45360", "1", "-2"},
    {8, "-6389072441/1393459200", "1", "-8"},
    {9, "-993607187/34836480", "-21", "-38"},
    {10, "-5048071877071/24524881920", "-124", "-275"},
    {11, "-9718190078959/5748019200", "-1202", "-2225"},
    {12, "-375393773534736899347/24103053950976000", "-10738", "-20358"},
    {13, "-2495397080915203519/15692092416000", "-112901", "-207321"},
    {14, "-1031156416543036906701911/578473294823424000", "-1271148", "-2320136"},
    {15, "-6147011108414481406421/282457663488000", "-15668391", "-28287416"},
}};

inline const ReferenceRow& reference_row(int rank)
{
    for (const auto& row : reference_table)
        if (row.rank == rank)
            return row;
    throw std::out_of_range("no reference value for rank " + std::to_string(rank));
}

} // namespace graph_euler

#endif
