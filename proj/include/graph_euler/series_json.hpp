#ifndef GRAPH_EULER_SERIES_JSON_HPP
#define GRAPH_EULER_SERIES_JSON_HPP

#include "graph_euler/series.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace graph_euler {

inline constexpr int series_format_version = 1;

class SeriesFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"version":1,"uMax":n|null,"xWeightMax":n|null,
///  "terms":[[uExp,[[k,m_k],...],"num","den"],...]}
/// Terms come out in canonical key order; big integers are decimal strings.
inline nlohmann::json series_to_json(const Series& s)
{
    nlohmann::json doc;
    doc["version"] = series_format_version;
    const auto& t = s.truncation();
    doc["uMax"] = t.u_max ? nlohmann::json(*t.u_max) : nlohmann::json(nullptr);
    doc["xWeightMax"] = t.x_weight_max ? nlohmann::json(*t.x_weight_max) : nlohmann::json(nullptr);
    auto terms = nlohmann::json::array();
    for (auto& [m, c] : s.terms()) {
        auto parts = nlohmann::json::array();
        for (auto [k, mult] : m.x.entries())
            parts.push_back({k, mult});
        terms.push_back({m.u, std::move(parts), c.get_num().get_str(), c.get_den().get_str()});
    }
    doc["terms"] = std::move(terms);
    return doc;
}

inline Series series_from_json(const nlohmann::json& doc)
{
    try {
        if (doc.at("version").get<int>() != series_format_version)
            throw SeriesFormatError("unsupported series format version");
        Truncation t;
        if (!doc.at("uMax").is_null())
            t.u_max = doc.at("uMax").get<std::int64_t>();
        if (!doc.at("xWeightMax").is_null())
            t.x_weight_max = doc.at("xWeightMax").get<std::uint64_t>();
        Series s(t);
        for (auto& term : doc.at("terms")) {
            if (!term.is_array() || term.size() != 4)
                throw SeriesFormatError("malformed series term");
            std::vector<Partition::Entry> entries;
            for (auto& e : term.at(1))
                entries.emplace_back(e.at(0).get<Partition::Part>(), e.at(1).get<Partition::Part>());
            Monomial m{term.at(0).get<std::int64_t>(), Partition::from_multiplicities(std::move(entries))};
            Rational c = make_rational(parse_integer(term.at(2).get<std::string>()),
                                       parse_integer(term.at(3).get<std::string>()));
            if (!s.admits(m))
                throw SeriesFormatError("series term outside its declared truncation");
            s.accumulate(m, c);
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw SeriesFormatError(std::string("malformed series document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SeriesFormatError(std::string("malformed series document: ") + e.what());
    } catch (const std::domain_error& e) {
        throw SeriesFormatError(std::string("malformed series document: ") + e.what());
    }
}

inline std::string serialize_series(const Series& s) { return series_to_json(s).dump(); }

inline Series parse_series(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SeriesFormatError(std::string("series document is not JSON: ") + e.what());
    }
    return series_from_json(doc);
}

} // namespace graph_euler

#endif
