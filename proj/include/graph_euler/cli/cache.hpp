#ifndef GRAPH_EULER_CLI_CACHE_HPP
#define GRAPH_EULER_CLI_CACHE_HPP

#include "graph_euler/series.hpp"
#include "graph_euler/series_json.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace graph_euler::cli {

inline constexpr int cache_manifest_version = 1;

/// The manifest itself is unreadable; the cache cannot be trusted or repaired.
class CacheCorruption : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
inline std::string content_hash(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

/// Directory of serialized series plus a manifest.json mapping each entry
/// name to {truncation, contentHash, path}.  An entry whose file is missing
/// or fails its hash is treated as absent, so the caller recomputes it.
class SeriesCache {
public:
    SeriesCache(std::filesystem::path dir, bool enabled, std::ostream& log)
        : dir_(std::move(dir)), enabled_(enabled), log_(&log)
    {
        if (enabled_)
            read_manifest();
    }

    bool enabled() const noexcept { return enabled_; }
    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::optional<Series> load(const std::string& name) const
    {
        if (!enabled_ || !manifest_["entries"].contains(name))
            return std::nullopt;
        const auto& entry = manifest_["entries"][name];
        const std::filesystem::path file = dir_ / entry.value("path", name + ".json");
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            *log_ << "cache: " << name << " listed but " << file.string() << " is missing; recomputing\n";
            return std::nullopt;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        if (content_hash(text) != entry.value("contentHash", std::string{})) {
            *log_ << "cache: " << name << " failed its content hash; recomputing\n";
            return std::nullopt;
        }
        try {
            return parse_series(text);
        } catch (const SeriesFormatError& e) {
            *log_ << "cache: " << name << " is unreadable (" << e.what() << "); recomputing\n";
            return std::nullopt;
        }
    }

    void store(const std::string& name, const Series& s)
    {
        if (!enabled_)
            return;
        try {
            std::filesystem::create_directories(dir_);
            const std::string text = serialize_series(s);
            const std::string file = name + ".json";
            write_atomically(dir_ / file, text);
            nlohmann::json entry;
            entry["truncation"] = {{"uMax", s.truncation().u_max ? nlohmann::json(*s.truncation().u_max) : nlohmann::json()},
                                   {"xWeightMax", s.truncation().x_weight_max ? nlohmann::json(*s.truncation().x_weight_max)
                                                                              : nlohmann::json()}};
            entry["contentHash"] = content_hash(text);
            entry["path"] = file;
            manifest_["entries"][name] = std::move(entry);
            write_atomically(dir_ / "manifest.json", manifest_.dump(2) + "\n");
        } catch (const std::filesystem::filesystem_error& e) {
            *log_ << "cache: could not write " << name << " (" << e.what() << "); continuing without caching\n";
        } catch (const std::ios_base::failure& e) {
            *log_ << "cache: could not write " << name << " (" << e.what() << "); continuing without caching\n";
        }
    }

private:
    void read_manifest()
    {
        manifest_ = {{"version", cache_manifest_version}, {"entries", nlohmann::json::object()}};
        const auto path = dir_ / "manifest.json";
        if (!std::filesystem::exists(path))
            return;
        std::ifstream in(path, std::ios::binary);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw CacheCorruption("cache manifest " + path.string() + " is not valid JSON: " + e.what());
        }
        if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer()
            || !doc.contains("entries") || !doc["entries"].is_object())
            throw CacheCorruption("cache manifest " + path.string() + " does not follow the manifest schema");
        if (doc["version"].get<int>() != cache_manifest_version)
            throw CacheCorruption("cache manifest " + path.string() + " has unsupported version "
                                  + doc["version"].dump());
        for (auto& [name, entry] : doc["entries"].items())
            if (!entry.is_object() || !entry.contains("contentHash") || !entry["contentHash"].is_string()
                || !entry.contains("path") || !entry["path"].is_string())
                throw CacheCorruption("cache manifest entry '" + name + "' is malformed");
        manifest_ = std::move(doc);
    }

    static void write_atomically(const std::filesystem::path& target, const std::string& text)
    {
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.exceptions(std::ios::failbit | std::ios::badbit);
            out << text;
        }
        std::filesystem::rename(tmp, target);
    }

    std::filesystem::path dir_;
    bool enabled_;
    std::ostream* log_;
    nlohmann::json manifest_;
};

} // namespace graph_euler::cli

#endif
