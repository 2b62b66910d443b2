#pragma once

#include "lat/certificate.hpp"
#include "lat/graph.hpp"
#include "lat/graph_codec.hpp"
#include "lat/labeling.hpp"
#include "lat/solver.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

namespace lat {

inline constexpr const char* kCacheDirEnv = "LAT_CACHE_DIR";

struct CacheEntry {
    std::string key;  // "p=<n>;<edge list>"
    SearchMode mode = SearchMode::Total;
    SolveStatus status = SolveStatus::Exact;
    std::size_t value = 0;
    Certificate certificate;
    std::string timestamp;
};

/// On-disk cache of exact solver results, one JSON file per (graph, mode).
/// Keys are exact labelled graphs; a stored certificate that fails
/// re-verification is deleted and reported as a miss.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

    static std::optional<std::filesystem::path> directory_from_env() {
        const char* dir = std::getenv(kCacheDirEnv);
        if (!dir || !*dir) return std::nullopt;
        return std::filesystem::path(dir);
    }

    static std::string key(const Graph& g) {
        std::string edges;
        for (const auto& e : g.edges()) edges += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
        return "p=" + std::to_string(g.order()) + ";" + edges;
    }

    std::filesystem::path path_for(const Graph& g, SearchMode mode) const {
        char name[40];
        std::snprintf(name, sizeof name, "%016llx-%s.json", static_cast<unsigned long long>(fnv1a(key(g))), to_string(mode));
        return dir_ / name;
    }

    std::optional<CacheEntry> lookup(const Graph& g, SearchMode mode) {
        std::lock_guard lock(mu_);
        const auto path = path_for(g, mode);
        if (!std::filesystem::exists(path)) return std::nullopt;
        try {
            std::ifstream in(path);
            std::stringstream buf;
            buf << in.rdbuf();
            const Json j = Json::parse(buf.str());
            CacheEntry entry;
            entry.key = j.at("key").get<std::string>();
            if (entry.key != key(g)) return std::nullopt;  // hash collision: leave the other entry alone
            entry.mode = j.at("mode").get<std::string>() == "edge" ? SearchMode::EdgeOnly : SearchMode::Total;
            entry.value = j.at("value").get<std::size_t>();
            entry.timestamp = j.at("timestamp").get<std::string>();
            entry.certificate = read_certificate(j.at("certificate").dump());
            const bool sound = j.at("status") == "exact" && entry.mode == mode && entry.certificate.graph == g &&
                               entry.certificate.mode == mode && entry.certificate.valid &&
                               entry.certificate.distinct_count == entry.value;
            if (sound) return entry;
        } catch (const std::exception&) {
            // fall through: unreadable or tampered entries are dropped
        }
        std::filesystem::remove(path);
        ++discarded_;
        return std::nullopt;
    }

    // Only exact results with a certificate are worth keeping.
    void store(const Graph& g, SearchMode mode, const SolveResult& result) {
        if (result.status != SolveStatus::Exact || !result.certificate) return;
        Json j = Json::object();
        j["key"] = key(g);
        j["mode"] = to_string(mode);
        j["status"] = to_string(result.status);
        j["value"] = result.value;
        j["certificate"] = to_json(make_certificate(g, *result.certificate, make_provenance("solver")));
        j["timestamp"] = utc_now();
        std::lock_guard lock(mu_);
        std::ofstream(path_for(g, mode)) << pretty_json(j);
    }

    std::size_t discarded() const { return discarded_; }
    const std::filesystem::path& directory() const { return dir_; }

private:
    static std::uint64_t fnv1a(const std::string& s) {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

    static std::string utc_now() {
        const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::filesystem::path dir_;
    std::mutex mu_;
    std::size_t discarded_ = 0;
};

} // namespace lat
