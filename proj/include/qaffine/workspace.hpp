#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

namespace qaffine {

// Run-time tolerances and budgets; overridable from a JSON config file.
struct Config {
    long long fm_budget = 1000000;
    long long cluster_budget = 10000;
    int chain_max_depth = 8;
    double commutativity_tol = 1e-10;
    double fit_tol = 1e-8;
    int xxz_max_sites = 12;

    static Config from_file(const std::filesystem::path& path);
    static Config from_json(const nlohmann::json& j);
};

// Content-addressed cache plus report directory under one root.  The root
// comes from QAFFINE_HOME or defaults to .qaffine in the working directory.
class Workspace {
public:
    explicit Workspace(std::filesystem::path root = default_root());

    static std::filesystem::path default_root();
    const std::filesystem::path& root() const { return root_; }

    static std::string content_hash(const std::string& payload);  // fnv-1a 64, hex

    std::optional<std::string> cache_get(const std::string& key) const;
    void cache_put(const std::string& key, const std::string& payload) const;

    // Atomically writes a report payload; returns the path.
    std::filesystem::path write_report(const std::string& name, const std::string& payload) const;
    std::optional<std::string> read_report(const std::string& name) const;

    // Deletes cache entries older than age_seconds; returns bytes freed.
    std::uintmax_t cache_gc(long long age_seconds) const;

    void log(const std::string& line) const;

private:
    std::filesystem::path cache_dir() const { return root_ / "cache"; }
    std::filesystem::path report_dir() const { return root_ / "reports"; }
    std::filesystem::path root_;
};

}  // namespace qaffine
