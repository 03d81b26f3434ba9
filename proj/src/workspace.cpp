#include "qaffine/workspace.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qaffine {

namespace fs = std::filesystem;

Config Config::from_json(const nlohmann::json& j) {
    Config c;
    if (j.contains("fm_budget")) c.fm_budget = j["fm_budget"].get<long long>();
    if (j.contains("cluster_budget")) c.cluster_budget = j["cluster_budget"].get<long long>();
    if (j.contains("chain_max_depth")) c.chain_max_depth = j["chain_max_depth"].get<int>();
    if (j.contains("commutativity_tol")) c.commutativity_tol = j["commutativity_tol"].get<double>();
    if (j.contains("fit_tol")) c.fit_tol = j["fit_tol"].get<double>();
    if (j.contains("xxz_max_sites")) c.xxz_max_sites = j["xxz_max_sites"].get<int>();
    return c;
}

Config Config::from_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

fs::path Workspace::default_root() {
    if (const char* env = std::getenv("QAFFINE_HOME")) return fs::path(env);
    return fs::path(".qaffine");
}

Workspace::Workspace(fs::path root) : root_(std::move(root)) {
    fs::create_directories(cache_dir());
    fs::create_directories(report_dir());
}

std::string Workspace::content_hash(const std::string& payload) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

void atomic_write(const fs::path& target, const std::string& payload) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << payload;
    }
    fs::rename(tmp, target);
}

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

std::optional<std::string> Workspace::cache_get(const std::string& key) const {
    return read_file(cache_dir() / (key + ".json"));
}

void Workspace::cache_put(const std::string& key, const std::string& payload) const {
    atomic_write(cache_dir() / (key + ".json"), payload);
}

fs::path Workspace::write_report(const std::string& name, const std::string& payload) const {
    fs::path p = report_dir() / (name + ".json");
    atomic_write(p, payload);
    return p;
}

std::optional<std::string> Workspace::read_report(const std::string& name) const {
    return read_file(report_dir() / (name + ".json"));
}

std::uintmax_t Workspace::cache_gc(long long age_seconds) const {
    std::uintmax_t freed = 0;
    auto now = fs::file_time_type::clock::now();
    for (const auto& entry : fs::directory_iterator(cache_dir())) {
        if (!entry.is_regular_file()) continue;
        auto age = std::chrono::duration_cast<std::chrono::seconds>(now - entry.last_write_time());
        if (age.count() >= age_seconds) {
            freed += entry.file_size();
            fs::remove(entry.path());
        }
    }
    return freed;
}

void Workspace::log(const std::string& line) const {
    std::ofstream out(root_ / "run.log", std::ios::app);
    auto now = std::chrono::system_clock::now().time_since_epoch();
    out << std::chrono::duration_cast<std::chrono::seconds>(now).count() << ' ' << line << '\n';
}

}  // namespace qaffine
