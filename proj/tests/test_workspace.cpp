#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "qaffine/json_io.hpp"
#include "qaffine/scenarios.hpp"
#include "qaffine/workspace.hpp"

using namespace qaffine;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("qaffine-test-" + std::to_string(::getpid()));
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("content hash is stable") {
    CHECK(Workspace::content_hash("") == "cbf29ce484222325");
    CHECK(Workspace::content_hash("a") != Workspace::content_hash("b"));
    CHECK(Workspace::content_hash("qaffine") == Workspace::content_hash("qaffine"));
}

TEST_CASE("cache round trip is byte identical") {
    TempDir tmp;
    Workspace ws(tmp.path);
    std::string payload = to_json(fm_fundamental(cartan_data("A2"), 1, 0).chi).dump(2);
    std::string key = "qchar-" + Workspace::content_hash(payload);
    CHECK(!ws.cache_get(key).has_value());
    ws.cache_put(key, payload);
    auto hit = ws.cache_get(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == payload);
    // Recomputation serializes identically.
    CHECK(to_json(fm_fundamental(cartan_data("A2"), 1, 0).chi).dump(2) == *hit);
}

TEST_CASE("cache gc frees everything at age zero") {
    TempDir tmp;
    Workspace ws(tmp.path);
    ws.cache_put("k1", "0123456789");
    ws.cache_put("k2", "x");
    auto freed = ws.cache_gc(0);
    CHECK(freed >= 11);
    CHECK(!ws.cache_get("k1").has_value());
    CHECK(!ws.cache_get("k2").has_value());
}

TEST_CASE("reports are written atomically and readable") {
    TempDir tmp;
    Workspace ws(tmp.path);
    auto p = ws.write_report("demo", "{\"pass\":true}");
    CHECK(fs::exists(p));
    auto back = ws.read_report("demo");
    REQUIRE(back.has_value());
    CHECK(*back == "{\"pass\":true}");
}

TEST_CASE("config parsing") {
    Config def;
    CHECK(def.fm_budget == 1000000);
    nlohmann::json j = {{"fm_budget", 5}, {"fit_tol", 1e-6}};
    Config c = Config::from_json(j);
    CHECK(c.fm_budget == 5);
    CHECK(c.fit_tol == 1e-6);
    CHECK(c.cluster_budget == def.cluster_budget);
}

TEST_CASE("scenario catalog is populated and uniquely anchored") {
    const auto& reg = scenarios::registry();
    CHECK(reg.size() >= 12);
    std::set<std::string> names, anchors;
    for (const auto& s : reg) {
        CHECK(names.insert(s.name).second);
        for (const auto& a : s.anchors) CHECK(anchors.insert(a).second);
        CHECK(!s.description.empty());
    }
}

TEST_CASE("empty scenario list is a no-op success") {
    Config cfg;
    std::vector<scenarios::RunOutcome> outcomes;
    bool pass = true;
    for (const auto& o : outcomes) pass = pass && o.pass;
    CHECK(pass);
}

TEST_CASE("unknown scenario is rejected") {
    Config cfg;
    CHECK_THROWS_AS(scenarios::run_scenario("no-such-scenario", cfg), std::invalid_argument);
}

TEST_CASE("fast scenarios are deterministic across reruns") {
    Config cfg;
    for (const char* name : {"sexb-cartan-b2", "wa-root-monomials", "exqc-sl2-fundamental",
                             "tsys-sl2", "ex7-a2-cluster", "tqr-sl2", "psiofm",
                             "cex-certificates", "deux-star"}) {
        auto a = scenarios::run_scenario(name, cfg);
        auto b = scenarios::run_scenario(name, cfg);
        CHECK(a.pass);
        CHECK(a.payload.dump(2) == b.payload.dump(2));
    }
}
