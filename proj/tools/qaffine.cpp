#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qaffine/json_io.hpp"
#include "qaffine/qgroth.hpp"
#include "qaffine/scenarios.hpp"
#include "qaffine/workspace.hpp"

namespace {

using namespace qaffine;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

int cmd_qchar(const std::string& type, int node, int shift, const std::string& format,
              long long budget, bool no_cache, const Workspace& ws) {
    CartanData cd = cartan_data(type);
    std::string key = "qchar-" + Workspace::content_hash(cd.key() + "#" + std::to_string(node) +
                                                         "#" + std::to_string(shift) + "#" +
                                                         std::to_string(budget));
    QCharResult res;
    bool from_cache = false;
    if (!no_cache) {
        if (auto hit = ws.cache_get(key)) {
            res = make_qchar_result(cd, laurent_from_json(json::parse(*hit)));
            from_cache = true;
        }
    }
    if (!from_cache) {
        FmOptions opts;
        opts.budget = budget;
        res = fm_fundamental(cd, node, shift, opts);
        if (!no_cache) ws.cache_put(key, to_json(res.chi).dump(2));
    }
    if (format == "json") {
        json j = to_json(res);
        j["cache"] = from_cache;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "chi_q(V_" << node << "(q^" << shift << ")) [" << type << "]\n"
                  << res.chi.str() << "\ndimension " << res.dimension().str() << '\n';
    }
    return 0;
}

truncation::TruncationParam parse_trunc(const CartanData& cd, const std::string& text) {
    json j = json::parse(text);
    std::vector<std::vector<int>> lists;
    for (const auto& node : j) lists.push_back(node.get<std::vector<int>>());
    return truncation::TruncationParam::from_root_lists(cd, lists);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic and numeric laboratory for quantum affine characters"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config with tolerances and budgets");
    std::string home;
    app.add_option("--home", home, "workspace root (default: QAFFINE_HOME or .qaffine)");

    // qchar
    auto* qchar = app.add_subcommand("qchar", "fundamental q-characters");
    std::string q_type = "A1", q_format = "text";
    int q_node = 1, q_shift = 0;
    long long q_budget = 1000000;
    bool q_nocache = false;
    qchar->add_option("--type", q_type, "finite type label");
    qchar->add_option("--node", q_node, "Dynkin node (1-based)");
    qchar->add_option("--shift", q_shift, "spectral lattice exponent");
    qchar->add_option("--format", q_format, "json|text");
    qchar->add_option("--budget", q_budget, "monomial budget");
    qchar->add_flag("--no-cache", q_nocache, "bypass the workspace cache");

    // cluster
    auto* clusterc = app.add_subcommand("cluster", "quiver mutation engine");
    auto* c_enum = clusterc->add_subcommand("enumerate", "enumerate variables and clusters");
    auto* c_show = clusterc->add_subcommand("show", "print a library seed");
    std::string c_seed = "a2";
    long long c_budget = 10000;
    int c_length = 0;
    for (auto* sub : {c_enum, c_show}) {
        sub->add_option("--seed", c_seed, "seed name");
        sub->add_option("--length", c_length, "window length for infinite families");
    }
    c_enum->add_option("--budget", c_budget, "seed budget");

    // relations
    auto* rel = app.add_subcommand("relations", "TQ / QQ / QQ* relations");
    std::string r_kind, r_type = "A1", r_format = "text";
    int r_node = 1, r_shift = 0;
    bool r_omit = false;
    rel->add_option("kind", r_kind, "tq|qq|qqstar")->required();
    rel->add_option("--type", r_type, "finite type label");
    rel->add_option("--node", r_node, "node");
    rel->add_option("--shift", r_shift, "lattice point");
    rel->add_option("--format", r_format, "json|latex|text");
    rel->add_flag("--omit-weights", r_omit, "suppress invertible weight prefactors");

    // truncate
    auto* tr = app.add_subcommand("truncate", "truncation parameter combinatorics");
    auto* t_enum = tr->add_subcommand("enumerate", "parameters coming from chi(Z)");
    auto* t_chain = tr->add_subcommand("chain", "chain search toward a target");
    std::string t_type = "B2", t_z = "[[],[0]]", t_target;
    int t_depth = 8;
    for (auto* sub : {t_enum, t_chain}) {
        sub->add_option("--type", t_type, "finite type label");
        sub->add_option("--Z", t_z, "per-node root-exponent lists, e.g. [[],[0]]");
    }
    t_chain->add_option("--target", t_target, "target parameter, same format")->required();
    t_chain->add_option("--max-depth", t_depth, "chain depth bound");

    // qgroth
    auto* qg = app.add_subcommand("qgroth", "sl2 quantum Grothendieck ring");
    auto* g_canon = qg->add_subcommand("canonical", "canonical class of a dominant multiset");
    auto* g_star = qg->add_subcommand("star", "star product of two generators");
    std::string g_shifts = "0,2", g_format = "text";
    int g_left = 0, g_right = 2;
    g_canon->add_option("--shifts", g_shifts, "comma-separated generator shifts");
    g_canon->add_option("--format", g_format, "json|text");
    g_star->add_option("--left", g_left, "left generator shift");
    g_star->add_option("--right", g_right, "right generator shift");

    // xxz
    auto* xz = app.add_subcommand("xxz", "6-vertex numeric bench");
    auto* x_fit = xz->add_subcommand("fit", "diagonalize and fit Baxter polynomials");
    int x_n = 4;
    double x_u_re = 0.5, x_u_im = 0.0, x_q_re = 0.7, x_q_im = 0.1;
    unsigned x_seed = 1;
    std::string x_out;
    x_fit->add_option("--N", x_n, "chain length");
    x_fit->add_option("--u", x_u_re, "twist (real part)");
    x_fit->add_option("--u-im", x_u_im, "twist (imaginary part)");
    x_fit->add_option("--q", x_q_re, "quantum parameter (real part)");
    x_fit->add_option("--q-im", x_q_im, "quantum parameter (imaginary part)");
    x_fit->add_option("--seed", x_seed, "sample seed");
    x_fit->add_option("--json", x_out, "write the JSON report to this file");

    // repro / scenarios / cache
    auto* repro = app.add_subcommand("repro", "re-derive the worked examples");
    bool all = false;
    std::string one;
    repro->add_flag("--all", all, "run the full catalog");
    repro->add_option("--scenario", one, "run a single scenario");

    app.add_subcommand("scenarios", "list the scenario catalog");

    auto* cache = app.add_subcommand("cache", "workspace cache maintenance");
    auto* gc = cache->add_subcommand("gc", "drop cache entries older than --age seconds");
    long long age = 0;
    gc->add_option("--age", age, "minimum age in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Workspace ws(home.empty() ? Workspace::default_root() : std::filesystem::path(home));
        Config cfg = config_path.empty() ? Config{} : Config::from_file(config_path);

        if (*qchar) return cmd_qchar(q_type, q_node, q_shift, q_format, q_budget, q_nocache, ws);

        if (*clusterc) {
            cluster::Seed seed = cluster::paper_seed(c_seed, c_length);
            if (*c_show) {
                std::cout << to_json(seed).dump(2) << '\n';
                return 0;
            }
            auto res = cluster::enumerate_seeds(seed, c_budget);
            std::cout << to_json(res).dump(2) << '\n';
            return res.finite ? 0 : kExitResource;
        }

        if (*rel) {
            CartanData cd = cartan_data(r_type);
            relations::RelationExpr r;
            if (r_kind == "tq") {
                FmOptions opts;
                opts.budget = cfg.fm_budget;
                r = relations::tq_relation(cd, fm_fundamental(cd, r_node, r_shift, opts), r_node,
                                           r_shift);
            } else if (r_kind == "qq") {
                r = relations::qq_system(cd, r_node, r_shift);
            } else if (r_kind == "qqstar") {
                r = relations::qq_star_relation(cd, r_node, r_shift);
            } else {
                std::cerr << "unknown relation kind: " << r_kind << '\n';
                return kExitUsage;
            }
            if (r_format == "json") {
                std::cout << to_json(r).dump(2) << '\n';
            } else if (r_format == "latex") {
                std::cout << r.latex(r_omit) << '\n';
            } else {
                std::cout << r.str(r_omit) << '\n';
            }
            return 0;
        }

        if (*tr) {
            CartanData cd = cartan_data(t_type);
            auto z = parse_trunc(cd, t_z);
            if (*t_enum) {
                std::cout << to_json(truncation::conjecture_enumerate(cd, z)).dump(2) << '\n';
                return 0;
            }
            auto target = parse_trunc(cd, t_target);
            auto chain = truncation::chain_search(cd, z, target.psi(), t_depth);
            if (!chain) {
                std::cout << json{{"found", false}}.dump(2) << '\n';
                return kExitMismatch;
            }
            json j = to_json(*chain);
            j["found"] = true;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*qg) {
            if (*g_star) {
                auto prod = qgroth::star(qgroth::KtElement::generator(g_left),
                                         qgroth::KtElement::generator(g_right));
                std::cout << prod.str() << '\n';
                return 0;
            }
            auto shifts = parse_int_list(g_shifts);
            auto b = qgroth::canonical_class(shifts);
            if (g_format == "json") {
                json j;
                j["canonical"] = to_json(b);
                j["t1_evaluation"] = to_json(qgroth::eval_t1(b));
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << b.str() << '\n';
            }
            return 0;
        }

        if (*xz) {
            xxz::ChainSpec spec = xxz::ChainSpec::homogeneous(
                x_n, {x_q_re, x_q_im}, {x_u_re, x_u_im}, x_seed);
            auto fit = xxz::fit_spectrum(spec);
            auto rep = xxz::verify_qq_polynomial(spec, fit);
            json j = to_json(fit);
            j["qq"] = to_json(rep);
            if (!x_out.empty()) {
                std::ofstream out(x_out);
                out << j.dump(2) << '\n';
            } else {
                std::cout << j.dump(2) << '\n';
            }
            bool ok = fit.commut_residual < cfg.commutativity_tol &&
                      fit.max_tq_residual < cfg.fit_tol;
            return ok ? 0 : kExitMismatch;
        }

        if (*repro) {
            std::vector<scenarios::RunOutcome> outcomes;
            if (all) {
                outcomes = scenarios::run_all(cfg);
            } else if (!one.empty()) {
                outcomes.push_back(scenarios::run_scenario(one, cfg));
            } else {
                std::cerr << "repro needs --all or --scenario NAME\n";
                return kExitUsage;
            }
            bool pass = true;
            for (const auto& o : outcomes) {
                ws.write_report(o.name, o.payload.dump(2));
                std::cout << (o.pass ? "PASS " : "FAIL ") << o.name << '\n';
                pass = pass && o.pass;
            }
            ws.log("repro: " + std::to_string(outcomes.size()) + " scenario(s)");
            return pass ? 0 : kExitMismatch;
        }

        if (app.get_subcommand("scenarios")->parsed()) {
            for (const auto& s : scenarios::registry()) {
                std::cout << s.name << "  -  " << s.description << '\n';
            }
            return 0;
        }

        if (*cache) {
            auto freed = ws.cache_gc(age);
            std::cout << json{{"freed_bytes", freed}}.dump() << '\n';
            return 0;
        }
    } catch (const NonTermination& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kExitResource;
    } catch (const xxz::ResourceGuard& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return 0;
}
