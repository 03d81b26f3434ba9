#include "qaffine/scenarios.hpp"

#include <cmath>

#include "qaffine/json_io.hpp"
#include "qaffine/qgroth.hpp"

namespace qaffine::scenarios {

using nlohmann::json;

namespace {

Monomial mono(std::initializer_list<std::array<int, 3>> entries) {
    Monomial m;
    for (const auto& e : entries) m.mul_var(e[0], e[1], e[2]);
    return m;
}

json check(bool ok, json detail) {
    detail["pass"] = ok;
    return detail;
}

bool laurent_equals(const Laurent& p, std::initializer_list<std::pair<Monomial, int>> terms) {
    Laurent q;
    for (const auto& [m, c] : terms) q.add_term(m, c);
    return p == q;
}

json scenario_cartan_b2(const Config&) {
    CartanData b2 = cartan_data("B2");
    bool ok = b2.cartan(1, 1) == 2 && b2.cartan(1, 2) == -1 && b2.cartan(2, 1) == -2 &&
              b2.cartan(2, 2) == 2 && b2.sym(1) == 2 && b2.sym(2) == 1 && b2.b(1, 1) == 4 &&
              b2.b(1, 2) == -2 && b2.b(2, 1) == -2 && b2.b(2, 2) == 2;
    CartanData a1 = cartan_data("A1");
    ok = ok && a1.cartan(1, 1) == 2 && a1.sym(1) == 1;
    CartanData a2 = cartan_data("A2");
    ok = ok && a2.cartan(1, 2) == -1 && a2.cartan(2, 1) == -1 && a2.sym(1) == 1 && a2.sym(2) == 1;
    return check(ok, {{"B2_C", {{2, -1}, {-2, 2}}}, {"B2_D", {2, 1}}});
}

json scenario_root_monomials(const Config&) {
    Monomial sl2 = root_monomial(cartan_data("A1"), 1, 0);
    Monomial sl3 = root_monomial(cartan_data("A2"), 1, 0);
    Monomial b2 = root_monomial(cartan_data("B2"), 1, 0);
    bool ok = sl2 == mono({{1, -1, 1}, {1, 1, 1}});
    ok = ok && sl3 == mono({{1, -1, 1}, {1, 1, 1}, {2, 0, -1}});
    ok = ok && b2 == mono({{1, -2, 1}, {1, 2, 1}, {2, -1, -1}, {2, 1, -1}});
    return check(ok, {{"A1", sl2.str()}, {"A2", sl3.str()}, {"B2", b2.str()}});
}

json scenario_sl2_fundamental(const Config& cfg) {
    QCharResult str = sl2_string_character(0, 1);
    bool ok = laurent_equals(str.chi, {{mono({{1, 0, 1}}), 1}, {mono({{1, 2, -1}}), 1}});
    FmOptions opts;
    opts.budget = cfg.fm_budget;
    QCharResult fm = fm_fundamental(cartan_data("A1"), 1, 0, opts);
    ok = ok && fm.chi == str.chi && fm.diagnostics.empty();
    QCharResult a2 = fm_fundamental(cartan_data("A2"), 1, 0, opts);
    ok = ok && laurent_equals(a2.chi, {{mono({{1, 0, 1}}), 1},
                                       {mono({{1, 2, -1}, {2, 1, 1}}), 1},
                                       {mono({{2, 3, -1}}), 1}});
    return check(ok, {{"sl2", fm.chi.str()}, {"sl3_node1", a2.chi.str()}});
}

json scenario_d4_29(const Config& cfg) {
    FmOptions opts;
    opts.budget = cfg.fm_budget;
    QCharResult d4 = fm_fundamental(cartan_data("D4"), 2, 0, opts);
    bool ok = d4.dimension() == 29 && d4.dominant.size() == 1 && d4.diagnostics.empty();
    return check(ok, {{"dimension", d4.dimension().str()},
                      {"distinct_monomials", d4.chi.term_count()}});
}

json scenario_tsystem_sl2(const Config&) {
    bool ok = t_system_check_sl2(0, 1);
    QCharResult prod = multiply(sl2_string_character(0, 1), sl2_string_character(2, 1));
    ok = ok && prod.chi.term_count() == 4 && prod.chi.coeff(Monomial()) == 1;
    // chi(V_1(1)) chi(V_1(q^2)) = 1 + chi(W) with W the 3-dimensional simple.
    Laurent w = prod.chi - Laurent::unit();
    ok = ok && w == sl2_string_character(0, 2).chi;
    return check(ok, {{"product", prod.chi.str()}});
}

json scenario_a2_cluster(const Config& cfg) {
    using namespace cluster;
    Seed a2 = paper_seed("a2");
    Seed m1 = mutate(a2, 1);
    bool ok = m1.var(1).str() == "(1 + X2)/(X1)";
    Seed m12 = mutate(m1, 2);
    ok = ok && m12.var(2).str() == "(1 + X1 + X2)/(X1*X2)";
    ok = ok && mutate(m1, 1).cluster_key() == a2.cluster_key();  // involution
    EnumerateResult res = enumerate_seeds(a2, cfg.cluster_budget);
    ok = ok && res.finite && res.variables.size() == 5 && res.clusters.size() == 5;
    for (const auto& v : res.variables) ok = ok && laurent_check(a2, v);
    return check(ok, {{"first_mutation", m1.var(1).str()},
                      {"second_mutation", m12.var(2).str()},
                      {"variables", res.variables.size()},
                      {"clusters", res.clusters.size()}});
}

json scenario_sl3_cm_cluster(const Config& cfg) {
    using namespace cluster;
    Seed cm = paper_seed("sl3_CM");
    bool ok = cm.quiver.frozen[3] && cm.quiver.frozen[4] && !cm.quiver.frozen[1] &&
              !cm.quiver.frozen[2];
    ok = ok && cm.quiver.arrow_mult(3, 1) == 1 && cm.quiver.arrow_mult(1, 2) == 1 &&
         cm.quiver.arrow_mult(2, 3) == 1 && cm.quiver.arrow_mult(4, 2) == 1;
    EnumerateResult res = enumerate_seeds(cm, cfg.cluster_budget);
    int frozen = 2;
    ok = ok && res.finite && res.variables.size() == 5 && res.clusters.size() == 5;
    ok = ok && static_cast<int>(res.variables.size()) + frozen == 7;
    for (const auto& v : res.variables) ok = ok && laurent_check(cm, v);
    return check(ok, {{"mutable_variables", res.variables.size()},
                      {"frozen", frozen},
                      {"total", res.variables.size() + frozen}});
}

json scenario_seed_library(const Config&) {
    using namespace cluster;
    Seed cz = paper_seed("sl2_CZminus", 3);
    bool ok = cz.quiver.size == 3 && cz.quiver.arrow_mult(2, 1) == 1 &&
              cz.quiver.arrow_mult(3, 2) == 1 && cz.labels[1] == "[(1-zq^{0})]" &&
              cz.labels[2] == "[(1-zq^{0})(1-zq^{-2})]";
    Seed gp = paper_seed("Gamma_inf_prime_sl2", 4);
    ok = ok && gp.quiver.arrow_mult(1, 2) == 1 && gp.quiver.arrow_mult(3, 2) == 1 &&
         gp.quiver.arrow_mult(3, 4) == 1 && gp.quiver.arrow_mult(2, 3) == 0;
    ok = ok && gp.psi[2].psi == mono({{1, 0, 1}}) && gp.psi[3].psi == mono({{1, -2, -1}});
    return check(ok, {{"sl2_CZminus_labels", {cz.labels[1], cz.labels[2], cz.labels[3]}},
                      {"gamma_prime_reversed_arrow", "3->2"}});
}

json scenario_tqr_sl2(const Config&) {
    using namespace relations;
    CartanData a1 = cartan_data("A1");
    RelationExpr rel = tq_relation(a1, sl2_string_character(0, 1), 1, 0);
    RelationExpr expect;
    RelTerm l;
    l.mul_sym(Kind::V, 1, 0).mul_sym(Kind::Lplus, 1, 1);
    RelTerm r1, r2;
    r1.mul_weight({1});
    r1.mul_sym(Kind::Lplus, 1, -1);
    r2.mul_weight({-1});
    r2.mul_sym(Kind::Lplus, 1, 3);
    expect.lhs = {l};
    expect.rhs = {r1, r2};
    bool ok = rel == expect;

    // sl3 node 1: three-term relation with L+ symbols at both nodes.
    CartanData a2 = cartan_data("A2");
    RelationExpr rel3 = tq_relation(a2, fm_fundamental(a2, 1, 0), 1, 0);
    Int termsum = 0;
    for (const auto& t : rel3.rhs) termsum += t.coeff;
    bool nodes2 = false;
    for (const auto& t : rel3.rhs) {
        for (const auto& [k, e] : t.sym) nodes2 = nodes2 || k.node == 2;
    }
    ok = ok && rel3.rhs.size() == 3 && termsum == 3 && nodes2;
    return check(ok, {{"sl2", rel.str()}, {"sl3_node1", rel3.str()}});
}

json scenario_wronskian_qq(const Config&) {
    using namespace relations;
    CartanData a1 = cartan_data("A1");
    bool ok = psi_tilde(a1, 1, 0).psi == mono({{1, 0, -1}});
    CartanData b2 = cartan_data("B2");
    ok = ok && psi_tilde(b2, 2, 0).psi == mono({{2, 0, -1}, {1, 0, 1}, {1, 2, 1}});
    ok = ok && psi_tilde(b2, 1, 0).psi == mono({{1, 0, -1}, {2, 2, 1}});

    RelationExpr qq = qq_system(a1, 1, 0);
    RelationExpr expect;
    RelTerm t1, t2, k;
    t1.mul_sym(Kind::Lplus, 1, -1).mul_sym(Kind::Ltilde, 1, 1);
    t2.coeff = -1;
    t2.mul_sym(Kind::Lplus, 1, 1).mul_sym(Kind::Ltilde, 1, -1);
    k.mul_sym(Kind::Kconst, 0, 0);
    expect.lhs = {t1, t2};
    expect.rhs = {k};
    ok = ok && qq == expect;

    // B2 node 2: RHS product over j=1 with shifts -1 and +1 (C_{21} = -2).
    RelationExpr qqb = qq_system(b2, 2, 0);
    RelTerm want;
    want.mul_sym(Kind::Kconst, 0, 0);
    want.mul_sym(Kind::Lplus, 1, -1).mul_sym(Kind::Lplus, 1, 1);
    ok = ok && qqb.rhs.size() == 1 && qqb.rhs[0].sym == want.sym;
    return check(ok, {{"sl2_qq", qq.str()}, {"B2_node2_qq", qqb.str()}});
}

json scenario_qqstar(const Config&) {
    using namespace relations;
    CartanData a1 = cartan_data("A1");
    RelationExpr viewed = qq_star_as_tq_sl2(1);
    RelationExpr tqr = tq_relation(a1, sl2_string_character(0, 1), 1, 0);
    bool ok = viewed == tqr;

    CartanData a2 = cartan_data("A2");
    RelationExpr star3 = qq_star_relation(a2, 1, 0);
    bool hit1 = false, hit2 = false;
    for (const auto& t : star3.rhs) {
        if (t.sym.count({Kind::Lplus, 2, 1}) && t.weight.empty()) hit1 = true;
        if (t.sym.count({Kind::Lplus, 2, -1}) && t.weight == std::vector<int>{-2, 1}) hit2 = true;
    }
    ok = ok && hit1 && hit2;

    CartanData b2 = cartan_data("B2");
    RelationExpr starb = qq_star_relation(b2, 1, 0);
    bool hb1 = false, hb2 = false;
    for (const auto& t : starb.rhs) {
        if (t.sym.count({Kind::Lplus, 2, 2})) hb1 = true;   // -B_{21} = 2
        if (t.sym.count({Kind::Lplus, 2, -2})) hb2 = true;  // B_{12} = -2
    }
    ok = ok && hb1 && hb2;
    return check(ok, {{"sl2_as_tq", viewed.str()}, {"sl3_node1", star3.str()},
                      {"B2_node1", starb.str()}});
}

json scenario_bethe_structural(const Config&) {
    using namespace relations;
    auto ctx = BetheContext::make(cartan_data("A1"), {0.71, 0.13});
    std::complex<double> w{0.9, 0.2};
    ctx.roots[1] = {w};
    ctx.twist[1] = {0.8, 0.05};
    std::complex<double> q2 = ctx.q * ctx.q;
    std::complex<double> expect =
        (1.0 - w * q2 / w) / (1.0 - w / (q2 * w)) / (ctx.twist[1] * ctx.twist[1]) + 1.0;
    std::complex<double> got = bethe_residual(ctx, 1, w);
    bool ok = std::abs(got - expect) < 1e-12;
    // Empty Q: no roots, residual reduces to v^{-1} + 1.
    auto ctx2 = BetheContext::make(cartan_data("A1"), ctx.q);
    ctx2.twist[1] = ctx.twist[1];
    std::complex<double> empty = bethe_residual(ctx2, 1, w);
    ok = ok && std::abs(empty - (1.0 / (ctx.twist[1] * ctx.twist[1]) + 1.0)) < 1e-12;
    return check(ok, {{"residual_re", got.real()}, {"residual_im", got.imag()}});
}

json scenario_chi_tables(const Config&) {
    using namespace truncation;
    CartanData a1 = cartan_data("A1");
    bool ok = laurent_equals(chi_table(a1, 1, 0), {{mono({{1, 0, 1}}), 1}, {mono({{1, 2, -1}}), 1}});
    CartanData b2 = cartan_data("B2");
    Laurent c1 = chi_table(b2, 1, 0);
    Laurent c2 = chi_table(b2, 2, 0);
    ok = ok && laurent_equals(c1, {{mono({{1, 0, 1}}), 1},
                                   {mono({{1, 4, -1}, {2, 2, 1}}), 1},
                                   {mono({{2, 4, -1}, {1, 2, 1}}), 1},
                                   {mono({{1, 6, -1}}), 1}});
    ok = ok && laurent_equals(c2, {{mono({{2, 0, 1}}), 1},
                                   {mono({{2, 2, -1}, {1, 0, 1}, {1, 2, 1}}), 1},
                                   {mono({{1, 0, 1}, {1, 6, -1}, {2, 2, -1}, {2, 4, 1}}), 1},
                                   {mono({{1, 2, 1}, {1, 4, -1}}), 1},
                                   {mono({{1, 6, -1}, {1, 4, -1}, {2, 4, 1}}), 1},
                                   {mono({{2, 6, -1}}), 1}});
    return check(ok, {{"B2_node1_terms", c1.term_count()}, {"B2_node2_terms", c2.term_count()}});
}

json scenario_psi_of_monomial(const Config&) {
    using namespace truncation;
    bool ok = psi_of_monomial(mono({{2, 0, 1}})).psi == mono({{2, 0, 1}});
    ok = ok && psi_of_monomial(mono({{2, 2, -1}, {1, 0, 1}, {1, 2, 1}})).psi ==
                   mono({{2, -2, -1}, {1, 0, 1}, {1, -2, 1}});
    ok = ok && psi_of_monomial(Monomial()).psi.is_unit();
    return check(ok, {{"inversion", "Z[i,r]^e -> Psi[i,-r]^e"}});
}

json scenario_ctru_six(const Config&) {
    using namespace truncation;
    CartanData b2 = cartan_data("B2");
    TruncationParam z = TruncationParam::from_root_lists(b2, {{}, {0}});
    auto params = conjecture_enumerate(b2, z);
    // The six reference parameters for Z = (1, 1-z).
    std::vector<Monomial> expect = {
        mono({{2, 0, 1}}),
        mono({{1, -2, 1}, {1, 0, 1}, {2, -2, -1}}),
        mono({{1, -6, -1}, {1, -4, -1}, {2, -4, 1}}),
        mono({{2, -6, -1}}),
        mono({{1, 0, 1}, {1, -6, -1}, {2, -4, 1}, {2, -2, -1}}),
        mono({{1, -2, 1}, {1, -4, -1}}),
    };
    Int total = 0;
    bool ok = true;
    for (const auto& p : params) total += p.multiplicity;
    ok = ok && total == 6 && params.size() == 6;
    for (const auto& e : expect) {
        bool found = false;
        for (const auto& p : params) found = found || (p.psi.psi == e && p.multiplicity == 1);
        ok = ok && found;
    }
    // The last two share their coweight (the duplicate-mu pair).
    std::vector<int> mu5 = PsiWeight(expect[4]).degree(b2);
    std::vector<int> mu6 = PsiWeight(expect[5]).degree(b2);
    ok = ok && mu5 == mu6;
    return check(ok, {{"count", params.size()}, {"parameters", to_json(params)},
                      {"duplicate_mu", mu5}});
}

json scenario_ctru_four(const Config&) {
    using namespace truncation;
    CartanData b2 = cartan_data("B2");
    TruncationParam z = TruncationParam::from_root_lists(b2, {{0}, {}});
    auto params = conjecture_enumerate(b2, z);
    std::vector<std::pair<Monomial, std::vector<int>>> expect = {
        {mono({{1, 0, 1}}), {1, 0}},
        {mono({{1, -4, -1}, {2, -2, 1}}), {-1, 1}},
        {mono({{1, -2, 1}, {2, -4, -1}}), {1, -1}},
        {mono({{1, -6, -1}}), {-1, 0}},
    };
    bool ok = params.size() == 4;
    for (const auto& [m, mu] : expect) {
        bool found = false;
        for (const auto& p : params) {
            found = found || (p.psi.psi == m && p.mu == mu && p.multiplicity == 1);
        }
        ok = ok && found;
    }
    return check(ok, {{"count", params.size()}, {"parameters", to_json(params)}});
}

json scenario_cex_certificates(const Config&) {
    using namespace truncation;
    CartanData b2 = cartan_data("B2");
    TruncationParam z = TruncationParam::from_root_lists(b2, {{-6}, {0, -2, -6}});
    TruncationParam z1 = TruncationParam::from_root_lists(b2, {{0}, {-4, -6}});
    TruncationParam z2 = TruncationParam::from_root_lists(b2, {{0, -4, -6}, {}});
    auto c1 = preceq(b2, z1.psi(), z.psi());
    auto c2 = preceq(b2, z2.psi(), z1.psi());
    bool ok = c1.has_value() && c2.has_value();
    std::map<VarKey, int> e1{{{2, -1}, 1}, {{1, -4}, 1}};
    std::map<VarKey, int> e2{{{2, -5}, 1}};
    ok = ok && *c1 == e1 && *c2 == e2;
    // Lambda factors themselves, cross-checked against the factorization.
    ok = ok && lambda_monomial(b2, 1, -4).psi == mono({{1, -2, 1}, {1, -6, 1}, {2, -4, -1}});
    ok = ok && lambda_monomial(b2, 2, -1).psi ==
                   mono({{2, 0, 1}, {2, -2, 1}, {1, -2, -1}, {1, 0, -1}});
    return check(ok, {{"Zprime_cert", certificate_to_json(*c1)},
                      {"Zsecond_cert", certificate_to_json(*c2)}});
}

json scenario_cex_chain(const Config& cfg) {
    using namespace truncation;
    CartanData b2 = cartan_data("B2");
    TruncationParam z = TruncationParam::from_root_lists(b2, {{-6}, {0, -2, -6}});
    TruncationParam z1 = TruncationParam::from_root_lists(b2, {{0}, {-4, -6}});
    TruncationParam z2 = TruncationParam::from_root_lists(b2, {{0, -4, -6}, {}});
    bool direct = comes_from(b2, z, z2.psi());
    auto chain = chain_search(b2, z, z2.psi(), cfg.chain_max_depth);
    // A two-parameter chain exists, and the reference route Z -> Z' -> Z''
    // is valid: Z' comes from chi(Z) and Z'' comes from chi(Z').
    bool ok = !direct && chain.has_value() && chain->params.size() == 2;
    ok = ok && comes_from(b2, z, z1.psi()) && comes_from(b2, z1, z2.psi());
    ok = ok && chain && comes_from(b2, chain->params[1], z2.psi());
    json j;
    j["direct"] = direct;
    j["route_via_Zprime"] = true;
    if (chain) j["chain"] = to_json(*chain);
    return check(ok, j);
}

json scenario_deux_star(const Config&) {
    using namespace qgroth;
    // g_0 * g_2 = t^{-2} g_2 * g_0 + (1 - t^{-2})
    KtElement lhs = star(KtElement::generator(0), KtElement::generator(2));
    KtElement rhs = star(KtElement::generator(2), KtElement::generator(0)).scale(THalf::tpow(-4)) +
                    KtElement::unit().scale(THalf(Int(1)) - THalf::tpow(-4));
    bool ok = lhs == rhs;
    // g_0 * g_4 = t^{2} g_4 * g_0, no constant term
    KtElement lhs2 = star(KtElement::generator(0), KtElement::generator(4));
    KtElement rhs2 = star(KtElement::generator(4), KtElement::generator(0)).scale(THalf::tpow(4));
    ok = ok && lhs2 == rhs2;
    // g_0 * g_0 has trivial N(0).
    KtElement sq = star(KtElement::generator(0), KtElement::generator(0));
    ok = ok && sq.terms().size() == 1 && sq.terms().begin()->first == qgroth::Word{0, 0};
    return check(ok, {{"gap2", lhs.str()}, {"gap4", lhs2.str()}});
}

json scenario_klsl_canonical(const Config&) {
    using namespace qgroth;
    KtElement b02 = canonical_class({0, 2});
    Laurent ev = eval_t1(b02);
    bool ok = ev == sl2_string_character(0, 2).chi;
    KtElement b04 = canonical_class({0, 4});
    ok = ok && b04 == standard_class({0, 4});
    ok = ok && canonical_class({0}) == KtElement::generator(0);
    return check(ok, {{"b02", b02.str()}, {"t1_evaluation", ev.str()}});
}

json scenario_xxz_commute(const Config& cfg) {
    xxz::ChainSpec one = xxz::ChainSpec::homogeneous(1, {0.7, 0.1}, {1.0, 0.0});
    Eigen::MatrixXcd t0 = xxz::transfer_matrix(one, {0.3, 0.1});
    Eigen::MatrixXcd t1 = xxz::transfer_matrix(one, {0.8, -0.2});
    Eigen::MatrixXcd t2 = xxz::transfer_matrix(one, {1.4, 0.4});
    // Trace of the single-site transfer matrix is degree 1 in z: second
    // difference of three collinear samples vanishes.
    xxz::cplx a = t0.trace(), b = t1.trace(), c = t2.trace();
    // samples z = 0.3+0.1i, 0.8-0.2i, 1.4+0.4i are generic; fit degree 1.
    xxz::cplx z0{0.3, 0.1}, z1{0.8, -0.2}, z2{1.4, 0.4};
    xxz::cplx slope = (b - a) / (z1 - z0);
    double lin = std::abs(c - (a + slope * (z2 - z0)));
    bool ok = lin < 1e-9 * (1.0 + std::abs(c));
    xxz::ChainSpec two = xxz::ChainSpec::homogeneous(2);
    double comm = xxz::commutativity_residual(two);
    ok = ok && comm < cfg.commutativity_tol;
    return check(ok, {{"single_site_linearity", lin}, {"n2_commutativity", comm}});
}

json scenario_bthm_fit(const Config& cfg) {
    xxz::ChainSpec spec = xxz::ChainSpec::homogeneous(4);
    xxz::SpectrumFit fit = xxz::fit_spectrum(spec);
    bool ok = fit.commut_residual < cfg.commutativity_tol &&
              fit.max_interp_residual < 1e-9 && fit.max_tq_residual < cfg.fit_tol &&
              fit.max_bethe_residual < cfg.fit_tol && fit.trace_residual < 1e-9;
    return check(ok, {{"commutativity", fit.commut_residual},
                      {"interp", fit.max_interp_residual},
                      {"tq", fit.max_tq_residual},
                      {"bethe", fit.max_bethe_residual}});
}

json scenario_qq_polynomial(const Config& cfg) {
    // W = V(q^{-1}): single site with inhomogeneity a_1 = q^{-1}.
    xxz::ChainSpec spec;
    spec.length = 1;
    spec.q = {0.7, 0.1};
    spec.u = {0.5, 0.0};
    spec.seed = 1;
    spec.inhomogeneities = {xxz::cplx(1.0, 0.0) / spec.q};
    xxz::SpectrumFit fit = xxz::fit_spectrum(spec);
    xxz::QQReport rep = xxz::verify_qq_polynomial(spec, fit);
    bool ok = rep.max_residual < cfg.fit_tol && rep.max_swap_antisymmetry < cfg.fit_tol;
    // The Wronskian right-hand side prod(1 - z/a_k) = (1 - zq) becomes the
    // classical (1 - z) after the lattice shift z -> z/q.
    return check(ok, {{"max_residual", rep.max_residual},
                      {"swap_antisymmetry", rep.max_swap_antisymmetry},
                      {"rhs", "(1-z) after z -> z/q"}});
}

}  // namespace

const std::vector<Scenario>& registry() {
    static const std::vector<Scenario> all = {
        {"sexb-cartan-b2", "B2 Cartan matrix, symmetrizers and B = DC", {"sexb:r1=2,r2=1"},
         scenario_cartan_b2},
        {"wa-root-monomials", "root monomials for sl2, sl3 and B2", {"wa"},
         scenario_root_monomials},
        {"exqc-sl2-fundamental", "fundamental q-characters for sl2 and sl3 node 1", {"exqc"},
         scenario_sl2_fundamental},
        {"evaljg-d4-29", "D4 trivalent fundamental has dimension 29", {"evaljg"},
         scenario_d4_29},
        {"tsys-sl2", "sl2 T-system [V(a)][V(aq^2)] = 1 + [W]", {"tsys:1+[W]"},
         scenario_tsystem_sl2},
        {"ex7-a2-cluster", "A2 quiver: five variables, five clusters, Laurent", {"ex7"},
         scenario_a2_cluster},
        {"cm-sl3-cluster-7", "sl3 C_M square seed totals 7 cluster variables", {"cm:total7"},
         scenario_sl3_cm_cluster},
        {"seed-windows", "seed library windows (C_Z^-, Gamma_inf')", {"czminus", "gammainfprime"},
         scenario_seed_library},
        {"tqr-sl2", "Baxter TQ-relation for sl2 and the sl3 analogue", {"tqr"},
         scenario_tqr_sl2},
        {"wronskian-qq-sl2", "psi-tilde and the QQ/quantum-Wronskian shape", {"tps", "qqo"},
         scenario_wronskian_qq},
        {"qqstar-sl2-match", "QQ*-system matches the TQ-relation for sl2", {"addqq"},
         scenario_qqstar},
        {"bethe-structural-sl2", "sl2 Bethe residual v^{-1} Q(wq^2)/Q(wq^{-2}) + 1", {"bethe:sl2"},
         scenario_bethe_structural},
        {"sexb-chi-tables", "chi tables: A1 and the B2 4- and 6-term", {"sexb:tables"},
         scenario_chi_tables},
        {"psiofm", "Z-to-Psi inversion on the reference parameters", {"sec12:psiM"},
         scenario_psi_of_monomial},
        {"ctru-b2-six", "six simple-module parameters for Z = (1, 1-z)", {"sec12:ex1"},
         scenario_ctru_six},
        {"ctru-b2-four", "four simple-module parameters for Z = (1-z, 1)", {"sec12:ex2"},
         scenario_ctru_four},
        {"cex-certificates", "Lambda factorizations of Z', Z'' in Example cex", {"cex:factors"},
         scenario_cex_certificates},
        {"cex-chain", "two-parameter chain reaching Z''; not direct", {"cex:chain"},
         scenario_cex_chain},
        {"deux-star", "quantum torus relations at gaps 2 and 4", {"deux"},
         scenario_deux_star},
        {"klsl-canonical", "canonical classes: {0,2} is the 3-dim simple at t=1", {"klsl"},
         scenario_klsl_canonical},
        {"xxz-commute", "transfer matrices commute; single-site trace linear", {"transfer",
         "commute"}, scenario_xxz_commute},
        {"bthm-fit-n4", "Baxter polynomiality at N = 4", {"bthm"},
         scenario_bthm_fit},
        {"qqpoly-n1", "polynomial QQ identity for W = V(q^{-1})", {"sec5:polyqq"},
         scenario_qq_polynomial},
    };
    return all;
}

RunOutcome run_scenario(const std::string& name, const Config& cfg) {
    for (const auto& s : registry()) {
        if (s.name == name) {
            RunOutcome out;
            out.name = name;
            try {
                out.payload = s.run(cfg);
                out.payload["name"] = s.name;
                out.payload["anchors"] = s.anchors;
                out.pass = out.payload.value("pass", false);
            } catch (const std::exception& e) {
                out.payload = {{"name", s.name}, {"pass", false}, {"error", e.what()}};
                out.pass = false;
            }
            return out;
        }
    }
    throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<RunOutcome> run_all(const Config& cfg) {
    std::vector<RunOutcome> out;
    for (const auto& s : registry()) out.push_back(run_scenario(s.name, cfg));
    return out;
}

}  // namespace qaffine::scenarios
