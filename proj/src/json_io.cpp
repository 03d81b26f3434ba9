#include "qaffine/json_io.hpp"

#include "qaffine/qgroth.hpp"

namespace qaffine {

json to_json(const Monomial& m) {
    json a = json::array();
    for (const auto& [k, e] : m.exponents()) a.push_back({k.node, k.shift, e});
    return a;
}

Monomial monomial_from_json(const json& j) {
    Monomial m;
    for (const auto& t : j) m.mul_var(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
    return m;
}

json to_json(const Laurent& p) {
    json a = json::array();
    for (const auto& [m, c] : p.terms()) {
        a.push_back({{"coef", c.str()}, {"monomial", to_json(m)}});
    }
    return a;
}

Laurent laurent_from_json(const json& j) {
    Laurent p;
    for (const auto& t : j) {
        Int c(t.at("coef").get<std::string>());
        p.add_term(monomial_from_json(t.at("monomial")), c);
    }
    return p;
}

json to_json(const PsiWeight& w) {
    json j;
    j["psi"] = to_json(w.psi);
    if (w.omega_tracked) j["omega"] = w.omega;
    return j;
}

json to_json(const QCharResult& r) {
    json j;
    j["type"] = r.cd.label();
    j["polynomial"] = to_json(r.chi);
    j["dimension"] = r.dimension().str();
    json dom = json::array();
    for (const auto& [m, c] : r.dominant) dom.push_back({{"coef", c.str()}, {"monomial", to_json(m)}});
    j["dominant"] = dom;
    if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
    return j;
}

namespace {

json term_to_json(const relations::RelTerm& t) {
    json j;
    j["coeff"] = t.coeff.str();
    if (!t.weight.empty()) j["weight"] = t.weight;
    json syms = json::array();
    for (const auto& [k, e] : t.sym) {
        const char* kind = "?";
        switch (k.kind) {
            case relations::Kind::Lplus: kind = "L+"; break;
            case relations::Kind::Lstar: kind = "L*"; break;
            case relations::Kind::Ltilde: kind = "Lt"; break;
            case relations::Kind::V: kind = "V"; break;
            case relations::Kind::Kconst: kind = "K"; break;
        }
        syms.push_back({{"kind", kind}, {"node", k.node}, {"shift", k.shift}, {"exp", e}});
    }
    j["symbols"] = syms;
    return j;
}

}  // namespace

json to_json(const relations::RelationExpr& rel) {
    json j;
    json l = json::array(), r = json::array();
    for (const auto& t : rel.lhs) l.push_back(term_to_json(t));
    for (const auto& t : rel.rhs) r.push_back(term_to_json(t));
    j["lhs"] = l;
    j["rhs"] = r;
    j["display"] = rel.str();
    if (!rel.note.empty()) j["note"] = rel.note;
    return j;
}

json to_json(const cluster::Seed& s) {
    json j;
    json verts = json::array();
    for (int i = 1; i <= s.quiver.size; ++i) {
        json v = {{"id", i}, {"frozen", static_cast<bool>(s.quiver.frozen[i])}};
        if (!s.labels[i].empty()) v["label"] = s.labels[i];
        if (!s.psi[i].psi.is_unit()) v["psi"] = to_json(s.psi[i].psi);
        verts.push_back(v);
    }
    j["vertices"] = verts;
    json arrows = json::array();
    for (const auto& [a, m] : s.quiver.arrows) {
        for (int c = 0; c < m; ++c) arrows.push_back({a.first, a.second});
    }
    j["arrows"] = arrows;
    json vars;
    for (int i = 1; i <= s.quiver.size; ++i) {
        vars[std::to_string(i)] = s.vars[i].str();
    }
    j["variables"] = vars;
    return j;
}

json to_json(const cluster::EnumerateResult& r) {
    json j;
    json vars = json::array();
    for (const auto& v : r.variables) vars.push_back(v.str());
    j["variables"] = vars;
    j["variable_count"] = r.variables.size();
    j["cluster_count"] = r.clusters.size();
    j["finite"] = r.finite;
    j["seeds_processed"] = r.seeds_processed;
    return j;
}

json to_json(const truncation::TruncationParam& z) {
    json j;
    j["type"] = z.cd.label();
    j["roots"] = z.root_lists();
    return j;
}

json certificate_to_json(const std::map<VarKey, int>& cert) {
    json a = json::array();
    for (const auto& [k, c] : cert) a.push_back({k.node, k.shift, c});
    return a;
}

json to_json(const truncation::Chain& c) {
    json j;
    json params = json::array();
    for (const auto& p : c.params) params.push_back(to_json(p));
    j["params"] = params;
    json certs = json::array();
    for (const auto& cert : c.certificates) certs.push_back(certificate_to_json(cert));
    j["certificates"] = certs;
    j["steps"] = c.steps();
    return j;
}

json to_json(const std::vector<truncation::EnumeratedParam>& params) {
    json a = json::array();
    for (const auto& p : params) {
        a.push_back({{"psi", to_json(p.psi.psi)},
                     {"multiplicity", p.multiplicity.str()},
                     {"mu", p.mu}});
    }
    return a;
}

json to_json(const qgroth::KtElement& x) {
    json a = json::array();
    for (const auto& [w, c] : x.terms()) {
        json coeffs = json::array();
        for (const auto& [h, v] : c.coeffs()) coeffs.push_back({h, v.str()});
        a.push_back({{"word", w}, {"coeff", coeffs}});
    }
    return a;
}

namespace {

json cplx_to_json(xxz::cplx z) { return {z.real(), z.imag()}; }

json cvec_to_json(const std::vector<xxz::cplx>& v) {
    json a = json::array();
    for (auto z : v) a.push_back(cplx_to_json(z));
    return a;
}

}  // namespace

json to_json(const xxz::SpectrumFit& fit) {
    json j;
    j["N"] = fit.spec.length;
    j["q"] = cplx_to_json(fit.spec.q);
    j["u"] = cplx_to_json(fit.spec.u);
    j["seed"] = fit.spec.seed;
    j["commutativity_residual"] = fit.commut_residual;
    j["max_interp_residual"] = fit.max_interp_residual;
    j["max_tq_residual"] = fit.max_tq_residual;
    j["max_bethe_residual"] = fit.max_bethe_residual;
    j["trace_residual"] = fit.trace_residual;
    json lv = json::array();
    for (const auto& l : fit.levels) {
        lv.push_back({{"lambda", cvec_to_json(l.lambda)},
                      {"magnon", l.magnon},
                      {"baxter_roots", cvec_to_json(l.baxter_roots)},
                      {"y_plus", cplx_to_json(l.y_plus)},
                      {"y_minus", cplx_to_json(l.y_minus)},
                      {"interp_residual", l.interp_residual},
                      {"tq_residual", l.tq_residual},
                      {"bethe_residual", l.bethe_residual},
                      {"nongeneric_roots", l.nongeneric_roots}});
    }
    j["levels"] = lv;
    return j;
}

json to_json(const xxz::QQReport& rep) {
    json j;
    j["max_residual"] = rep.max_residual;
    j["max_swap_antisymmetry"] = rep.max_swap_antisymmetry;
    json lv = json::array();
    for (const auto& l : rep.levels) {
        lv.push_back({{"magnon", l.magnon},
                      {"q_minus_roots", cvec_to_json(l.q_minus_roots)},
                      {"alpha", cplx_to_json(l.alpha)},
                      {"residual", l.residual},
                      {"swap_antisymmetry", l.swap_antisymmetry}});
    }
    j["levels"] = lv;
    return j;
}

}  // namespace qaffine
