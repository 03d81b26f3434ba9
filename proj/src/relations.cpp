#include "qaffine/relations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qaffine::relations {

RelTerm& RelTerm::mul_sym(Kind k, int node, int shift, int exp) {
    if (exp == 0) return *this;
    SymKey key{k, node, shift};
    auto [it, inserted] = sym.emplace(key, exp);
    if (!inserted) {
        it->second += exp;
        if (it->second == 0) sym.erase(it);
    }
    return *this;
}

RelTerm& RelTerm::mul_weight(const std::vector<int>& w) {
    if (weight.size() < w.size()) weight.resize(w.size(), 0);
    for (size_t i = 0; i < w.size(); ++i) weight[i] += w[i];
    while (!weight.empty() && weight.back() == 0) weight.pop_back();
    return *this;
}

bool RelTerm::same_monomial(const RelTerm& o) const {
    return sym == o.sym && weight == o.weight;
}

void RelationExpr::normalize() {
    auto collect = [](std::vector<RelTerm>& side) {
        std::map<std::pair<std::map<SymKey, int>, std::vector<int>>, Int> acc;
        for (auto& t : side) {
            std::vector<int> w = t.weight;
            while (!w.empty() && w.back() == 0) w.pop_back();
            acc[{t.sym, w}] += t.coeff;
        }
        side.clear();
        for (auto& [key, c] : acc) {
            if (c == 0) continue;
            RelTerm t;
            t.sym = key.first;
            t.weight = key.second;
            t.coeff = c;
            side.push_back(std::move(t));
        }
    };
    collect(lhs);
    collect(rhs);
}

bool RelationExpr::operator==(const RelationExpr& o) const {
    RelationExpr a = *this, b = o;
    a.normalize();
    b.normalize();
    auto key = [](const std::vector<RelTerm>& side) {
        std::vector<std::tuple<std::map<SymKey, int>, std::vector<int>, Int>> v;
        for (const auto& t : side) v.emplace_back(t.sym, t.weight, t.coeff);
        return v;
    };
    return key(a.lhs) == key(b.lhs) && key(a.rhs) == key(b.rhs);
}

namespace {

std::string sym_str(const SymKey& k, int exp, bool tex) {
    std::ostringstream os;
    auto base = [&]() -> std::string {
        std::string r = std::to_string(k.shift);
        std::string spectral = tex ? ("q^{" + r + "}") : ("q^" + r);
        switch (k.kind) {
            case Kind::Lplus:
                return tex ? "[L^+_{" + std::to_string(k.node) + "," + spectral + "}]"
                           : "L+[" + std::to_string(k.node) + "," + r + "]";
            case Kind::Lstar:
                return tex ? "[L^*_{" + std::to_string(k.node) + "," + spectral + "}]"
                           : "L*[" + std::to_string(k.node) + "," + r + "]";
            case Kind::Ltilde:
                return tex ? "[\\tilde{L}_{" + std::to_string(k.node) + "," + spectral + "}]"
                           : "Lt[" + std::to_string(k.node) + "," + r + "]";
            case Kind::V:
                return tex ? "[V_{" + std::to_string(k.node) + "}(" + spectral + ")]"
                           : "V[" + std::to_string(k.node) + "," + r + "]";
            case Kind::Kconst:
                return "K";
        }
        return "?";
    };
    os << base();
    if (exp != 1) os << (tex ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp));
    return os.str();
}

std::string weight_str(const std::vector<int>& w, bool tex) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (tex) {
            os << '[';
            if (w[i] != 1) os << (w[i] == -1 ? "-" : std::to_string(w[i]));
            os << "\\omega_{" << (i + 1) << "}]";
        } else {
            os << "[" << w[i] << "w" << (i + 1) << "]";
        }
    }
    return os.str();
}

std::string term_str(const RelTerm& t, bool omit_weights, bool tex) {
    std::ostringstream os;
    bool printed = false;
    if (t.coeff != 1) {
        os << t.coeff.str();
        printed = true;
    }
    if (!omit_weights) {
        std::string w = weight_str(t.weight, tex);
        if (!w.empty()) {
            os << w;
            printed = true;
        }
    }
    for (const auto& [k, e] : t.sym) {
        os << sym_str(k, e, tex);
        printed = true;
    }
    if (!printed) os << '1';
    return os.str();
}

std::string side_str(const std::vector<RelTerm>& side, bool omit_weights, bool tex) {
    if (side.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < side.size(); ++i) {
        if (i) os << " + ";
        os << term_str(side[i], omit_weights, tex);
    }
    return os.str();
}

}  // namespace

std::string RelationExpr::str(bool omit_weights) const {
    return side_str(lhs, omit_weights, false) + " = " + side_str(rhs, omit_weights, false);
}

std::string RelationExpr::latex(bool omit_weights) const {
    return side_str(lhs, omit_weights, true) + " = " + side_str(rhs, omit_weights, true);
}

RelationExpr tq_relation(const CartanData& cd, const QCharResult& qc, int i0, int r0) {
    cd.require_node(i0);
    if (qc.dominant.size() > 1) {
        throw std::invalid_argument("tq_relation needs a unique dominant monomial");
    }
    if (qc.chi == Laurent::unit()) {
        RelationExpr triv;
        triv.lhs.push_back(RelTerm{});
        triv.rhs.push_back(RelTerm{});
        return triv;
    }
    // Substitute each monomial and collect the common denominator: the
    // pointwise maximum of L^+ inverse powers over all monomials.
    struct Image {
        std::map<SymKey, int> sym;
        std::vector<int> weight;
        Int coeff;
    };
    std::vector<Image> images;
    std::map<SymKey, int> lcm;
    for (const auto& [m, c] : qc.chi.terms()) {
        Image img;
        img.coeff = c;
        img.weight.assign(cd.rank(), 0);
        for (const auto& [k, e] : m.exponents()) {
            img.weight[k.node - 1] += e;
            int d = cd.sym(k.node);
            SymKey num{Kind::Lplus, k.node, k.shift - d};
            SymKey den{Kind::Lplus, k.node, k.shift + d};
            img.sym[num] += e;
            img.sym[den] -= e;
        }
        for (auto it = img.sym.begin(); it != img.sym.end();) {
            if (it->second == 0) {
                it = img.sym.erase(it);
            } else {
                if (it->second < 0) {
                    int need = -it->second;
                    if (lcm[it->first] < need) lcm[it->first] = need;
                }
                ++it;
            }
        }
        images.push_back(std::move(img));
    }

    RelationExpr rel;
    RelTerm l;
    l.mul_sym(Kind::V, i0, r0);
    for (const auto& [k, e] : lcm) l.mul_sym(k.kind, k.node, k.shift, e);
    rel.lhs.push_back(std::move(l));
    for (const auto& img : images) {
        RelTerm t;
        t.coeff = img.coeff;
        t.weight = img.weight;
        t.sym = img.sym;
        for (const auto& [k, e] : lcm) t.mul_sym(k.kind, k.node, k.shift, e);
        for (const auto& [k, e] : t.sym) {
            if (e < 0) throw std::runtime_error("uncleared denominator in TQ substitution");
        }
        rel.rhs.push_back(std::move(t));
    }
    rel.normalize();
    return rel;
}

PsiWeight psi_tilde(const CartanData& cd, int i, int r) {
    cd.require_node(i);
    PsiWeight w;
    w.psi.mul_var(i, r, -1);
    int di = cd.sym(i);
    for (int j = 1; j <= cd.rank(); ++j) {
        if (j == i) continue;
        switch (cd.cartan(i, j)) {
            case -1:
                w.psi.mul_var(j, r + di, 1);
                break;
            case -2:
                w.psi.mul_var(j, r, 1);
                w.psi.mul_var(j, r + 2, 1);
                break;
            case -3:
                w.psi.mul_var(j, r - 1, 1);
                w.psi.mul_var(j, r + 1, 1);
                w.psi.mul_var(j, r + 3, 1);
                break;
            default:
                break;
        }
    }
    return w;
}

PsiWeight lstar_psi(const CartanData& cd, int i, int r) {
    cd.require_node(i);
    PsiWeight w;
    w.psi.mul_var(i, r, -1);
    for (int j = 1; j <= cd.rank(); ++j) {
        if (j != i && cd.cartan(i, j) < 0) w.psi.mul_var(j, r - cd.b(j, i), 1);
    }
    return w;
}

RelationExpr qq_system(const CartanData& cd, int i, int r) {
    cd.require_node(i);
    int di = cd.sym(i);
    RelationExpr rel;
    RelTerm t1, t2;
    t1.mul_sym(Kind::Lplus, i, r - di).mul_sym(Kind::Ltilde, i, r + di);
    t2.coeff = -1;
    t2.mul_sym(Kind::Lplus, i, r + di).mul_sym(Kind::Ltilde, i, r - di);
    rel.lhs = {t1, t2};
    RelTerm rhs;
    rhs.mul_sym(Kind::Kconst, 0, 0);
    for (int j = 1; j <= cd.rank(); ++j) {
        if (j == i) continue;
        int c = cd.cartan(i, j);
        for (int m = 0; c < 0 && m < -c; ++m) {
            rhs.mul_sym(Kind::Lplus, j, r + c + 1 + 2 * m);
        }
    }
    rel.rhs = {rhs};
    rel.note = "K constant; its sl2 value (1-[-w1]^2)^{-1} lives in a completion";
    rel.normalize();
    return rel;
}

RelationExpr qq_star_relation(const CartanData& cd, int i, int r) {
    cd.require_node(i);
    RelationExpr rel;
    RelTerm l;
    l.mul_sym(Kind::Lstar, i, r).mul_sym(Kind::Lplus, i, r);
    rel.lhs = {l};

    RelTerm t1;
    RelTerm t2;
    std::vector<int> neg_alpha(cd.rank(), 0);
    for (int j = 1; j <= cd.rank(); ++j) neg_alpha[j - 1] = -cd.cartan(j, i);
    t2.mul_weight(neg_alpha);
    for (int j = 1; j <= cd.rank(); ++j) {
        if (j == i || cd.cartan(i, j) >= 0) continue;
        t1.mul_sym(Kind::Lplus, j, r - cd.b(j, i));
        t2.mul_sym(Kind::Lplus, j, r + cd.b(i, j));
    }
    rel.rhs = {t1, t2};
    rel.normalize();
    return rel;
}

RelationExpr qq_star_as_tq_sl2(int r) {
    CartanData a1 = cartan_data("A1");
    RelationExpr qq = qq_star_relation(a1, 1, r);
    auto rewrite = [&](RelTerm t) {
        // Lstar(1,r) -> [-w] V(1,r-1) Lplus(1,r-2)^{-1}
        auto it = t.sym.find(SymKey{Kind::Lstar, 1, r});
        if (it != t.sym.end()) {
            int e = it->second;
            t.sym.erase(it);
            t.mul_sym(Kind::V, 1, r - 1, e);
            t.mul_sym(Kind::Lplus, 1, r - 2, -e);
            t.mul_weight(std::vector<int>{-e});
        }
        // [-alpha_1] = [-2w] -> [-2w] Lplus(1,r+2) Lplus(1,r-2)^{-1}
        if (!t.weight.empty() && t.weight[0] <= -2) {
            int times = (-t.weight[0]) / 2;
            t.mul_sym(Kind::Lplus, 1, r + 2, times);
            t.mul_sym(Kind::Lplus, 1, r - 2, -times);
        }
        // multiply by [w] Lplus(1,r-2)
        t.mul_sym(Kind::Lplus, 1, r - 2, 1);
        t.mul_weight(std::vector<int>{1});
        for (const auto& [k, e] : t.sym) {
            if (e < 0) throw std::logic_error("dictionary left a negative exponent");
        }
        return t;
    };
    RelationExpr out;
    for (const auto& t : qq.lhs) out.lhs.push_back(rewrite(t));
    for (const auto& t : qq.rhs) out.rhs.push_back(rewrite(t));
    out.normalize();
    return out;
}

std::complex<double> Driving::eval(std::complex<double> w) const {
    std::complex<double> r = scale;
    for (auto z : zeros_num) r *= (1.0 - w / z);
    for (auto z : zeros_den) r /= (1.0 - w / z);
    return r;
}

BetheContext BetheContext::make(const CartanData& cd, std::complex<double> q) {
    BetheContext ctx;
    ctx.cd = cd;
    ctx.q = q;
    ctx.roots.assign(cd.rank() + 1, {});
    ctx.twist.assign(cd.rank() + 1, std::complex<double>(1.0, 0.0));
    ctx.driving.assign(cd.rank() + 1, std::nullopt);
    return ctx;
}

std::complex<double> BetheContext::v(int i) const {
    std::complex<double> r(1.0, 0.0);
    for (int j = 1; j <= cd.rank(); ++j) {
        int c = cd.cartan(i, j);
        r *= std::pow(twist[j], c);
    }
    return r;
}

std::complex<double> BetheContext::baxter(int j, std::complex<double> z) const {
    std::complex<double> r(1.0, 0.0);
    for (auto w : roots[j]) {
        if (w == std::complex<double>(0.0, 0.0)) {
            throw std::invalid_argument("Baxter roots must be nonzero");
        }
        r *= (1.0 - z / w);
    }
    return r;
}

std::complex<double> bethe_residual(const BetheContext& ctx, int i, std::complex<double> w) {
    ctx.cd.require_node(i);
    if (std::abs(ctx.twist[i]) == 0.0) throw std::invalid_argument("twist must be nonzero");
    std::complex<double> prod(1.0, 0.0);
    for (int j = 1; j <= ctx.cd.rank(); ++j) {
        int bij = ctx.cd.b(i, j);
        if (bij == 0) continue;  // disconnected: the ratio cancels exactly
        std::complex<double> znum = w * std::pow(ctx.q, bij);
        std::complex<double> zden = w * std::pow(ctx.q, -bij);
        // A root q^{+-B_{ij}}-shifted onto another root (string states) is
        // not generic: the evaluation is signalled, never silently skipped.
        for (auto r : ctx.roots[j]) {
            if (std::abs(1.0 - zden / r) < ctx.collision_tol ||
                std::abs(1.0 - znum / r) < ctx.collision_tol) {
                throw PoleCollision("root q^{B}-shifted onto another root (node " +
                                    std::to_string(j) + ")");
            }
        }
        prod *= ctx.baxter(j, znum) / ctx.baxter(j, zden);
    }
    if (ctx.driving[i]) {
        for (auto z : ctx.driving[i]->zeros_num) {
            if (std::abs(1.0 - w / z) < ctx.collision_tol) {
                throw PoleCollision("root collides with a driving zero");
            }
        }
        for (auto z : ctx.driving[i]->zeros_den) {
            if (std::abs(1.0 - w / z) < ctx.collision_tol) {
                throw PoleCollision("root collides with a driving pole");
            }
        }
        prod *= ctx.driving[i]->eval(w);
    }
    return prod / ctx.v(i) + 1.0;
}

}  // namespace qaffine::relations
