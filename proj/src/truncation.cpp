#include "qaffine/truncation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "qaffine/qchar.hpp"
#include "qaffine/relations.hpp"

namespace qaffine::truncation {

TruncationParam::TruncationParam(CartanData c, Monomial e) : cd(std::move(c)), exps(std::move(e)) {
    if (!exps.dominant()) {
        throw std::invalid_argument("truncation parameters need nonnegative exponents");
    }
}

std::vector<std::vector<int>> TruncationParam::root_lists() const {
    std::vector<std::vector<int>> lists(cd.rank());
    for (const auto& [k, e] : exps.exponents()) {
        for (int c = 0; c < e; ++c) lists[k.node - 1].push_back(k.shift);
    }
    return lists;
}

TruncationParam TruncationParam::from_root_lists(const CartanData& cd,
                                                 const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != cd.rank()) {
        throw std::invalid_argument("need one root list per node");
    }
    Monomial m;
    for (int i = 0; i < cd.rank(); ++i) {
        for (int s : lists[i]) m.mul_var(i + 1, s, 1);
    }
    return TruncationParam(cd, m);
}

std::vector<int> TruncationParam::coweight() const {
    std::vector<int> deg(cd.rank(), 0);
    for (const auto& [k, e] : exps.exponents()) deg[k.node - 1] += e;
    return deg;
}

std::string TruncationParam::str() const { return exps.str("Z"); }

PsiWeight lambda_monomial(const CartanData& cd, int i, int r) {
    cd.require_node(i);
    int di = cd.sym(i);
    PsiWeight w;
    w.psi.mul_var(i, r + di, 1);
    return w * relations::psi_tilde(cd, i, r - di).inverse();
}

namespace {

// Elimination order for the Lambda factorization.  Lambda_{i,b} has its
// top factor at (i, b + d_i); every other factor is strictly smaller under
// (w, s) with w(i,s) = s + 2 [d_i = 1], compared lexicographically.
struct LambdaOrder {
    const CartanData* cd;
    int w(const VarKey& k) const { return k.shift + (cd->sym(k.node) == 1 ? 2 : 0); }
    bool less(const VarKey& a, const VarKey& b) const {
        if (w(a) != w(b)) return w(a) < w(b);
        if (a.shift != b.shift) return a.shift < b.shift;
        return a.node < b.node;
    }
};

}  // namespace

std::optional<std::map<VarKey, int>> preceq(const CartanData& cd, const PsiWeight& psi,
                                            const PsiWeight& z) {
    Monomial ratio = z.psi * psi.psi.inverse();
    LambdaOrder ord{&cd};
    std::map<VarKey, int> cert;
    while (!ratio.is_unit()) {
        VarKey top = ratio.exponents().begin()->first;
        for (const auto& [k, v] : ratio.exponents()) {
            if (ord.less(top, k)) top = k;
        }
        int e = ratio.exponent(top.node, top.shift);
        if (e < 0) return std::nullopt;
        int b = top.shift - cd.sym(top.node);
        Monomial gen = lambda_monomial(cd, top.node, b).psi;
        ratio = ratio * gen.pow(e).inverse();
        if (ratio.exponent(top.node, top.shift) != 0) return std::nullopt;
        cert[{top.node, b}] += e;
    }
    return cert;
}

void ChiTableRegistry::add(const std::string& type_label, int node, Laurent base_table) {
    tables_[{type_label, node}] = std::move(base_table);
}

const Laurent* ChiTableRegistry::find(const std::string& type_label, int node) const {
    auto it = tables_.find({type_label, node});
    return it == tables_.end() ? nullptr : &it->second;
}

namespace {

Monomial zvar(std::initializer_list<std::array<int, 3>> entries) {
    Monomial m;
    for (const auto& e : entries) m.mul_var(e[0], e[1], e[2]);
    return m;
}

Laurent b2_chi(int i, int r) {
    Laurent chi;
    if (i == 1) {
        chi.add_term(zvar({{1, r, 1}}), 1);
        chi.add_term(zvar({{1, r + 4, -1}, {2, r + 2, 1}}), 1);
        chi.add_term(zvar({{2, r + 4, -1}, {1, r + 2, 1}}), 1);
        chi.add_term(zvar({{1, r + 6, -1}}), 1);
    } else {
        chi.add_term(zvar({{2, r, 1}}), 1);
        chi.add_term(zvar({{2, r + 2, -1}, {1, r, 1}, {1, r + 2, 1}}), 1);
        chi.add_term(zvar({{1, r, 1}, {1, r + 6, -1}, {2, r + 2, -1}, {2, r + 4, 1}}), 1);
        chi.add_term(zvar({{1, r + 2, 1}, {1, r + 4, -1}}), 1);
        chi.add_term(zvar({{1, r + 6, -1}, {1, r + 4, -1}, {2, r + 4, 1}}), 1);
        chi.add_term(zvar({{2, r + 6, -1}}), 1);
    }
    return chi;
}

Monomial shift_monomial(const Monomial& m, int r) {
    Monomial out;
    for (const auto& [k, e] : m.exponents()) out.mul_var(k.node, k.shift + r, e);
    return out;
}

}  // namespace

Laurent chi_table(const CartanData& cd, int i, int r, const ChiTableRegistry* user) {
    cd.require_node(i);
    if (cd.simply_laced()) {
        return fm_fundamental(cd, i, r).chi;
    }
    if (cd.label() == "B2") {
        return b2_chi(i, r);
    }
    if (user) {
        if (const Laurent* base = user->find(cd.label(), i)) {
            Laurent out;
            for (const auto& [m, c] : base->terms()) out.add_term(shift_monomial(m, r), c);
            return out;
        }
    }
    throw UnsupportedType("no chi table for type " + cd.label() +
                          "; supply one via a user table");
}

Laurent chi_Z(const CartanData& cd, const TruncationParam& Z, const ChiTableRegistry* user) {
    Laurent out = Laurent::unit();
    for (const auto& [k, e] : Z.exps.exponents()) {
        // Stored exponent s means the factor (1 - z q^s) with root q^{-s},
        // contributing chi_{i, q^{-s}}.
        Laurent f = chi_table(cd, k.node, -k.shift, user);
        for (int c = 0; c < e; ++c) out = out * f;
    }
    return out;
}

PsiWeight psi_of_monomial(const Monomial& M) {
    PsiWeight w;
    for (const auto& [k, e] : M.exponents()) w.psi.mul_var(k.node, -k.shift, e);
    return w;
}

std::vector<EnumeratedParam> conjecture_enumerate(const CartanData& cd, const TruncationParam& Z,
                                                  const ChiTableRegistry* user) {
    Laurent chi = chi_Z(cd, Z, user);
    std::map<Monomial, Int> acc;
    for (const auto& [m, c] : chi.terms()) acc[psi_of_monomial(m).psi] += c;
    std::vector<EnumeratedParam> out;
    for (const auto& [psi, mult] : acc) {
        EnumeratedParam p;
        p.psi = PsiWeight(psi);
        p.multiplicity = mult;
        p.mu = p.psi.degree(cd);
        out.push_back(std::move(p));
    }
    return out;
}

bool comes_from(const CartanData& cd, const TruncationParam& Z, const PsiWeight& target,
                const ChiTableRegistry* user) {
    Laurent chi = chi_Z(cd, Z, user);
    for (const auto& [m, c] : chi.terms()) {
        if (psi_of_monomial(m).psi == target.psi) return true;
    }
    return false;
}

std::optional<Chain> chain_search(const CartanData& cd, const TruncationParam& Z,
                                  const PsiWeight& target, int max_depth,
                                  const ChiTableRegistry* user) {
    if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
    if (!preceq(cd, target, Z.psi())) return std::nullopt;

    struct Nodeinfo {
        TruncationParam param;
        int parent;  // index into visited order, -1 for root
    };
    std::vector<Nodeinfo> nodes;
    std::map<Monomial, int> seen;
    std::deque<std::pair<int, int>> frontier;  // node index, depth
    nodes.push_back({Z, -1});
    seen[Z.exps] = 0;
    frontier.emplace_back(0, 0);

    while (!frontier.empty()) {
        auto [idx, depth] = frontier.front();
        frontier.pop_front();
        TruncationParam cur = nodes[idx].param;
        if (comes_from(cd, cur, target, user)) {
            Chain chain;
            std::vector<int> path;
            for (int at = idx; at != -1; at = nodes[at].parent) path.push_back(at);
            std::reverse(path.begin(), path.end());
            for (int at : path) chain.params.push_back(nodes[at].param);
            for (size_t k = 0; k + 1 < chain.params.size(); ++k) {
                auto cert = preceq(cd, chain.params[k + 1].psi(), chain.params[k].psi());
                chain.certificates.push_back(cert ? *cert : std::map<VarKey, int>{});
            }
            return chain;
        }
        if (depth >= max_depth) continue;
        for (const auto& [m, c] : chi_Z(cd, cur, user).dominant_terms()) {
            PsiWeight succ = psi_of_monomial(m);
            if (succ.psi == cur.exps) continue;
            if (!succ.psi.dominant()) continue;
            if (seen.count(succ.psi)) continue;
            if (!preceq(cd, target, succ)) continue;
            TruncationParam next(cd, succ.psi);
            seen[succ.psi] = static_cast<int>(nodes.size());
            nodes.push_back({next, idx});
            frontier.emplace_back(static_cast<int>(nodes.size()) - 1, depth + 1);
        }
    }
    return std::nullopt;
}

}  // namespace qaffine::truncation
