#include "qaffine/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qaffine {

Monomial Monomial::var(int node, int shift, int exp) {
    Monomial m;
    m.mul_var(node, shift, exp);
    return m;
}

int Monomial::exponent(int node, int shift) const {
    auto it = e_.find({node, shift});
    return it == e_.end() ? 0 : it->second;
}

bool Monomial::dominant() const {
    for (const auto& [k, v] : e_) {
        if (v < 0) return false;
    }
    return true;
}

bool Monomial::antidominant() const {
    for (const auto& [k, v] : e_) {
        if (v > 0) return false;
    }
    return true;
}

Monomial& Monomial::mul_var(int node, int shift, int exp) {
    if (exp == 0) return *this;
    VarKey k{node, shift};
    auto [it, inserted] = e_.emplace(k, exp);
    if (!inserted) {
        it->second += exp;
        if (it->second == 0) e_.erase(it);
    }
    return *this;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [k, v] : o.e_) r.mul_var(k.node, k.shift, v);
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (const auto& [k, v] : e_) r.e_.emplace(k, -v);
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r;
    if (k == 0) return r;
    for (const auto& [key, v] : e_) r.e_.emplace(key, v * k);
    return r;
}

int Monomial::node_degree(int node) const {
    int d = 0;
    for (const auto& [k, v] : e_) {
        if (k.node == node) d += v;
    }
    return d;
}

Monomial Monomial::node_part(int node) const {
    Monomial r;
    for (const auto& [k, v] : e_) {
        if (k.node == node) r.e_.emplace(k, v);
    }
    return r;
}

bool Monomial::node_dominant(int node) const {
    for (const auto& [k, v] : e_) {
        if (k.node == node && v < 0) return false;
    }
    return true;
}

bool Monomial::node_antidominant(int node) const {
    for (const auto& [k, v] : e_) {
        if (k.node == node && v > 0) return false;
    }
    return true;
}

std::string Monomial::str(const std::string& family) const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : e_) {
        if (!first) os << '*';
        first = false;
        os << family << '[' << k.node << ',' << k.shift << ']';
        if (v != 1) os << '^' << v;
    }
    return os.str();
}

bool is_dominant(const Monomial& m) { return m.dominant(); }

Laurent::Laurent(Int c) {
    if (c != 0) t_.emplace(Monomial(), std::move(c));
}

Laurent Laurent::term(const Monomial& m, Int c) {
    Laurent p;
    p.add_term(m, c);
    return p;
}

Int Laurent::total_multiplicity() const {
    Int s = 0;
    for (const auto& [m, c] : t_) s += c;
    return s;
}

Int Laurent::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Int(0) : it->second;
}

Laurent& Laurent::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return *this;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [m1, c1] : t_) {
        for (const auto& [m2, c2] : o.t_) {
            r.add_term(m1 * m2, c1 * c2);
        }
    }
    return r;
}

Laurent Laurent::operator*(const Monomial& m) const {
    Laurent r;
    for (const auto& [m1, c1] : t_) r.add_term(m1 * m, c1);
    return r;
}

std::vector<std::pair<Monomial, Int>> Laurent::dominant_terms() const {
    std::vector<std::pair<Monomial, Int>> out;
    for (const auto& [m, c] : t_) {
        if (m.dominant()) out.emplace_back(m, c);
    }
    return out;
}

std::string Laurent::str(const std::string& family) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || m.is_unit()) {
            os << c.str();
            if (!m.is_unit()) os << '*';
        }
        if (!m.is_unit()) os << m.str(family);
    }
    return os.str();
}

PsiWeight PsiWeight::operator*(const PsiWeight& o) const {
    PsiWeight r;
    r.psi = psi * o.psi;
    if (omega_tracked || o.omega_tracked) {
        r.omega_tracked = true;
        size_t n = std::max(omega.size(), o.omega.size());
        r.omega.assign(n, 0);
        for (size_t i = 0; i < omega.size(); ++i) r.omega[i] += omega[i];
        for (size_t i = 0; i < o.omega.size(); ++i) r.omega[i] += o.omega[i];
    }
    return r;
}

PsiWeight PsiWeight::inverse() const {
    PsiWeight r;
    r.psi = psi.inverse();
    r.omega_tracked = omega_tracked;
    r.omega = omega;
    for (int& v : r.omega) v = -v;
    return r;
}

bool PsiWeight::operator==(const PsiWeight& o) const {
    if (!(psi == o.psi)) return false;
    if (omega_tracked != o.omega_tracked) return false;
    return !omega_tracked || omega == o.omega;
}

std::vector<int> PsiWeight::degree(const CartanData& cd) const {
    std::vector<int> d(cd.rank());
    for (int i = 1; i <= cd.rank(); ++i) d[i - 1] = psi.node_degree(i);
    return d;
}

Monomial root_monomial(const CartanData& cd, int i, int r) {
    cd.require_node(i);
    int di = cd.sym(i);
    Monomial a = Monomial::var(i, r - di) * Monomial::var(i, r + di);
    for (int j = 1; j <= cd.rank(); ++j) {
        if (j == i) continue;
        switch (cd.cartan(j, i)) {
            case -1:
                a.mul_var(j, r, -1);
                break;
            case -2:
                a.mul_var(j, r - 1, -1);
                a.mul_var(j, r + 1, -1);
                break;
            case -3:
                a.mul_var(j, r - 2, -1);
                a.mul_var(j, r, -1);
                a.mul_var(j, r + 2, -1);
                break;
            default:
                break;
        }
    }
    return a;
}

std::optional<std::map<VarKey, int>> nakajima_leq(const CartanData& cd, const Monomial& m1,
                                                  const Monomial& m2) {
    // Solve m2 * m1^{-1} = prod A_{j,b}^{c_{j,b}} with c >= 0.  Each A_{j,b}
    // is the unique generator whose top key is (j, b + d_j), and all its
    // other factors sit at strictly smaller spectral exponents, so peeling
    // keys from the top determines the certificate or fails.
    Monomial ratio = m2 * m1.inverse();
    std::map<VarKey, int> cert;
    while (!ratio.is_unit()) {
        // Highest spectral exponent overall; any node at that level works
        // since cross-node factors of A sit strictly lower.
        VarKey top = ratio.exponents().begin()->first;
        for (const auto& [k, v] : ratio.exponents()) {
            if (k.shift > top.shift) top = k;
        }
        int e = ratio.exponent(top.node, top.shift);
        if (e < 0) return std::nullopt;
        Monomial gen = root_monomial(cd, top.node, top.shift - cd.sym(top.node));
        ratio = ratio * gen.pow(e).inverse();
        if (ratio.exponent(top.node, top.shift) != 0) return std::nullopt;
        cert[{top.node, top.shift - cd.sym(top.node)}] += e;
    }
    return cert;
}

}  // namespace qaffine
