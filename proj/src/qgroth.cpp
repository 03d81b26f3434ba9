#include "qaffine/qgroth.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qaffine/qchar.hpp"

namespace qaffine::qgroth {

THalf::THalf(Int c) {
    if (c != 0) c_.emplace(0, std::move(c));
}

THalf THalf::tpow(int half) {
    THalf r;
    r.c_.emplace(half, 1);
    return r;
}

THalf& THalf::add(int half, const Int& v) {
    if (v == 0) return *this;
    auto [it, inserted] = c_.emplace(half, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
    return *this;
}

THalf THalf::operator+(const THalf& o) const {
    THalf r = *this;
    for (const auto& [h, v] : o.c_) r.add(h, v);
    return r;
}

THalf THalf::operator-(const THalf& o) const {
    THalf r = *this;
    for (const auto& [h, v] : o.c_) r.add(h, -v);
    return r;
}

THalf THalf::operator*(const THalf& o) const {
    THalf r;
    for (const auto& [h1, v1] : c_) {
        for (const auto& [h2, v2] : o.c_) r.add(h1 + h2, v1 * v2);
    }
    return r;
}

THalf THalf::operator-() const {
    THalf r;
    for (const auto& [h, v] : c_) r.c_.emplace(h, -v);
    return r;
}

THalf THalf::bar() const {
    THalf r;
    for (const auto& [h, v] : c_) r.c_.emplace(-h, v);
    return r;
}

THalf THalf::shift(int half) const {
    THalf r;
    for (const auto& [h, v] : c_) r.c_.emplace(h + half, v);
    return r;
}

Int THalf::eval_one() const {
    Int s = 0;
    for (const auto& [h, v] : c_) s += v;
    return s;
}

bool THalf::negative_powers_only() const {
    for (const auto& [h, v] : c_) {
        if (h >= 0) return false;
    }
    return true;
}

std::string THalf::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.str();
        if (it->first != 0) {
            os << "*t^";
            if (it->first % 2 == 0) {
                os << it->first / 2;
            } else {
                os << '(' << it->first << "/2)";
            }
        }
    }
    return os.str();
}

KtElement KtElement::unit() {
    KtElement e;
    e.add_term({}, THalf(Int(1)));
    return e;
}

KtElement KtElement::generator(int r) {
    KtElement e;
    e.add_term({r}, THalf(Int(1)));
    return e;
}

KtElement& KtElement::add_term(const Word& w, const THalf& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
    return *this;
}

KtElement KtElement::operator+(const KtElement& o) const {
    KtElement r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
}

KtElement KtElement::operator-(const KtElement& o) const {
    KtElement r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
}

KtElement KtElement::scale(const THalf& c) const {
    KtElement r;
    for (const auto& [w, v] : t_) r.add_term(w, v * c);
    return r;
}

std::string KtElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t_) {
        if (!first) os << "  +  ";
        first = false;
        os << '(' << c.str() << ")";
        for (int r : w) os << "*g" << r;
    }
    return os.str();
}

int npair(int r) {
    if (r <= 0 || r % 2 != 0) return 0;
    return (r / 2) % 2 == 0 ? 2 : -2;
}

namespace {

// Rewrites an arbitrary word into the normal-ordered basis.
KtElement normal_order(const Word& w) {
    KtElement out;
    std::vector<std::pair<Word, THalf>> stack;
    stack.emplace_back(w, THalf(Int(1)));
    while (!stack.empty()) {
        auto [cur, coef] = std::move(stack.back());
        stack.pop_back();
        size_t pos = 0;
        bool sorted = true;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                pos = i;
                sorted = false;
                break;
            }
        }
        if (sorted) {
            out.add_term(cur, coef);
            continue;
        }
        int a = cur[pos], b = cur[pos + 1];  // a > b
        // g_a g_b = t^{-N(a-b)} g_b g_a - t^{-N(a-b)} d_{a-b,2} (1 - t^{-2})
        Word swapped = cur;
        std::swap(swapped[pos], swapped[pos + 1]);
        THalf tw = THalf::tpow(-2 * npair(a - b));
        stack.emplace_back(std::move(swapped), coef * tw);
        if (a - b == 2) {
            Word removed;
            removed.reserve(cur.size() - 2);
            for (size_t i = 0; i < cur.size(); ++i) {
                if (i != pos && i != pos + 1) removed.push_back(cur[i]);
            }
            THalf corr = tw * (THalf(Int(1)) - THalf::tpow(-4));
            stack.emplace_back(std::move(removed), coef * (-corr));
        }
    }
    return out;
}

}  // namespace

KtElement star(const KtElement& a, const KtElement& b) {
    KtElement out;
    for (const auto& [w1, c1] : a.terms()) {
        for (const auto& [w2, c2] : b.terms()) {
            Word cat = w1;
            cat.insert(cat.end(), w2.begin(), w2.end());
            KtElement no = normal_order(cat);
            for (const auto& [w, c] : no.terms()) out.add_term(w, c * (c1 * c2));
        }
    }
    return out;
}

KtElement bar(const KtElement& x) {
    KtElement out;
    for (const auto& [w, c] : x.terms()) {
        Word rev(w.rbegin(), w.rend());
        KtElement no = normal_order(rev);
        for (const auto& [w2, c2] : no.terms()) out.add_term(w2, c2 * c.bar());
    }
    return out;
}

KtElement standard_class(const Word& shifts) {
    if (shifts.empty()) return KtElement::unit();
    Word asc = shifts;
    std::sort(asc.begin(), asc.end());
    // Normalization: bar(M) = M + lower requires the half t-power
    // (1/2) sum_{i<j} N(r_j - r_i) on the descending product.
    int total = 0;
    for (size_t i = 0; i < asc.size(); ++i) {
        for (size_t j = i + 1; j < asc.size(); ++j) total += npair(asc[j] - asc[i]);
    }
    Word desc(asc.rbegin(), asc.rend());
    return normal_order(desc).scale(THalf::tpow(total));
}

namespace {

// Lower closure: words reachable by deleting value pairs {x, x+2}.
std::set<Word> lower_closure(const Word& top) {
    std::set<Word> seen;
    std::vector<Word> queue{top};
    seen.insert(top);
    while (!queue.empty()) {
        Word w = std::move(queue.back());
        queue.pop_back();
        for (size_t i = 0; i < w.size(); ++i) {
            for (size_t j = i + 1; j < w.size(); ++j) {
                if (w[j] - w[i] != 2) continue;
                Word child;
                for (size_t k = 0; k < w.size(); ++k) {
                    if (k != i && k != j) child.push_back(w[k]);
                }
                if (seen.insert(child).second) queue.push_back(child);
            }
        }
    }
    return seen;
}

// Coefficient of basis word u in x.
THalf word_coeff(const KtElement& x, const Word& u) {
    auto it = x.terms().find(u);
    return it == x.terms().end() ? THalf() : it->second;
}

// Express x in the standard basis {M_u : u in closure}; the expansion of
// M_u is u plus strictly shorter words, so peel by decreasing length.
std::map<Word, THalf> to_standard_basis(KtElement x, const std::map<Word, KtElement>& standards) {
    std::vector<Word> order;
    for (const auto& [u, m] : standards) order.push_back(u);
    std::sort(order.begin(), order.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::map<Word, THalf> out;
    for (const Word& u : order) {
        THalf cu = word_coeff(x, u);
        if (cu.is_zero()) continue;
        const KtElement& mu = standards.at(u);
        THalf lead = word_coeff(mu, u);
        // Leading coefficient of a standard class is a single t-power.
        if (lead.coeffs().size() != 1 || lead.coeffs().begin()->second != 1) {
            throw std::logic_error("standard class leading coefficient is not a t-power");
        }
        THalf q = cu.shift(-lead.coeffs().begin()->first);
        out[u] = q;
        x = x - mu.scale(q);
    }
    if (!x.is_zero()) throw std::logic_error("element not in the span of standard classes");
    return out;
}

}  // namespace

KtElement canonical_class(const Word& shifts) {
    if (shifts.empty()) throw std::invalid_argument("canonical_class needs a nonempty multiset");
    Word top = shifts;
    std::sort(top.begin(), top.end());
    std::map<Word, KtElement> standards;
    for (const Word& u : lower_closure(top)) standards.emplace(u, standard_class(u));

    KtElement b = standards.at(top);
    for (int guard = 0; guard < 4096; ++guard) {
        KtElement delta = bar(b) - b;
        if (delta.is_zero()) {
            // Verify the triangular coefficients land in t^{-1} Z[t^{-1}].
            auto coeffs = to_standard_basis(b, standards);
            for (const auto& [u, c] : coeffs) {
                if (u == top) continue;
                if (!c.is_zero() && !c.negative_powers_only()) {
                    throw std::logic_error("canonical coefficient outside t^{-1}Z[t^{-1}]");
                }
            }
            return b;
        }
        auto dc = to_standard_basis(delta, standards);
        // Correct at a maximal-length word with nonzero defect.
        const Word* pick = nullptr;
        for (const auto& [u, c] : dc) {
            if (c.is_zero()) continue;
            if (!pick || u.size() > pick->size() || (u.size() == pick->size() && u < *pick)) {
                pick = &u;
            }
        }
        if (!pick) throw std::logic_error("bar defect with empty expansion");
        const THalf& d = dc.at(*pick);
        // delta_u is bar-antisymmetric; its strictly negative part c fixes
        // c - bar(c) = delta_u.
        THalf c;
        for (const auto& [h, v] : d.coeffs()) {
            if (h == 0) throw std::logic_error("bar defect has a constant term");
            if (h < 0) c.add(h, v);
        }
        if ((c - c.bar() - d).is_zero() == false) {
            throw std::logic_error("bar defect is not antisymmetric");
        }
        b = b + standards.at(*pick).scale(c);
    }
    throw std::runtime_error("canonical basis recursion did not stabilize");
}

Laurent eval_t1(const KtElement& x) {
    Laurent out;
    CartanData a1 = cartan_data("A1");
    for (const auto& [w, c] : x.terms()) {
        Laurent prod = Laurent::unit();
        for (int r : w) prod = prod * string_character_terms(a1, {1, r, 1});
        out = out + prod * Laurent(c.eval_one());
    }
    return out;
}

}  // namespace qaffine::qgroth
