#include "qaffine/cluster.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qaffine::cluster {

ClusterPoly::ClusterPoly(int nvars, Int c) : n_(nvars) {
    if (c != 0) t_.emplace(std::vector<int>(nvars, 0), std::move(c));
}

ClusterPoly ClusterPoly::variable(int idx, int nvars) {
    ClusterPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e.at(idx - 1) = 1;
    p.t_.emplace(std::move(e), 1);
    return p;
}

void ClusterPoly::add_term(const std::vector<int>& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

ClusterPoly ClusterPoly::operator+(const ClusterPoly& o) const {
    ClusterPoly r = *this;
    if (r.n_ == 0) r.n_ = o.n_;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

ClusterPoly ClusterPoly::operator*(const ClusterPoly& o) const {
    ClusterPoly r(std::max(n_, o.n_));
    std::vector<int> e;
    for (const auto& [e1, c1] : t_) {
        for (const auto& [e2, c2] : o.t_) {
            e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

std::optional<ClusterPoly> ClusterPoly::divide_exact(const ClusterPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    ClusterPoly quotient(n_);
    ClusterPoly rem = *this;
    const auto& dlead = *divisor.t_.rbegin();
    // Each step strips the leading term of the remaining quotient, so the
    // loop runs once per quotient term when the quotient exists.
    long long guard = 4096 + 64 * static_cast<long long>(t_.size());
    while (!rem.is_zero()) {
        if (--guard < 0) return std::nullopt;
        const auto& rlead = *rem.t_.rbegin();
        std::vector<int> qe = rlead.first;
        for (size_t i = 0; i < qe.size(); ++i) qe[i] -= dlead.first[i];
        Int qc = rlead.second / dlead.second;
        if (qc * dlead.second != rlead.second) return std::nullopt;
        quotient.add_term(qe, qc);
        std::vector<int> e;
        for (const auto& [de, dc] : divisor.t_) {
            e = de;
            for (size_t i = 0; i < e.size(); ++i) e[i] += qe[i];
            rem.add_term(e, -dc * qc);
        }
    }
    return quotient;
}

std::vector<int> ClusterPoly::denominator() const {
    std::vector<int> den(n_, 0);
    bool first = true;
    for (const auto& [e, c] : t_) {
        for (int i = 0; i < n_; ++i) {
            den[i] = first ? e[i] : std::min(den[i], e[i]);
        }
        first = false;
    }
    for (int& d : den) d = d < 0 ? -d : 0;
    return den;
}

bool ClusterPoly::has_monomial_denominator() const {
    // Structural: a finite Laurent representation always has one; the
    // content of the check is that the numerator over that monomial is an
    // honest polynomial.
    std::vector<int> den = denominator();
    for (const auto& [e, c] : t_) {
        for (int i = 0; i < n_; ++i) {
            if (e[i] + den[i] < 0) return false;
        }
    }
    return true;
}

std::string ClusterPoly::key() const {
    std::ostringstream os;
    for (const auto& [e, c] : t_) {
        os << c.str() << ':';
        for (int v : e) os << v << ',';
        os << ';';
    }
    return os.str();
}

std::string ClusterPoly::str(const std::vector<std::string>& names) const {
    auto name = [&](int i) {
        if (i < static_cast<int>(names.size())) return names[i];
        return "X" + std::to_string(i + 1);
    };
    if (t_.empty()) return "0";
    std::vector<int> den = denominator();
    // Numerator terms ordered by total degree, earlier variables first.
    std::vector<std::pair<std::vector<int>, Int>> terms;
    for (const auto& [e, c] : t_) {
        std::vector<int> shifted = e;
        for (int i = 0; i < n_; ++i) shifted[i] += den[i];
        terms.emplace_back(std::move(shifted), c);
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int v : a.first) da += v;
        for (int v : b.first) db += v;
        if (da != db) return da < db;
        return a.first > b.first;
    });
    std::ostringstream num;
    bool first = true;
    bool multi = terms.size() > 1;
    for (const auto& [e, c] : terms) {
        Int cc = c;
        if (first) {
            if (cc < 0) num << '-';
        } else {
            num << (cc < 0 ? " - " : " + ");
        }
        if (cc < 0) cc = -cc;
        first = false;
        bool printed = false;
        if (cc != 1) {
            num << cc.str();
            printed = true;
        }
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (printed) num << '*';
            num << name(i);
            if (e[i] != 1) num << '^' << e[i];
            printed = true;
        }
        if (!printed) num << '1';
    }
    bool hasden = std::any_of(den.begin(), den.end(), [](int d) { return d > 0; });
    if (!hasden) return num.str();
    std::ostringstream os;
    if (multi) {
        os << '(' << num.str() << ')';
    } else {
        os << num.str();
    }
    os << "/(";
    bool printed = false;
    for (int i = 0; i < n_; ++i) {
        if (den[i] == 0) continue;
        if (printed) os << '*';
        os << name(i);
        if (den[i] != 1) os << '^' << den[i];
        printed = true;
    }
    os << ')';
    return os.str();
}

void Quiver::add_arrow(int from, int to, int mult) {
    if (from == to) throw std::invalid_argument("quiver loops are not allowed");
    if (mult == 0) return;
    arrows[{from, to}] += mult;
    if (arrows[{from, to}] == 0) arrows.erase({from, to});
}

int Quiver::arrow_mult(int from, int to) const {
    auto it = arrows.find({from, to});
    return it == arrows.end() ? 0 : it->second;
}

void Quiver::mutate(int k) {
    std::map<std::pair<int, int>, int> next = arrows;
    // Composite arrows j -> k -> l become j -> l.
    for (const auto& [jk, p] : arrows) {
        if (jk.second != k) continue;
        for (const auto& [kl, q] : arrows) {
            if (kl.first != k) continue;
            next[{jk.first, kl.second}] += p * q;
        }
    }
    // Reverse arrows at k.
    for (const auto& [a, m] : arrows) {
        if (a.first == k || a.second == k) {
            next[a] -= m;
            next[{a.second, a.first}] += m;
        }
    }
    // Cancel 2-cycles, drop empties and frozen-frozen arrows.
    std::map<std::pair<int, int>, int> cleaned;
    for (const auto& [a, m] : next) {
        if (m <= 0) continue;
        if (a.first < a.second) {
            int back = 0;
            auto it = next.find({a.second, a.first});
            if (it != next.end()) back = std::max(it->second, 0);
            int c = std::min(m, back);
            if (m - c > 0) cleaned[a] = m - c;
            if (back - c > 0) cleaned[{a.second, a.first}] = back - c;
        } else if (next.find({a.second, a.first}) == next.end() ||
                   next.at({a.second, a.first}) <= 0) {
            cleaned[a] = m;
        }
    }
    arrows.clear();
    for (const auto& [a, m] : cleaned) {
        if (frozen[a.first] && frozen[a.second]) continue;
        arrows[a] = m;
    }
}

std::string Quiver::key() const {
    std::ostringstream os;
    for (const auto& [a, m] : arrows) os << a.first << '>' << a.second << 'x' << m << ';';
    return os.str();
}

Seed initial_seed(const Quiver& q) {
    Seed s;
    s.quiver = q;
    s.vars.resize(q.size + 1);
    s.labels.assign(q.size + 1, "");
    s.psi.resize(q.size + 1);
    for (int i = 1; i <= q.size; ++i) s.vars[i] = ClusterPoly::variable(i, q.size);
    return s;
}

std::string Seed::cluster_key() const {
    std::vector<std::string> mut;
    std::ostringstream os;
    for (int i = 1; i <= quiver.size; ++i) {
        if (quiver.frozen[i]) {
            os << "F" << i << '=' << vars[i].key() << '|';
        } else {
            mut.push_back(vars[i].key());
        }
    }
    std::sort(mut.begin(), mut.end());
    for (const auto& k : mut) os << k << '|';
    return os.str();
}

Seed mutate(const Seed& s, int k) {
    if (k < 1 || k > s.quiver.size) throw std::out_of_range("unknown vertex");
    if (s.quiver.frozen[k]) throw std::invalid_argument("cannot mutate a frozen vertex");
    int n = s.quiver.size;
    ClusterPoly in(s.vars[k].nvars(), 1), out(s.vars[k].nvars(), 1);
    for (int j = 1; j <= n; ++j) {
        for (int m = 0; m < s.quiver.arrow_mult(j, k); ++m) in = in * s.vars[j];
        for (int m = 0; m < s.quiver.arrow_mult(k, j); ++m) out = out * s.vars[j];
    }
    ClusterPoly numer = in + out;
    auto quotient = numer.divide_exact(s.vars[k]);
    if (!quotient) {
        throw std::runtime_error("exchange quotient is not Laurent at vertex " +
                                 std::to_string(k));
    }
    if (!((*quotient) * s.vars[k] == numer)) {
        throw std::logic_error("exchange identity failed to verify");
    }
    Seed next = s;
    next.vars[k] = *quotient;
    next.labels[k] = "";
    next.psi[k] = PsiWeight{};
    next.quiver.mutate(k);
    return next;
}

EnumerateResult enumerate_seeds(const Seed& s, long long budget) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    EnumerateResult res;
    std::set<std::string> seen_seeds;
    std::set<std::string> seen_vars;
    std::deque<Seed> frontier;
    frontier.push_back(s);
    seen_seeds.insert(s.cluster_key());

    auto record = [&](const Seed& seed) {
        res.clusters.insert(seed.cluster_key());
        for (int i = 1; i <= seed.quiver.size; ++i) {
            if (seed.quiver.frozen[i]) continue;
            if (seen_vars.insert(seed.vars[i].key()).second) {
                res.variables.push_back(seed.vars[i]);
            }
        }
    };

    while (!frontier.empty()) {
        if (res.seeds_processed >= budget) {
            res.finite = false;
            return res;
        }
        Seed cur = std::move(frontier.front());
        frontier.pop_front();
        ++res.seeds_processed;
        record(cur);
        for (int k = 1; k <= cur.quiver.size; ++k) {
            if (cur.quiver.frozen[k]) continue;
            Seed next = mutate(cur, k);
            if (seen_seeds.insert(next.cluster_key()).second) {
                frontier.push_back(next);
            }
        }
    }
    res.finite = true;
    return res;
}

bool laurent_check(const Seed& initial, const ClusterPoly& v) {
    if (v.nvars() != initial.quiver.size) return false;
    return v.has_monomial_denominator();
}

namespace {

std::string drinfeld_string(const std::vector<int>& shifts) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < shifts.size(); ++i) {
        os << "(1-zq^{" << shifts[i] << "})";
    }
    os << ']';
    return os.str();
}

PsiWeight psi_label(int node, std::vector<std::pair<int, int>> entries) {
    PsiWeight w;
    for (auto [shift, exp] : entries) w.psi.mul_var(node, shift, exp);
    return w;
}

}  // namespace

std::vector<std::string> paper_seed_names() {
    return {"a2",       "a3",          "single",       "sl3_CM",
            "sl2_CZminus", "sl2_CZ",   "sl3_CZminus",  "sl2_Ohat_plus",
            "Gamma_inf_sl2", "Gamma_inf_sl3", "Gamma_inf_prime_sl2"};
}

Seed paper_seed(const std::string& name, int length) {
    auto need_length = [&](int min) {
        if (length < min) {
            throw std::invalid_argument("seed " + name + " needs --length >= " +
                                        std::to_string(min));
        }
    };

    if (name == "a2") {
        Quiver q;
        q.size = 2;
        q.frozen = {false, false, false};
        q.add_arrow(1, 2);
        return initial_seed(q);
    }
    if (name == "a3") {
        Quiver q;
        q.size = 3;
        q.frozen = {false, false, false, false};
        q.add_arrow(1, 2);
        q.add_arrow(2, 3);
        return initial_seed(q);
    }
    if (name == "single") {
        Quiver q;
        q.size = 1;
        q.frozen = {false, false};
        return initial_seed(q);
    }
    if (name == "sl3_CM") {
        // Square quiver: frozen [W1], [W2]; mutable [V1(1)], [V2(q)].
        // Arrows: W1 -> V1 -> V2 -> W1 and W2 -> V2.
        Quiver q;
        q.size = 4;
        q.frozen = {false, false, false, true, true};  // 3 = W1, 4 = W2
        q.add_arrow(3, 1);
        q.add_arrow(1, 2);
        q.add_arrow(2, 3);
        q.add_arrow(4, 2);
        Seed s = initial_seed(q);
        s.labels[1] = "[V_1(1)]";
        s.labels[2] = "[V_2(q)]";
        s.labels[3] = "[W_1]";
        s.labels[4] = "[W_2]";
        return s;
    }
    if (name == "sl2_CZminus") {
        // [1-z] <- [(1-z)(1-zq^{-2})] <- ... nested Kirillov-Reshetikhin
        // classes; the window boundary (deepest class) is frozen.
        need_length(2);
        Quiver q;
        q.size = length;
        q.frozen.assign(length + 1, false);
        q.frozen[length] = true;
        for (int r = 2; r <= length; ++r) q.add_arrow(r, r - 1);
        Seed s = initial_seed(q);
        for (int r = 1; r <= length; ++r) {
            std::vector<int> shifts;
            for (int j = 0; j < r; ++j) shifts.push_back(-2 * j);
            s.labels[r] = drinfeld_string(shifts);
            for (int j = 0; j < r; ++j) s.psi[r].psi.mul_var(1, -2 * j, 1);
        }
        return s;
    }
    if (name == "sl2_CZ") {
        // [1-z] <- [(1-z)(1-zq^{-2})] -> [(1-zq^2)(1-z)(1-zq^{-2})] <- ...
        // Vertices alternately extend the segment down and up; arrow
        // directions alternate as well.
        need_length(2);
        Quiver q;
        q.size = length;
        q.frozen.assign(length + 1, false);
        q.frozen[length] = true;
        for (int r = 2; r <= length; ++r) {
            if (r % 2 == 0) {
                q.add_arrow(r, r - 1);
            } else {
                q.add_arrow(r - 1, r);
            }
        }
        Seed s = initial_seed(q);
        for (int r = 1; r <= length; ++r) {
            int lo = -2 * ((r) / 2);
            int hi = 2 * ((r - 1) / 2);
            std::vector<int> shifts;
            for (int v = hi; v >= lo; v -= 2) shifts.push_back(v);
            s.labels[r] = drinfeld_string(shifts);
            for (int v : shifts) s.psi[r].psi.mul_var(1, v, 1);
        }
        return s;
    }
    if (name == "sl3_CZminus") {
        // Two-row quiver; row 1 carries W_r^{(1)}, row 2 carries W_r^{(2)}.
        // Vertex numbering: bottom row r = 1..length at 2r-1, top row at 2r.
        need_length(2);
        Quiver q;
        q.size = 2 * length;
        q.frozen.assign(2 * length + 1, false);
        q.frozen[2 * length - 1] = true;
        q.frozen[2 * length] = true;
        auto bot = [](int r) { return 2 * r - 1; };
        auto top = [](int r) { return 2 * r; };
        for (int r = 1; r <= length; ++r) {
            if (r + 1 <= length) {
                q.add_arrow(bot(r + 1), bot(r));  // leftward in each row
                q.add_arrow(top(r + 1), top(r));
                q.add_arrow(top(r), bot(r + 1));  // down-diagonal
            }
            q.add_arrow(bot(r), top(r));  // up-diagonal W_r^(1) -> W_r^(2)
        }
        Seed s = initial_seed(q);
        for (int r = 1; r <= length; ++r) {
            std::vector<int> s1, s2;
            for (int j = 0; j < r; ++j) {
                s1.push_back(-2 * j);
                s2.push_back(-2 * j - 1);
            }
            s.labels[bot(r)] = "W_" + std::to_string(r) + "^{(1)}=" + drinfeld_string(s1);
            s.labels[top(r)] = "W_" + std::to_string(r) + "^{(2)}=" + drinfeld_string(s2);
            for (int v : s1) s.psi[bot(r)].psi.mul_var(1, v, 1);
            for (int v : s2) s.psi[top(r)].psi.mul_var(2, v, 1);
        }
        return s;
    }
    if (name == "sl2_Ohat_plus") {
        // Evaluation Verma classes, arrows pointing to lower r.
        need_length(2);
        Quiver q;
        q.size = length;
        q.frozen.assign(length + 1, false);
        q.frozen[length] = true;
        for (int r = 2; r <= length; ++r) q.add_arrow(r, r - 1);
        Seed s = initial_seed(q);
        for (int r = 1; r <= length; ++r) {
            s.labels[r] = "[L^b(q^{-" + std::to_string(r) + "}(1-q^{" + std::to_string(2 * r) +
                          "}z)/(1-z))]";
        }
        return s;
    }
    if (name == "Gamma_inf_sl2") {
        // ... -> [L(Psi_{1,q^{2r}})] -> [L(Psi_{1,q^{2r+2}})] -> ...
        need_length(3);
        Quiver q;
        q.size = length;
        q.frozen.assign(length + 1, false);
        q.frozen[1] = true;
        q.frozen[length] = true;
        for (int r = 1; r < length; ++r) q.add_arrow(r, r + 1);
        Seed s = initial_seed(q);
        int mid = (length + 1) / 2;
        for (int r = 1; r <= length; ++r) {
            int shift = 2 * (r - mid);
            s.labels[r] = "[L(Psi_{1,q^{" + std::to_string(shift) + "}})]";
            s.psi[r] = psi_label(1, {{shift, 1}});
        }
        return s;
    }
    if (name == "Gamma_inf_sl3") {
        // Two-row periodic quiver: rightward arrows within rows, diagonals
        // to the other row pointing one step left.
        need_length(2);
        Quiver q;
        q.size = 2 * length;
        q.frozen.assign(2 * length + 1, false);
        auto rowpos = [&](int row, int r) { return 2 * (r - 1) + row; };  // row 1 or 2
        q.frozen[rowpos(1, 1)] = q.frozen[rowpos(2, 1)] = true;
        q.frozen[rowpos(1, length)] = q.frozen[rowpos(2, length)] = true;
        for (int r = 1; r < length; ++r) {
            q.add_arrow(rowpos(1, r), rowpos(1, r + 1));
            q.add_arrow(rowpos(2, r), rowpos(2, r + 1));
        }
        for (int r = 2; r <= length; ++r) {
            q.add_arrow(rowpos(1, r), rowpos(2, r - 1));
            q.add_arrow(rowpos(2, r), rowpos(1, r - 1));
        }
        Seed s = initial_seed(q);
        for (int r = 1; r <= length; ++r) {
            int s1 = 2 * (r - 1), s2 = 2 * (r - 1) - 1;
            s.labels[rowpos(1, r)] = "[L(Psi_{1,q^{" + std::to_string(s1) + "}})]";
            s.labels[rowpos(2, r)] = "[L(Psi_{2,q^{" + std::to_string(s2) + "}})]";
            s.psi[rowpos(1, r)] = psi_label(1, {{s1, 1}});
            s.psi[rowpos(2, r)] = psi_label(2, {{s2, 1}});
        }
        return s;
    }
    if (name == "Gamma_inf_prime_sl2") {
        // ...-> [L(Psi_{1,q^2})] -> [L(Psi_{1,1})] <- [L(Psi_{1,q^{-2}}^{-1})]
        // -> [L(Psi_{1,q^{-4}}^{-1})] -> ...; one arrow of Gamma_inf reversed.
        need_length(4);
        Quiver q;
        q.size = length;
        q.frozen.assign(length + 1, false);
        q.frozen[1] = true;
        q.frozen[length] = true;
        // Vertex r carries spectral exponent 2(2-r): decreasing to the right;
        // vertices r >= 3 carry inverted ell-weights.
        for (int r = 1; r < length; ++r) {
            if (r == 2) {
                q.add_arrow(r + 1, r);  // the reversed arrow
            } else {
                q.add_arrow(r, r + 1);
            }
        }
        Seed s = initial_seed(q);
        for (int r = 1; r <= length; ++r) {
            int shift = 2 * (2 - r);
            int exp = r <= 2 ? 1 : -1;
            s.labels[r] = "[L(Psi_{1,q^{" + std::to_string(shift) + "}}" +
                          (exp == 1 ? "" : "^{-1}") + ")]";
            s.psi[r] = psi_label(1, {{shift, exp}});
        }
        return s;
    }
    throw std::invalid_argument("unknown paper seed: " + name);
}

}  // namespace qaffine::cluster
