#include "qaffine/qchar.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qaffine {

namespace {

std::string spec_str(const StringSpec& s) {
    std::ostringstream os;
    os << "(node " << s.node << ", start " << s.start << ", len " << s.length << ")";
    return os.str();
}

}  // namespace

bool segments_general_position(const StringSpec& a, const StringSpec& b, int step) {
    if (a.node != b.node || a.length == 0 || b.length == 0) return true;
    if ((a.start - b.start) % (2 * step) != 0) return true;
    int a0 = a.start, a1 = a.start + 2 * step * (a.length - 1);
    int b0 = b.start, b1 = b.start + 2 * step * (b.length - 1);
    int u0 = std::min(a0, b0), u1 = std::max(a1, b1);
    // Special position: the union is a segment properly containing each.
    bool union_is_segment = (a0 <= b1 + 2 * step) && (b0 <= a1 + 2 * step);
    if (!union_is_segment) return true;
    bool proper_a = (u0 < a0) || (u1 > a1);
    bool proper_b = (u0 < b0) || (u1 > b1);
    return !(proper_a && proper_b);
}

std::vector<StringSpec> cp_segments(int node, const std::map<int, int>& points, int step) {
    // Histogram layer peeling per residue class: level-l segments are the
    // maximal runs of points with multiplicity >= l.  Layers are nested or
    // gap-separated, hence pairwise in general position.
    std::map<int, std::map<int, int>> by_residue;
    for (const auto& [r, m] : points) {
        if (m < 0) throw std::invalid_argument("negative multiplicity in segment input");
        if (m > 0) by_residue[((r % (2 * step)) + 2 * step) % (2 * step)][r] = m;
    }
    std::vector<StringSpec> out;
    for (auto& [res, pts] : by_residue) {
        int level = 1;
        for (;;) {
            bool any = false;
            int run_start = 0;
            int run_len = 0;
            int prev = 0;
            for (const auto& [r, m] : pts) {
                if (m < level) continue;
                any = true;
                if (run_len > 0 && r == prev + 2 * step) {
                    ++run_len;
                } else {
                    if (run_len > 0) out.push_back({node, run_start, run_len});
                    run_start = r;
                    run_len = 1;
                }
                prev = r;
            }
            if (run_len > 0) out.push_back({node, run_start, run_len});
            if (!any) break;
            ++level;
        }
    }
    for (size_t i = 0; i < out.size(); ++i) {
        for (size_t j = i + 1; j < out.size(); ++j) {
            if (!segments_general_position(out[i], out[j], step)) {
                throw NonGeneralPosition("strings collide: " + spec_str(out[i]) + " vs " +
                                         spec_str(out[j]));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Laurent string_character_terms(const CartanData& cd, const StringSpec& s) {
    int d = cd.sym(s.node);
    Monomial head;
    for (int l = 0; l < s.length; ++l) head.mul_var(s.node, s.start + 2 * l * d, 1);
    Laurent chi;
    Monomial m = head;
    chi.add_term(m, 1);
    for (int j = 1; j <= s.length; ++j) {
        m = m * root_monomial(cd, s.node, s.start + (2 * (s.length - j) + 1) * d).inverse();
        chi.add_term(m, 1);
    }
    return chi;
}

QCharResult sl2_string_character(int r, int k) {
    if (k < 0) throw std::invalid_argument("string length must be >= 0");
    CartanData a1 = cartan_data("A1");
    return make_qchar_result(a1, string_character_terms(a1, {1, r, k}));
}

Laurent sl2_simple_character(const std::map<int, int>& points) {
    CartanData a1 = cartan_data("A1");
    Laurent chi = Laurent::unit();
    for (const StringSpec& s : cp_segments(1, points, 1)) {
        chi = chi * string_character_terms(a1, s);
    }
    return chi;
}

namespace {

// Correction terms of the expansion of a j-dominant monomial: product of
// lifted string characters over its segment decomposition.  Each term is a
// product of A_{j,.}^{-1}; the A-count grades the expansion (A-products are
// multiplicatively independent, so the count per monomial is well defined).
struct CorrTerm {
    Int coeff;
    int a_count;
};

std::map<Monomial, CorrTerm> node_expansion_factor(const CartanData& cd, const Monomial& m,
                                                   int j) {
    std::map<int, int> points;
    Monomial part = m.node_part(j);
    for (const auto& [k, v] : part.exponents()) points[k.shift] = v;
    std::map<Monomial, CorrTerm> corr;
    corr[Monomial()] = {Int(1), 0};
    for (const StringSpec& s : cp_segments(j, points, cd.sym(j))) {
        std::vector<std::pair<Monomial, int>> seg;
        Monomial c;
        seg.emplace_back(c, 0);
        for (int t = 1; t <= s.length; ++t) {
            c = c * root_monomial(cd, j, s.start + (2 * (s.length - t) + 1) * cd.sym(j)).inverse();
            seg.emplace_back(c, t);
        }
        std::map<Monomial, CorrTerm> next;
        for (const auto& [mono, term] : corr) {
            for (const auto& [smono, scount] : seg) {
                Monomial prod = mono * smono;
                auto [it, inserted] = next.emplace(prod, CorrTerm{term.coeff, term.a_count + scount});
                if (!inserted) {
                    it->second.coeff += term.coeff;
                    if (it->second.a_count != term.a_count + scount) {
                        throw std::logic_error("inconsistent A-grading in string expansion");
                    }
                }
            }
        }
        corr = std::move(next);
    }
    return corr;
}

struct FmEntry {
    Int mult = 0;
    int depth = 0;
    std::map<int, Int> required;  // per-node demanded multiplicity
};

}  // namespace

QCharResult fm_fundamental(const CartanData& cd, int i, int r, const FmOptions& opts) {
    cd.require_node(i);
    std::map<Monomial, FmEntry> state;
    Monomial top = Monomial::var(i, r);
    state[top] = {Int(1), 0, {}};
    std::map<int, std::vector<Monomial>> levels;
    levels[0].push_back(top);
    std::vector<std::string> diagnostics;

    for (int depth = 0; !levels.empty();) {
        auto it = levels.begin();
        depth = it->first;
        std::vector<Monomial> batch = std::move(it->second);
        levels.erase(it);
        std::sort(batch.begin(), batch.end());
        if (opts.discipline == 1) std::reverse(batch.begin(), batch.end());

        for (const Monomial& m : batch) {
            FmEntry& ent = state.at(m);
            if (depth > 0) {
                Int mx = 0;
                bool disagree = false;
                Int first = -1;
                for (const auto& [node, req] : ent.required) {
                    if (req > mx) mx = req;
                    if (req > 0) {
                        if (first < 0) {
                            first = req;
                        } else if (req != first) {
                            disagree = true;
                        }
                    }
                }
                ent.mult = mx;
                if (disagree) {
                    diagnostics.push_back("node multiplicity demands disagree at " + m.str());
                }
            }
            if (ent.mult == 0) continue;

            for (int j = 1; j <= cd.rank(); ++j) {
                Monomial part = m.node_part(j);
                if (part.is_unit() || !part.dominant()) continue;
                auto corr = node_expansion_factor(cd, m, j);
                Int parent_mult = ent.mult;
                for (const auto& [cmon, term] : corr) {
                    if (cmon.is_unit()) continue;
                    Monomial child = m * cmon;
                    int cdepth = depth + term.a_count;
                    auto [cit, inserted] = state.emplace(child, FmEntry{});
                    if (inserted) {
                        cit->second.depth = cdepth;
                        levels[cdepth].push_back(child);
                        if (static_cast<long long>(state.size()) > opts.budget) {
                            throw NonTermination("monomial budget exceeded in FM expansion");
                        }
                    } else if (cit->second.depth != cdepth) {
                        throw std::logic_error("FM depth grading violated");
                    }
                    cit->second.required[j] += parent_mult * term.coeff;
                }
            }
        }
    }

    Laurent chi;
    for (const auto& [m, ent] : state) {
        if (ent.mult != 0) chi.add_term(m, ent.mult);
    }
    QCharResult res = make_qchar_result(cd, std::move(chi), std::move(diagnostics));
    if (res.dominant.size() != 1 || !(res.dominant[0].first == top)) {
        res.diagnostics.push_back("expected unique dominant monomial " + top.str());
    }
    return res;
}

bool t_system_check_sl2(int r, int k, Laurent* difference) {
    if (k < 1) throw std::invalid_argument("t_system_check_sl2 requires k >= 1");
    Laurent lhs = string_character_terms(cartan_data("A1"), {1, r, k}) *
                  string_character_terms(cartan_data("A1"), {1, r + 2, k});
    Laurent rhs = string_character_terms(cartan_data("A1"), {1, r, k + 1}) *
                  string_character_terms(cartan_data("A1"), {1, r + 2, k - 1});
    rhs = rhs + Laurent::unit();
    Laurent diff = lhs - rhs;
    if (difference) *difference = diff;
    return diff.is_zero();
}

QCharResult multiply(const QCharResult& a, const QCharResult& b) {
    if (a.cd != b.cd) throw std::invalid_argument("q-character product across different types");
    return make_qchar_result(a.cd, a.chi * b.chi);
}

namespace {

// Rank-1 order at one node: m1 <= m2 iff m2/m1 is a nonnegative product of
// the restricted root monomials Y_{j,c-d} Y_{j,c+d}.
bool restricted_leq(int node, int d, const Monomial& m1, const Monomial& m2) {
    Monomial ratio = m2 * m1.inverse();
    while (!ratio.is_unit()) {
        int top = ratio.exponents().begin()->first.shift;
        for (const auto& [k, v] : ratio.exponents()) top = std::max(top, k.shift);
        int e = ratio.exponent(node, top);
        if (e < 0) return false;
        Monomial gen = Monomial::var(node, top) * Monomial::var(node, top - 2 * d);
        ratio = ratio * gen.pow(e).inverse();
        if (ratio.exponent(node, top) != 0) return false;
    }
    return true;
}

// String character restricted to its own node (cross-node factors dropped).
Laurent restricted_string_character(int node, int d, int start, int len) {
    Laurent chi;
    Monomial m;
    for (int l = 0; l < len; ++l) m.mul_var(node, start + 2 * l * d, 1);
    chi.add_term(m, 1);
    for (int t = 1; t <= len; ++t) {
        int c = start + (2 * (len - t) + 1) * d;
        m = m * (Monomial::var(node, c - d) * Monomial::var(node, c + d)).inverse();
        chi.add_term(m, 1);
    }
    return chi;
}

}  // namespace

std::vector<std::pair<std::vector<StringSpec>, Int>> string_decomposition(const CartanData& cd,
                                                                          const Laurent& chi,
                                                                          int node) {
    int d = cd.sym(node);
    // Restriction to one node: set all other variables to 1.
    Laurent rest;
    for (const auto& [m, c] : chi.terms()) rest.add_term(m.node_part(node), c);

    std::vector<std::pair<std::vector<StringSpec>, Int>> out;
    while (!rest.is_zero()) {
        // A maximal monomial of a nonnegative combination of sl2 characters
        // is the head of one of them.
        const Monomial* mx = nullptr;
        for (const auto& [m, c] : rest.terms()) {
            bool below = false;
            for (const auto& [m2, c2] : rest.terms()) {
                if (!(m2 == m) && restricted_leq(node, d, m, m2)) {
                    below = true;
                    break;
                }
            }
            if (!below) {
                mx = &m;
                break;
            }
        }
        if (!mx || !mx->dominant()) {
            throw std::runtime_error("node restriction is not a sum of string characters");
        }
        Int c = rest.coeff(*mx);
        if (c < 0) throw std::runtime_error("negative string multiplicity in restriction");
        std::map<int, int> points;
        for (const auto& [k, v] : mx->exponents()) points[k.shift] = v;
        std::vector<StringSpec> segs = cp_segments(node, points, d);
        Laurent piece = Laurent::unit();
        for (const StringSpec& s : segs) {
            piece = piece * restricted_string_character(node, d, s.start, s.length);
        }
        rest = rest - piece * Laurent(c);
        for (const auto& [m, cc] : rest.terms()) {
            if (cc < 0) throw std::runtime_error("string extraction went negative");
        }
        out.emplace_back(segs, c);
    }
    return out;
}

QCharResult make_qchar_result(const CartanData& cd, Laurent chi,
                              std::vector<std::string> diagnostics) {
    QCharResult res;
    res.cd = cd;
    res.chi = std::move(chi);
    res.diagnostics = std::move(diagnostics);
    res.dominant = res.chi.dominant_terms();
    for (int j = 1; j <= cd.rank(); ++j) {
        try {
            res.string_witness[j] = string_decomposition(cd, res.chi, j);
        } catch (const std::exception& e) {
            res.diagnostics.push_back("node " + std::to_string(j) + ": " + e.what());
        }
    }
    return res;
}

}  // namespace qaffine
