#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/laurent.hpp"

namespace qaffine {

// A q-string: the q^{2d}-spaced segment of length k starting at spectral
// exponent r on one node.  Length 0 is the trivial module.
struct StringSpec {
    int node = 1;
    int start = 0;
    int length = 0;
    auto operator<=>(const StringSpec&) const = default;
};

struct NonGeneralPosition : std::runtime_error {
    explicit NonGeneralPosition(const std::string& what) : std::runtime_error(what) {}
};

struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

// A computed q-character with its dominant monomials and, per node, the
// decomposition of the node restriction into string characters.
struct QCharResult {
    CartanData cd;
    Laurent chi;
    std::vector<std::pair<Monomial, Int>> dominant;
    std::map<int, std::vector<std::pair<std::vector<StringSpec>, Int>>> string_witness;
    std::vector<std::string> diagnostics;

    Int dimension() const { return chi.total_multiplicity(); }
};

struct FmOptions {
    long long budget = 1000000;  // monomial guard against non-termination
    int discipline = 0;          // work-queue order within a depth level (0/1)
};

// Unique decomposition of a multiset of points (one node, spacing 2*step)
// into pairwise general-position segments; fails with NonGeneralPosition
// only if the produced segments violate the pairwise condition.
std::vector<StringSpec> cp_segments(int node, const std::map<int, int>& points, int step);

bool segments_general_position(const StringSpec& a, const StringSpec& b, int step);

// Expansion of one segment: the (k+1)-term sl2 string character lifted to
// the ambient type via full root monomials A_{j,.}^{-1}.
Laurent string_character_terms(const CartanData& cd, const StringSpec& s);

// chi_q of the sl2 Kirillov-Reshetikhin module with head
// Y_{1,r} Y_{1,r+2} ... Y_{1,r+2(k-1)}.
QCharResult sl2_string_character(int r, int k);

// Simple sl2 character for an arbitrary dominant multiset of shifts,
// via the segment factorization.
Laurent sl2_simple_character(const std::map<int, int>& points);

// Frenkel-Mukhin expansion of the fundamental module V_i(q^r).
QCharResult fm_fundamental(const CartanData& cd, int i, int r, const FmOptions& opts = {});

// Exact T-system check chi(r,k) chi(r+2,k) = chi(r,k+1) chi(r+2,k-1) + 1.
// Requires k >= 1; on failure returns false and stores the difference.
bool t_system_check_sl2(int r, int k, Laurent* difference = nullptr);

QCharResult multiply(const QCharResult& a, const QCharResult& b);

// Recomputes dominant monomials and string witnesses for a raw polynomial.
QCharResult make_qchar_result(const CartanData& cd, Laurent chi,
                              std::vector<std::string> diagnostics = {});

// Greedy extraction of the node restriction as a nonnegative combination of
// string characters; throws if the restriction is not such a combination.
std::vector<std::pair<std::vector<StringSpec>, Int>> string_decomposition(const CartanData& cd,
                                                                          const Laurent& chi,
                                                                          int node);

}  // namespace qaffine
