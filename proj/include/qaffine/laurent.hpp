#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"

namespace qaffine {

using Int = boost::multiprecision::cpp_int;

// A variable index (node i, spectral exponent r), standing for Y_{i,q^r},
// Z_{i,q^r} or Psi_{i,q^r} depending on the ambient family.  Keys are
// ordered lexicographically by (i, r); that order fixes all serializations.
struct VarKey {
    int node = 0;
    int shift = 0;
    auto operator<=>(const VarKey&) const = default;
};

// Sparse exponent vector with canonical form (no zero entries).
class Monomial {
public:
    Monomial() = default;
    static Monomial unit() { return Monomial(); }
    static Monomial var(int node, int shift, int exp = 1);

    int exponent(int node, int shift) const;
    const std::map<VarKey, int>& exponents() const { return e_; }
    bool is_unit() const { return e_.empty(); }
    bool dominant() const;        // every exponent >= 0
    bool antidominant() const;    // every exponent <= 0

    Monomial& mul_var(int node, int shift, int exp);
    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    // Total degree of the exponents at a single node (sum over shifts);
    // for PsiWeight this is the coweight degree alpha_i(mu).
    int node_degree(int node) const;

    // Restriction to one node's variables; others dropped.
    Monomial node_part(int node) const;
    bool node_dominant(int node) const;
    bool node_antidominant(int node) const;

    auto operator<=>(const Monomial& o) const { return e_ <=> o.e_; }
    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    std::string str(const std::string& family = "Y") const;

private:
    std::map<VarKey, int> e_;
};

bool is_dominant(const Monomial& m);

// Sparse Laurent polynomial with exact integer coefficients.
class Laurent {
public:
    Laurent() = default;
    Laurent(Int c);  // constant
    static Laurent unit() { return Laurent(Int(1)); }
    static Laurent term(const Monomial& m, Int c = 1);

    const std::map<Monomial, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    Int total_multiplicity() const;  // sum of coefficients
    Int coeff(const Monomial& m) const;

    Laurent& add_term(const Monomial& m, const Int& c);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator*(const Monomial& m) const;
    bool operator==(const Laurent& o) const { return t_ == o.t_; }

    // Monomials with all exponents nonnegative, with their coefficients.
    std::vector<std::pair<Monomial, Int>> dominant_terms() const;

    std::string str(const std::string& family = "Y") const;

private:
    std::map<Monomial, Int> t_;
};

// Element of the free abelian group on symbols Psi_{i,r} together with a
// weight prefactor in the omega_i basis.  The prefactor is tracked only
// when requested; the truncation combinatorics omits constant parts
// throughout.
struct PsiWeight {
    Monomial psi;
    std::vector<int> omega;    // lambda in the omega basis, empty when omitted
    bool omega_tracked = false;

    PsiWeight() = default;
    explicit PsiWeight(Monomial m) : psi(std::move(m)) {}

    PsiWeight operator*(const PsiWeight& o) const;
    PsiWeight inverse() const;
    bool operator==(const PsiWeight& o) const;
    auto operator<=>(const PsiWeight& o) const { return psi <=> o.psi; }

    // Coweight degree vector (deg psi_i)_i = (alpha_i(mu))_i.
    std::vector<int> degree(const CartanData& cd) const;

    std::string str() const { return psi.str("Psi"); }
};

// Root monomial A_{i,q^r} of the ambient type; the Nakajima order is
// generated by these.
Monomial root_monomial(const CartanData& cd, int i, int r);

// Nakajima partial order on Y-monomials: returns the exponent certificate
// c >= 0 with m1 = m2 * prod A_{j,b}^{-c_{j,b}} when m1 <= m2, else nullopt.
// The certificate is unique and found by a triangular peel from the top
// spectral exponent down.
std::optional<std::map<VarKey, int>> nakajima_leq(const CartanData& cd, const Monomial& m1,
                                                  const Monomial& m2);

}  // namespace qaffine
