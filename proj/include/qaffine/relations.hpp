#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/laurent.hpp"
#include "qaffine/qchar.hpp"

namespace qaffine::relations {

// Formal class symbols living in the Grothendieck ring of the Borel
// category O: positive prefundamentals L^+_{i,q^r}, the dual family
// L^*_{i,q^r}, the QQ-partner L~_{i,q^r}, finite-dimensional classes
// V_i(q^r) and the opaque QQ constant K.  Invertible weight classes
// [lambda] are tracked separately per term.  The enum order fixes the
// printing order within a term.
enum class Kind { Kconst, V, Lstar, Lplus, Ltilde };

struct SymKey {
    Kind kind = Kind::Lplus;
    int node = 0;
    int shift = 0;
    auto operator<=>(const SymKey&) const = default;
};

struct RelTerm {
    std::map<SymKey, int> sym;  // exponents, canonical (no zeros)
    std::vector<int> weight;    // lambda in the omega_i basis
    Int coeff = 1;

    RelTerm& mul_sym(Kind k, int node, int shift, int exp = 1);
    RelTerm& mul_weight(const std::vector<int>& w);
    bool same_monomial(const RelTerm& o) const;
    auto monomial_key() const { return std::make_pair(sym, weight); }
};

struct RelationExpr {
    std::vector<RelTerm> lhs, rhs;
    std::string note;

    void normalize();  // combine like terms, drop zeros, sort
    bool operator==(const RelationExpr& o) const;
    std::string str(bool omit_weights = false) const;
    std::string latex(bool omit_weights = false) const;
};

// Generalized Baxter TQ-relation for a q-character with a unique dominant
// monomial: substitute Y_{i,q^r} -> [omega_i] L^+_{i,r-d_i} / L^+_{i,r+d_i},
// equate with the class symbol and clear denominators.
RelationExpr tq_relation(const CartanData& cd, const QCharResult& qc, int i0, int r0);

// The ell-weight of the QQ-partner, with q_i-shifts on the integer lattice.
PsiWeight psi_tilde(const CartanData& cd, int i, int r);

// The ell-weight of L^*_{i,q^r}.
PsiWeight lstar_psi(const CartanData& cd, int i, int r);

// QQ-system at node i, lattice point r, with opaque constant K.
RelationExpr qq_system(const CartanData& cd, int i, int r);

// QQ*-system at node i, lattice point r.
RelationExpr qq_star_relation(const CartanData& cd, int i, int r);

// The documented formal dictionary under which the sl2 QQ*-system becomes
// the TQ-relation: substitute
//   Lstar(1,r) -> [-w] V(1,r-1) Lplus(1,r-2)^{-1}
//   [-alpha_1] -> [-2w] Lplus(1,r+2) Lplus(1,r-2)^{-1}
// and multiply both sides by [w] Lplus(1,r-2).
RelationExpr qq_star_as_tq_sl2(int r);

// Numeric Bethe Ansatz residuals.  Baxter polynomials are given by their
// root multisets; the optional per-node driving factor carries the
// quantum-space data of a finite chain (absent = the bare relation).
struct Driving {
    std::complex<double> scale{1.0, 0.0};
    std::vector<std::complex<double>> zeros_num;  // factors (1 - w/z0)
    std::vector<std::complex<double>> zeros_den;

    std::complex<double> eval(std::complex<double> w) const;
};

struct BetheContext {
    CartanData cd;
    std::complex<double> q{0.0, 0.0};
    std::vector<std::vector<std::complex<double>>> roots;  // per node, 1-based
    std::vector<std::complex<double>> twist;               // u_j, 1-based
    std::vector<std::optional<Driving>> driving;           // per node, 1-based
    double collision_tol = 1e-3;  // relative distance treated as a pole hit

    static BetheContext make(const CartanData& cd, std::complex<double> q);

    std::complex<double> v(int i) const;  // prod_j u_j^{C_ij}, recomputed
    std::complex<double> baxter(int j, std::complex<double> z) const;
};

struct PoleCollision : std::runtime_error {
    explicit PoleCollision(const std::string& what) : std::runtime_error(what) {}
};

// v_i^{-1} [driving_i(w)] prod_j Q_j(w q^{B_ij}) / Q_j(w q^{-B_ij}) + 1.
std::complex<double> bethe_residual(const BetheContext& ctx, int i, std::complex<double> w);

}  // namespace qaffine::relations
