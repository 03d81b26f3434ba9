#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/laurent.hpp"

namespace qaffine::truncation {

struct UnsupportedType : std::runtime_error {
    explicit UnsupportedType(const std::string& what) : std::runtime_error(what) {}
};

// Truncation parameter Z = (Z_i(z))_i with Z_i(z) = prod (1 - z q^s):
// a nonnegative exponent vector over the Psi lattice, exps[(i,s)] = the
// multiplicity of the factor (1 - z q^s) in Z_i.
struct TruncationParam {
    CartanData cd;
    Monomial exps;

    TruncationParam() = default;
    TruncationParam(CartanData c, Monomial e);

    // Per-node lists of stored root exponents (with multiplicity).
    std::vector<std::vector<int>> root_lists() const;
    static TruncationParam from_root_lists(const CartanData& cd,
                                           const std::vector<std::vector<int>>& lists);

    PsiWeight psi() const { return PsiWeight(exps); }
    std::vector<int> coweight() const;  // sum_i deg(Z_i) omega_i-vee

    bool operator==(const TruncationParam& o) const { return exps == o.exps; }
    std::string str() const;
};

// Lambda_{i,q^r} = Psi_{i,q^{r+d_i}} (Psi~_{i,q^{r-d_i}})^{-1}.
PsiWeight lambda_monomial(const CartanData& cd, int i, int r);

// Partial order on ell-weights: psi <= z iff z psi^{-1} is a nonnegative
// product of Lambda monomials.  Returns the certificate exponents keyed by
// the Lambda lattice point (i, r), or nullopt.
std::optional<std::map<VarKey, int>> preceq(const CartanData& cd, const PsiWeight& psi,
                                            const PsiWeight& z);

// Optional user-supplied chi tables for non-simply-laced types beyond B2.
class ChiTableRegistry {
public:
    void add(const std::string& type_label, int node, Laurent base_table);
    const Laurent* find(const std::string& type_label, int node) const;

private:
    std::map<std::pair<std::string, int>, Laurent> tables_;
};

// chi_{i,q^r} in the Z variables: the q-character for simply-laced types,
// the built-in 4- and 6-term B2 tables, otherwise a user table.
Laurent chi_table(const CartanData& cd, int i, int r, const ChiTableRegistry* user = nullptr);

// chi(Z) = prod over stored factors (1 - z q^s) of chi_{i,q^{-s}}.
Laurent chi_Z(const CartanData& cd, const TruncationParam& Z,
              const ChiTableRegistry* user = nullptr);

// Z_{i,q^r}^e contributes Psi_{i,q^{-r}}^e; constant parts omitted.
PsiWeight psi_of_monomial(const Monomial& M);

struct EnumeratedParam {
    PsiWeight psi;
    Int multiplicity;
    std::vector<int> mu;  // coweight degree vector
};

// Multiset of ell-weights coming from chi(Z), with coweight degrees.
std::vector<EnumeratedParam> conjecture_enumerate(const CartanData& cd, const TruncationParam& Z,
                                                  const ChiTableRegistry* user = nullptr);

struct Chain {
    std::vector<TruncationParam> params;  // Z_0, ..., Z_N
    std::vector<std::map<VarKey, int>> certificates;  // Lambda certs Z_k -> Z_{k+1}
    int steps() const { return static_cast<int>(params.size()) - 1; }
};

// Breadth-first search for a chain (Z_0 = Z, ..., Z_N) of truncation
// parameters, successors being the dominant monomials of chi(Z_k), such
// that the target comes from chi(Z_N).  Parameters that fail the
// necessary condition target <= Z_k are pruned.
std::optional<Chain> chain_search(const CartanData& cd, const TruncationParam& Z,
                                  const PsiWeight& target, int max_depth,
                                  const ChiTableRegistry* user = nullptr);

// True iff target = psi_of_monomial(M) for some monomial M of chi(Z).
bool comes_from(const CartanData& cd, const TruncationParam& Z, const PsiWeight& target,
                const ChiTableRegistry* user = nullptr);

}  // namespace qaffine::truncation
