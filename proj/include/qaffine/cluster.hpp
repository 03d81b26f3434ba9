#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qaffine/laurent.hpp"

namespace qaffine::cluster {

// Sparse integer Laurent polynomial in the initial cluster variables
// X_1..X_n.  Exponent vectors are dense (vertex counts stay small).
class ClusterPoly {
public:
    ClusterPoly() = default;
    explicit ClusterPoly(int nvars, Int c = 0);
    static ClusterPoly variable(int idx, int nvars);  // idx 1-based

    int nvars() const { return n_; }
    const std::map<std::vector<int>, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    ClusterPoly operator+(const ClusterPoly& o) const;
    ClusterPoly operator*(const ClusterPoly& o) const;

    // Exact division in the Laurent ring; nullopt when the quotient does
    // not exist (bounded leading-term elimination).
    std::optional<ClusterPoly> divide_exact(const ClusterPoly& divisor) const;

    bool operator==(const ClusterPoly& o) const { return n_ == o.n_ && t_ == o.t_; }

    // Denominator-monomial exponents: max(0, -min exponent) per variable.
    std::vector<int> denominator() const;
    bool has_monomial_denominator() const;  // structural Laurent check

    std::string key() const;                       // canonical serialization
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void add_term(const std::vector<int>& e, const Int& c);
    int n_ = 0;
    std::map<std::vector<int>, Int> t_;
};

struct Quiver {
    int size = 0;                          // vertices 1..size
    std::vector<bool> frozen;              // 1-based padded at 0
    std::map<std::pair<int, int>, int> arrows;  // (from,to) -> multiplicity

    void add_arrow(int from, int to, int mult = 1);
    int arrow_mult(int from, int to) const;
    void mutate(int k);
    std::string key() const;
};

struct Seed {
    Quiver quiver;
    std::vector<ClusterPoly> vars;      // 1-based padded at 0
    std::vector<std::string> labels;    // optional display labels
    std::vector<PsiWeight> psi;         // attached ell-weight data where known

    const ClusterPoly& var(int k) const { return vars[k]; }
    std::string cluster_key() const;    // canonical form for deduplication
};

Seed initial_seed(const Quiver& q);

// Cluster mutation at a mutable vertex (1-based).  The exchange identity
// X_k X_k' = prod_in + prod_out is re-verified by multiplication.
Seed mutate(const Seed& s, int k);

struct EnumerateResult {
    std::vector<ClusterPoly> variables;  // distinct variables at mutable vertices
    std::set<std::string> clusters;
    bool finite = false;
    long long seeds_processed = 0;
};

EnumerateResult enumerate_seeds(const Seed& s, long long budget);

// True iff the variable, written over the initial cluster, has a monomial
// denominator.
bool laurent_check(const Seed& initial, const ClusterPoly& v);

// Library of initial seeds from the monoidal categorification setting.
// Infinite families take a window length; boundary vertices are frozen.
Seed paper_seed(const std::string& name, int length = 0);

std::vector<std::string> paper_seed_names();

}  // namespace qaffine::cluster
