#pragma once

#include <string>
#include <vector>

namespace qaffine {

// Finite-type Cartan datum: matrix C, symmetrizers D = diag(d_i) with
// B = DC symmetric and the d_i relatively prime as a set.  Nodes are
// 1-based throughout, matching the usual Dynkin diagram labelling
// (Bourbaki); for B2 the long node is 1 (d_1 = 2, d_2 = 1).
class CartanData {
public:
    CartanData() = default;

    const std::string& label() const { return label_; }
    int rank() const { return n_; }

    // Entries of C, B and the symmetrizers, 1-based.
    int cartan(int i, int j) const { return C_[idx(i)][idx(j)]; }
    int sym(int i) const { return d_[idx(i)]; }
    int b(int i, int j) const { return d_[idx(i)] * C_[idx(i)][idx(j)]; }

    bool valid_node(int i) const { return i >= 1 && i <= n_; }
    void require_node(int i) const;

    bool simply_laced() const;

    // Canonical serialization used for cache keys and equality.
    std::string key() const;

    bool operator==(const CartanData& o) const { return label_ == o.label_; }
    bool operator!=(const CartanData& o) const { return !(*this == o); }

    friend CartanData cartan_data(const std::string& label);

private:
    int idx(int i) const;

    std::string label_;
    int n_ = 0;
    std::vector<std::vector<int>> C_;
    std::vector<int> d_;
};

// Builds the Cartan datum for a type label such as "A1", "B2", "D4", "E6",
// "F4", "G2".  Throws std::invalid_argument for unknown labels or ranks
// outside the classification.
CartanData cartan_data(const std::string& label);

}  // namespace qaffine
