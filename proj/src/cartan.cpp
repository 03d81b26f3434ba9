#include "qaffine/cartan.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qaffine {

int CartanData::idx(int i) const {
    require_node(i);
    return i - 1;
}

void CartanData::require_node(int i) const {
    if (!valid_node(i)) {
        throw std::out_of_range("node " + std::to_string(i) + " out of range for " + label_);
    }
}

bool CartanData::simply_laced() const {
    for (int d : d_) {
        if (d != 1) return false;
    }
    return true;
}

std::string CartanData::key() const {
    std::ostringstream os;
    os << label_ << ";C=";
    for (const auto& row : C_) {
        for (int v : row) os << v << ',';
        os << '|';
    }
    os << "D=";
    for (int v : d_) os << v << ',';
    return os.str();
}

namespace {

void set_edge(std::vector<std::vector<int>>& C, int i, int j, int cij, int cji) {
    C[i - 1][j - 1] = cij;
    C[j - 1][i - 1] = cji;
}

void check_rank(char series, int n) {
    bool ok = false;
    switch (series) {
        case 'A': ok = n >= 1; break;
        case 'B':
        case 'C': ok = n >= 2; break;
        case 'D': ok = n >= 3; break;
        case 'E': ok = n >= 6 && n <= 8; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        default: break;
    }
    if (!ok) {
        throw std::invalid_argument(std::string("no finite type ") + series + std::to_string(n));
    }
}

}  // namespace

CartanData cartan_data(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("bad type label: " + label);
    char series = label[0];
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(label.substr(1), &pos);
        if (pos + 1 != label.size()) throw std::invalid_argument(label);
    } catch (...) {
        throw std::invalid_argument("bad type label: " + label);
    }
    check_rank(series, n);

    CartanData cd;
    cd.label_ = label;
    cd.n_ = n;
    cd.C_.assign(n, std::vector<int>(n, 0));
    cd.d_.assign(n, 1);
    auto& C = cd.C_;
    for (int i = 0; i < n; ++i) C[i][i] = 2;

    // Simply-laced chains; the exceptional edges are patched below.
    auto chain = [&](int upto) {
        for (int i = 1; i < upto; ++i) set_edge(C, i, i + 1, -1, -1);
    };

    switch (series) {
        case 'A':
            chain(n);
            break;
        case 'B':
            // Nodes 1..n-1 long (d=2), node n short.  B2: C = [[2,-1],[-2,2]].
            chain(n);
            C[n - 1][n - 2] = -2;
            for (int i = 0; i + 1 < n; ++i) cd.d_[i] = 2;
            break;
        case 'C':
            chain(n);
            C[n - 2][n - 1] = -2;
            cd.d_[n - 1] = 2;
            break;
        case 'D':
            // 1-2-...-(n-2) chain, with n-1 and n attached to n-2.  For D4
            // node 2 is the trivalent node.
            chain(n - 1);
            set_edge(C, n - 2, n, -1, -1);
            break;
        case 'E':
            // Bourbaki: node 2 hangs off node 4 of the chain 1-3-4-5-...-n.
            set_edge(C, 1, 3, -1, -1);
            set_edge(C, 2, 4, -1, -1);
            for (int i = 3; i < n; ++i) set_edge(C, i, i + 1, -1, -1);
            break;
        case 'F':
            // 1-2=>3-4 with nodes 1,2 long.
            set_edge(C, 1, 2, -1, -1);
            set_edge(C, 2, 3, -1, -2);
            set_edge(C, 3, 4, -1, -1);
            cd.d_[0] = cd.d_[1] = 2;
            break;
        case 'G':
            // Node 1 long (d=3): C = [[2,-1],[-3,2]].
            set_edge(C, 1, 2, -1, -3);
            cd.d_[0] = 3;
            break;
        default:
            throw std::invalid_argument("bad type label: " + label);
    }

    // B = DC symmetric is a construction invariant worth keeping checked.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (cd.b(i, j) != cd.b(j, i)) throw std::logic_error("symmetrizer mismatch");
        }
    }
    return cd;
}

}  // namespace qaffine
