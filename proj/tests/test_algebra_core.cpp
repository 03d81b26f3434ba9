#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qaffine/json_io.hpp"
#include "qaffine/laurent.hpp"

using namespace qaffine;

namespace {

Monomial mono(std::initializer_list<std::array<int, 3>> entries) {
    Monomial m;
    for (const auto& e : entries) m.mul_var(e[0], e[1], e[2]);
    return m;
}

// Cartan determinants are small positive integers; double elimination is
// plenty at these ranks.
double det_estimate(const CartanData& cd) {
    int n = cd.rank();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = cd.cartan(i + 1, j + 1);
    }
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        }
        if (std::abs(a[p][c]) < 1e-12) return 0.0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            double f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Monomial random_monomial(std::mt19937& rng, int rank, int support) {
    std::uniform_int_distribution<int> node(1, rank), shift(-4, 4), expo(-2, 2);
    Monomial m;
    for (int i = 0; i < support; ++i) m.mul_var(node(rng), shift(rng), expo(rng));
    return m;
}

Laurent random_laurent(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5);
    Laurent p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(random_monomial(rng, rank, 2), coef(rng));
    return p;
}

}  // namespace

TEST_CASE("cartan data for the basic types") {
    CartanData a1 = cartan_data("A1");
    CHECK(a1.rank() == 1);
    CHECK(a1.cartan(1, 1) == 2);
    CHECK(a1.sym(1) == 1);
    CHECK(a1.b(1, 1) == 2);

    CartanData b2 = cartan_data("B2");
    CHECK(b2.cartan(1, 2) == -1);
    CHECK(b2.cartan(2, 1) == -2);
    CHECK(b2.sym(1) == 2);
    CHECK(b2.sym(2) == 1);
    CHECK(b2.b(1, 2) == -2);
    CHECK(b2.b(2, 2) == 2);

    CartanData a2 = cartan_data("A2");
    CHECK(a2.cartan(1, 2) == -1);
    CHECK(a2.sym(2) == 1);
    CHECK(a2.simply_laced());
    CHECK(!b2.simply_laced());
}

TEST_CASE("cartan invariants across the classification") {
    for (const char* label : {"A1", "A3", "B2", "B3", "C3", "D4", "E6", "F4", "G2"}) {
        CartanData cd = cartan_data(label);
        for (int i = 1; i <= cd.rank(); ++i) {
            CHECK(cd.cartan(i, i) == 2);
            CHECK(cd.sym(i) >= 1);
            for (int j = 1; j <= cd.rank(); ++j) {
                if (i != j) CHECK(cd.cartan(i, j) <= 0);
                CHECK(cd.b(i, j) == cd.b(j, i));
            }
        }
        CHECK(std::abs(det_estimate(cd)) > 0.5);
    }
    CHECK_THROWS_AS(cartan_data("H7"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_data("B1"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_data("E9"), std::invalid_argument);
    CHECK_THROWS_AS(cartan_data("Q"), std::invalid_argument);
}

TEST_CASE("root monomials") {
    CHECK(root_monomial(cartan_data("A1"), 1, 0) == mono({{1, -1, 1}, {1, 1, 1}}));
    CHECK(root_monomial(cartan_data("A2"), 1, 0) == mono({{1, -1, 1}, {1, 1, 1}, {2, 0, -1}}));
    CHECK(root_monomial(cartan_data("B2"), 1, 0) ==
          mono({{1, -2, 1}, {1, 2, 1}, {2, -1, -1}, {2, 1, -1}}));
    CHECK(root_monomial(cartan_data("B2"), 2, 3) ==
          mono({{2, 2, 1}, {2, 4, 1}, {1, 3, -1}}));
    // G2: the long node's root monomial carries the C_{ji} = -3 branch.
    CHECK(root_monomial(cartan_data("G2"), 1, 0) ==
          mono({{1, -3, 1}, {1, 3, 1}, {2, -2, -1}, {2, 0, -1}, {2, 2, -1}}));
    CHECK(root_monomial(cartan_data("G2"), 2, 0) ==
          mono({{2, -1, 1}, {2, 1, 1}, {1, 0, -1}}));
    CHECK_THROWS_AS(root_monomial(cartan_data("A2"), 3, 0), std::out_of_range);

    // Simply-laced root monomials only use the C_{ij} = -1 branch.
    CartanData d4 = cartan_data("D4");
    Monomial a2c = root_monomial(d4, 2, 0);
    CHECK(a2c == mono({{2, -1, 1}, {2, 1, 1}, {1, 0, -1}, {3, 0, -1}, {4, 0, -1}}));
}

TEST_CASE("dominance") {
    CHECK(is_dominant(mono({{1, 0, 1}})));
    CHECK(!is_dominant(mono({{1, 2, -1}})));
    CHECK(!is_dominant(mono({{1, 0, 1}, {2, 3, -1}})));
    CHECK(is_dominant(Monomial()));
}

TEST_CASE("nakajima order examples") {
    CartanData a1 = cartan_data("A1");
    auto zero = nakajima_leq(a1, mono({{1, 0, 1}}), mono({{1, 0, 1}}));
    REQUIRE(zero.has_value());
    CHECK(zero->empty());

    auto cert = nakajima_leq(a1, mono({{1, 2, -1}}), mono({{1, 0, 1}}));
    REQUIRE(cert.has_value());
    CHECK(*cert == std::map<VarKey, int>{{{1, 1}, 1}});

    CHECK(!nakajima_leq(a1, mono({{1, 0, 1}}), mono({{1, 2, -1}})).has_value());
}

TEST_CASE("nakajima order is a partial order on random sets") {
    for (const char* label : {"A1", "A2"}) {
        CartanData cd = cartan_data(label);
        std::mt19937 rng(7);
        std::vector<Monomial> pool;
        Monomial base = Monomial::var(1, 0) * Monomial::var(cd.rank(), 1);
        pool.push_back(base);
        std::uniform_int_distribution<int> node(1, cd.rank()), shift(-3, 3);
        for (int i = 0; i < 12; ++i) {
            Monomial m = base;
            int steps = i % 3 + 1;
            for (int s = 0; s < steps; ++s) {
                m = m * root_monomial(cd, node(rng), shift(rng)).inverse();
            }
            pool.push_back(m);
        }
        for (const auto& x : pool) {
            CHECK(nakajima_leq(cd, x, x).has_value());  // reflexive
            for (const auto& y : pool) {
                bool xy = nakajima_leq(cd, x, y).has_value();
                bool yx = nakajima_leq(cd, y, x).has_value();
                if (xy && yx) CHECK(x == y);  // antisymmetric
                for (const auto& z : pool) {
                    if (xy && nakajima_leq(cd, y, z)) CHECK(nakajima_leq(cd, x, z).has_value());
                }
            }
        }
        // Certificate reproduces the ratio exactly.
        for (const auto& x : pool) {
            auto cert = nakajima_leq(cd, x, base);
            if (!cert) continue;
            Monomial prod;
            for (const auto& [k, c] : *cert) {
                prod = prod * root_monomial(cd, k.node, k.shift).pow(c);
            }
            CHECK(base * x.inverse() == prod);
        }
    }
}

TEST_CASE("laurent ring axioms on random triples") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Laurent a = random_laurent(rng, 2), b = random_laurent(rng, 2), c = random_laurent(rng, 2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Laurent());
        CHECK(a * Laurent::unit() == a);
    }
}

TEST_CASE("big coefficients stay exact") {
    Laurent p = Laurent::unit() + Laurent::term(mono({{1, 0, 1}}), 1);
    Laurent pow = Laurent::unit();
    for (int i = 0; i < 64; ++i) pow = pow * p;
    CHECK(pow.coeff(mono({{1, 0, 32}})) == Int("1832624140942590534"));
    CHECK(pow.total_multiplicity() == Int("18446744073709551616"));  // 2^64
}

TEST_CASE("json round trip and canonical key order") {
    Laurent p;
    p.add_term(mono({{2, -1, 3}, {1, 4, -2}}), Int("-123456789012345678901234567890"));
    p.add_term(mono({{1, 0, 1}}), 7);
    json j = to_json(p);
    CHECK(laurent_from_json(j) == p);
    // keys sorted ascending by (node, shift)
    const auto& first = j[0]["monomial"];
    CHECK(first[0][0].get<int>() <= first[first.size() - 1][0].get<int>());
}

TEST_CASE("psi weight degree and prefactor") {
    CartanData b2 = cartan_data("B2");
    PsiWeight w;
    w.psi = mono({{1, 0, 1}, {1, -2, 1}, {2, -2, -1}});
    CHECK(w.degree(b2) == std::vector<int>{2, -1});
    PsiWeight inv = w.inverse();
    CHECK((w * inv).psi.is_unit());
    PsiWeight tagged;
    tagged.omega_tracked = true;
    tagged.omega = {1, 0};
    PsiWeight prod = tagged * tagged;
    CHECK(prod.omega == std::vector<int>{2, 0});
}
