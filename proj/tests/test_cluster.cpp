#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qaffine/cluster.hpp"

using namespace qaffine::cluster;
using qaffine::Int;

TEST_CASE("exchange at a vertex of the A2 quiver") {
    Seed a2 = paper_seed("a2");
    Seed m1 = mutate(a2, 1);
    CHECK(m1.var(1).str() == "(1 + X2)/(X1)");
    CHECK(m1.var(2).str() == "X2");
    // Involution.
    CHECK(mutate(m1, 1).cluster_key() == a2.cluster_key());
    // Second mutation reaches (1 + X1 + X2)/(X1 X2).
    Seed m12 = mutate(m1, 2);
    CHECK(m12.var(2).str() == "(1 + X1 + X2)/(X1*X2)");
    CHECK_THROWS_AS(mutate(a2, 3), std::out_of_range);
}

TEST_CASE("exchange identity holds exactly for executed mutations") {
    Seed seed = paper_seed("a3");
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(1, 3);
    Seed cur = seed;
    for (int step = 0; step < 24; ++step) {
        int k = pick(rng);
        Seed next = mutate(cur, k);
        ClusterPoly in(3, 1), out(3, 1);
        for (int j = 1; j <= 3; ++j) {
            for (int m = 0; m < cur.quiver.arrow_mult(j, k); ++m) in = in * cur.var(j);
            for (int m = 0; m < cur.quiver.arrow_mult(k, j); ++m) out = out * cur.var(j);
        }
        CHECK(next.var(k) * cur.var(k) == in + out);
        // Involutivity at this vertex.
        CHECK(mutate(next, k).cluster_key() == cur.cluster_key());
        cur = next;
    }
}

TEST_CASE("A2 enumeration: five variables, five clusters") {
    Seed a2 = paper_seed("a2");
    EnumerateResult res = enumerate_seeds(a2, 1000);
    CHECK(res.finite);
    CHECK(res.variables.size() == 5);
    CHECK(res.clusters.size() == 5);
    std::set<std::string> strs;
    for (const auto& v : res.variables) {
        strs.insert(v.str());
        CHECK(laurent_check(a2, v));
    }
    CHECK(strs == std::set<std::string>{"X1", "X2", "(1 + X2)/(X1)", "(1 + X1)/(X2)",
                                        "(1 + X1 + X2)/(X1*X2)"});
}

TEST_CASE("single mutable vertex without arrows") {
    Seed s = paper_seed("single");
    EnumerateResult res = enumerate_seeds(s, 100);
    CHECK(res.finite);
    CHECK(res.variables.size() == 2);
    CHECK(res.clusters.size() == 2);
    Seed m = mutate(s, 1);
    CHECK(m.var(1).str() == "2/(X1)");
}

TEST_CASE("A3 finite type counts") {
    EnumerateResult res = enumerate_seeds(paper_seed("a3"), 10000);
    CHECK(res.finite);
    CHECK(res.variables.size() == 9);
    CHECK(res.clusters.size() == 14);
    Seed a3 = paper_seed("a3");
    for (const auto& v : res.variables) CHECK(laurent_check(a3, v));
}

TEST_CASE("sl3 C_M seed totals seven cluster variables") {
    Seed cm = paper_seed("sl3_CM");
    CHECK(cm.quiver.frozen[3]);
    CHECK(cm.quiver.frozen[4]);
    CHECK(cm.labels[3] == "[W_1]");
    EnumerateResult res = enumerate_seeds(cm, 10000);
    CHECK(res.finite);
    CHECK(res.variables.size() == 5);
    CHECK(res.clusters.size() == 5);
    for (const auto& v : res.variables) CHECK(laurent_check(cm, v));
    CHECK_THROWS_AS(mutate(cm, 3), std::invalid_argument);  // frozen
}

TEST_CASE("frozen variables never change") {
    Seed cm = paper_seed("sl3_CM");
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> pick(1, 2);
    Seed cur = cm;
    for (int step = 0; step < 20; ++step) {
        cur = mutate(cur, pick(rng));
        CHECK(cur.var(3).str() == "X3");
        CHECK(cur.var(4).str() == "X4");
    }
}

TEST_CASE("budget exhaustion reports an open frontier") {
    EnumerateResult res = enumerate_seeds(paper_seed("a3"), 3);
    CHECK(!res.finite);
    CHECK(res.seeds_processed == 3);
    CHECK_THROWS_AS(enumerate_seeds(paper_seed("a3"), 0), std::invalid_argument);
}

TEST_CASE("paper seed library windows") {
    Seed cz = paper_seed("sl2_CZminus", 3);
    CHECK(cz.quiver.size == 3);
    CHECK(cz.quiver.arrow_mult(2, 1) == 1);
    CHECK(cz.quiver.arrow_mult(3, 2) == 1);
    CHECK(cz.quiver.frozen[3]);
    CHECK(cz.labels[1] == "[(1-zq^{0})]");
    CHECK(cz.labels[2] == "[(1-zq^{0})(1-zq^{-2})]");
    CHECK(cz.labels[3] == "[(1-zq^{0})(1-zq^{-2})(1-zq^{-4})]");

    Seed czfull = paper_seed("sl2_CZ", 4);
    CHECK(czfull.labels[3] == "[(1-zq^{2})(1-zq^{0})(1-zq^{-2})]");
    CHECK(czfull.quiver.arrow_mult(2, 1) == 1);
    CHECK(czfull.quiver.arrow_mult(2, 3) == 1);

    Seed g = paper_seed("Gamma_inf_sl2", 5);
    CHECK(g.quiver.arrow_mult(1, 2) == 1);
    CHECK(g.quiver.arrow_mult(4, 5) == 1);
    CHECK(g.quiver.frozen[1]);
    CHECK(g.quiver.frozen[5]);

    Seed gp = paper_seed("Gamma_inf_prime_sl2", 4);
    CHECK(gp.quiver.arrow_mult(1, 2) == 1);
    CHECK(gp.quiver.arrow_mult(3, 2) == 1);  // the reversed arrow
    CHECK(gp.quiver.arrow_mult(3, 4) == 1);

    Seed g3 = paper_seed("Gamma_inf_sl3", 3);
    CHECK(g3.quiver.size == 6);

    Seed czm3 = paper_seed("sl3_CZminus", 3);
    CHECK(czm3.quiver.size == 6);
    CHECK(czm3.labels[1].substr(0, 9) == "W_1^{(1)}");

    Seed oh = paper_seed("sl2_Ohat_plus", 3);
    CHECK(oh.quiver.arrow_mult(2, 1) == 1);

    CHECK_THROWS_AS(paper_seed("nope"), std::invalid_argument);
    CHECK_THROWS_AS(paper_seed("Gamma_inf_sl2", 1), std::invalid_argument);
}

TEST_CASE("laurent division is exact and guarded") {
    ClusterPoly x1 = ClusterPoly::variable(1, 2);
    ClusterPoly x2 = ClusterPoly::variable(2, 2);
    ClusterPoly num = (x1 + x2) * (x1 + x2);
    auto q = num.divide_exact(x1 + x2);
    REQUIRE(q.has_value());
    CHECK(*q == x1 + x2);
    CHECK(!(x1 + x2).divide_exact(x1 * x1 + x2).has_value());
    // Laurent quotient with negative exponents.
    auto q2 = (x1 + x2).divide_exact(x1 * x2);
    REQUIRE(q2.has_value());
    CHECK(q2->denominator() == std::vector<int>{1, 1});
}
