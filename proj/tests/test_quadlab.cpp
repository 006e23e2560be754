#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "quadlab.h"

using namespace k2lp;

TEST_CASE("family membership") {
    auto ps = dengli_primes(7215);
    CHECK(ps == std::vector<i64>{3, 5, 13, 37});  // l1 = 3, l2 = 5, rest ascending
    CHECK(dengli_primes(15) == std::vector<i64>{3, 5});
    CHECK(dengli_primes(105).empty());   // odd number of primes
    CHECK(dengli_primes(10).empty());    // 2 | m
    CHECK(dengli_primes(35).empty());    // no 3 (mod 8) prime
    CHECK(!dengli_primes(990015).empty());
}

TEST_CASE("family search") {
    auto n2 = dengli_search(2, 200);
    CHECK(std::find(n2.begin(), n2.end(), 15) != n2.end());
    for (i64 m : n2) CHECK(dengli_primes(m).size() == 2);

    CHECK(dengli_search(4, 7000).empty());
    auto n4 = dengli_search(4, 30000);
    CHECK(n4 == std::vector<i64>{7215, 26455});

    auto all = dengli_search(4, 1000000);
    CHECK(all.size() == 61);
    CHECK(all.front() == 7215);
    CHECK(all.back() == 990015);
    CHECK(std::find(all.begin(), all.end(), 77415) != all.end());
}

TEST_CASE("hasse matrix structure and rank") {
    auto M = hasse_matrix(7215);
    CHECK(M.rows.size() == 6);
    CHECK(M.rows[0].size() == 5);
    for (const auto& row : M.rows) {
        int prod = 1;
        for (int e : row) prod *= e;
        // every row but the infinite place has product +1
        if (&row != &M.rows.back()) CHECK(prod == 1);
    }
    CHECK(f2_rank(M) == 4);
    CHECK_THROWS_AS(hasse_matrix(30), ArithError);

    for (i64 m : dengli_search(4, 60000)) CHECK(f2_rank(hasse_matrix(m)) == 4);
}

TEST_CASE("analytic class numbers") {
    CHECK(class_number_analytic(5).h == 1);
    CHECK(class_number_analytic(15).h == 2);
    CHECK(class_number_analytic(79).h == 3);
    CHECK(class_number_analytic(82).h == 4);
    auto cn = class_number_analytic(7215);
    CHECK(cn.h == 8);
    CHECK(cn.residual < 1e-6);
    CHECK(class_number_analytic(26455).h % 8 == 0);
}

TEST_CASE("unit index correction only applies to m = 1 (mod 4)") {
    CHECK(class_number_analytic(15).unit_index == 1);
    auto cn229 = class_number_analytic(229);  // classical h = 3 example
    CHECK(cn229.h == 3);
}

TEST_CASE("principal relation witnesses") {
    auto w = find_principal_relation(7215);
    CHECK(w.l2 == 5);
    CHECK(w.c == 1);
    CHECK(abs(w.u) == 85);
    CHECK(abs(w.v) == 1);
    CHECK(w.u * w.u - 7215 * w.v * w.v == w.sign * 2 * w.l2 * w.c * w.c);

    auto w2 = find_principal_relation(665223);
    CHECK(abs(w2.u) == 10603);
    CHECK(abs(w2.v) == 13);
    CHECK(w2.u * w2.u - 665223 * w2.v * w2.v == w2.sign * 2 * w2.l2 * w2.c * w2.c);

    // every family member below 10^5 has a witness satisfying the identity
    for (i64 m : dengli_search(4, 100000)) {
        auto r = find_principal_relation(m);
        CHECK(r.u * r.u - m * r.v * r.v == r.sign * 2 * r.l2 * r.c * r.c);
        CHECK(r.c % 2 == 1);
    }
}

TEST_CASE("regulator lemmas") {
    auto rc = regulator_check(7215);
    CHECK(rc.ok);
    CHECK(rc.unit_norm == 1);
    CHECK(rc.b_odd);
    CHECK(rc.a_mod_8 == 4);
    CHECK(rc.a_quarter_odd);
    CHECK(rc.square_congruence);
    CHECK(rc.vT_formula == 4);
}

TEST_CASE("full reports for the pinned members") {
    for (i64 m : {7215ll, 26455ll, 77415ll, 990015ll}) {
        auto rep = dengli_report(m);
        INFO("m = " << m);
        CHECK(rep.conditions_ok);
        CHECK(rep.matrix_rank == 4);
        CHECK(rep.h2_valuation == 3);
        CHECK(rep.vT == 4);
        CHECK(rep.unit.ok);
        CHECK(rep.predicted_vK2 == 6);
        CHECK(rep.relation.u * rep.relation.u - m * rep.relation.v * rep.relation.v ==
              rep.relation.sign * 2 * rep.relation.l2 * rep.relation.c * rep.relation.c);
    }
    auto bad = dengli_report(30);
    CHECK(!bad.conditions_ok);
}
