#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_data.h"
#include "invariants.h"

using namespace k2lp;

TEST_CASE("genus constants") {
    CHECK(genus_constant_quad(7).C == 1);     // 7 = 7 (mod 8), D = 1
    CHECK(genus_constant_quad(15).C == 2);    // 15 = 7 (mod 8), D = 2
    CHECK(genus_constant_quad(14).C == 0);    // D = 1, not 7 (mod 8)
    CHECK(genus_constant_quad(105).C == 2);   // D = 3, not 7 (mod 8)
    CHECK(genus_constant_quad(1015).C == 3);  // 5*7*29, 7 (mod 8)
    CHECK_THROWS_AS(genus_constant_quad(2), ArithError);

    CHECK(genus_constant_cubic3(7).C == 0);
    CHECK(genus_constant_cubic3(63).C == 0);   // primes != 3 dividing f: just 7
    CHECK(genus_constant_cubic3(91).C == 1);
    CHECK(genus_constant_cubic3(171).C == 0);
    CHECK_THROWS_AS(genus_constant_cubic3(9), ArithError);
}

TEST_CASE("exceptional small fields are hardwired") {
    Schedule s2 = default_schedule_quad(2), s3 = default_schedule_quad(3);
    auto r = quad_row(2, 2, s2, 1);
    CHECK(r.vK2 == 2);
    CHECK(r.verdict == Verdict::NotApplicable);
    r = quad_row(3, 2, s2, 1);
    CHECK(r.vK2 == 3);
    r = quad_row(3, 3, s3, 1);
    CHECK(r.vK2 == 1);
    // m = 2, p = 3 is NOT exceptional; the measure gives v3 = 0
    r = quad_row(2, 3, s3, 1);
    CHECK(r.vK2 == 0);
}

TEST_CASE("appendix rows, quadratic p=2") {
    Schedule sch = default_schedule_quad(2);
    for (const auto& g : golden::kQuadP2) {
        auto r = quad_row(g.m, 2, sch, 1);
        INFO(g.source);
        CHECK(r.vT == g.vT);
        CHECK(r.vR2 == g.vR2);
        CHECK(r.vK2 == g.vR2 + 2);
        CHECK(r.C == g.C);
        CHECK(r.c == g.c);
        CHECK((r.verdict == Verdict::Equality) == g.equality);
        CHECK(r.stable);
    }
}

TEST_CASE("appendix rows, quadratic p=3") {
    Schedule sch = default_schedule_quad(3);
    for (const auto& g : golden::kQuadP3) {
        auto r = quad_row(g.m, 3, sch, 1);
        INFO(g.source);
        CHECK(r.vK2 == g.vK2);
        if (g.vT >= 0) CHECK(r.vT == g.vT);
        CHECK(r.congruence_ok);
    }
}

TEST_CASE("appendix rows, cubic p=3") {
    Schedule sch = default_schedule_cubic(3);
    for (const auto& g : golden::kCubicP3) {
        auto insts = cubic_field_instances(g.f);
        bool found = false;
        for (const auto& inst : insts) {
            if (inst.poly[3] != g.k3) continue;
            found = true;
            auto r = cubic_row(inst, 3, sch, 1);
            INFO(g.source);
            CHECK(r.vK2 == g.vK2);
            CHECK(r.vT == g.vT);
            CHECK(r.C == g.C);
            CHECK((r.verdict == Verdict::Equality) == g.equality);
        }
        CHECK(found);
    }
}

TEST_CASE("appendix rows, cubic p=2") {
    Schedule sch = default_schedule_cubic(2);
    for (const auto& g : golden::kCubicP2) {
        auto insts = cubic_field_instances(g.f);
        REQUIRE(insts.size() == 1);
        auto r = cubic_row(insts[0], 2, sch, 1);
        INFO(g.source);
        CHECK(r.vR2 == g.vR2);
        CHECK(r.vT == g.vT);
        CHECK(r.vK2 == g.vR2 + 3);
        CHECK(r.congruence_ok);
    }
}

TEST_CASE("degree-p exact oracle") {
    for (const auto& g : golden::kDegP) {
        INFO(g.source);
        CHECK(degp_k2_valuation_exact(g.ell, (unsigned)g.p) == g.v);
    }
}

// raw measure valuation carries the twist-factor norm on top of the exact
// value: v_p(N(1 - chi(c) c^2)) = v_p((c^{2p} - 1) / (c^2 - 1))
static int twist_factor_valuation(i64 c, int p) {
    mpz_class c2 = mpz_class(c) * c, num;
    mpz_pow_ui(num.get_mpz_t(), c2.get_mpz_t(), (unsigned long)p);
    return (int)padic_valuation(mpz_class((num - 1) / (c2 - 1)), (unsigned long)p);
}

TEST_CASE("degree-p measure agrees with the exact oracle") {
    struct Case { int p; i64 ell; };
    for (auto [p, ell] : {Case{3, 7}, Case{3, 19}, Case{3, 199}, Case{5, 11}, Case{5, 181}, Case{7, 127}}) {
        int exact = degp_k2_valuation_exact(ell, (unsigned)p);
        for (int n : {1, 2}) {
            i64 c = 0;
            CycloElt S = degp_measure_sum(ell, (unsigned)p, n, 1, &c);
            int raw = (int)padic_valuation(cyclo_norm(S), (unsigned long)p);
            CHECK(raw == exact + twist_factor_valuation(c, p));
        }
    }
}

TEST_CASE("higher weight valuations, p=5 level 2") {
    for (const auto& g : golden::kHigherK) {
        INFO(g.source);
        CHECK(higher_k_valuation(g.ell, 5, 2) == g.v);
    }
}

TEST_CASE("w2 and Birch-Tate") {
    CHECK(w2_quadratic(7) == 24);
    CHECK(w2_quadratic(2) == 48);
    CHECK(w2_quadratic(5) == 120);
    CHECK(w2_quadratic(3) == 144);
    CHECK(w2_quadratic(15) == 24);
    CHECK(birch_tate_k2(5) == 4);
    CHECK(birch_tate_k2_valuation(2, 2) == 2);   // hardwired exceptional row
    CHECK(birch_tate_k2_valuation(3, 2) == 3);
    CHECK(birch_tate_k2_valuation(3, 3) == 1);
    CHECK(birch_tate_k2_valuation(7, 2) == 4);   // matches vR2 + 2 from B1
    CHECK(birch_tate_k2_valuation(15, 2) == 4);
    CHECK(birch_tate_k2_valuation(15, 3) == 1);  // matches B2
}

TEST_CASE("contradiction guard rejects an impossible row") {
    // classification is internal; drive it through a row whose constraints all
    // hold and confirm no throw over a small scan
    Schedule sch = default_schedule_quad(2);
    for (i64 m = 5; m <= 60; ++m) {
        if (!is_squarefree(m)) continue;
        CHECK_NOTHROW(quad_row(m, 2, sch, 1));
    }
}
