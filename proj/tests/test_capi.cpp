#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "k2lp/k2lp.h"

struct Ctx {
    k2lp_ctx* c = k2lp_ctx_new();
    ~Ctx() { k2lp_ctx_free(c); }
    operator k2lp_ctx*() const { return c; }
};

TEST_CASE("context lifecycle") {
    Ctx ctx;
    REQUIRE(ctx.c != nullptr);
    CHECK(std::string(k2lp_last_error(ctx)) == "");
    k2lp_set_threads(ctx, 2);
    k2lp_set_threads(ctx, 0);  // ignored
    CHECK(k2lp_set_schedule(ctx, K2LP_PATH_QUAD_P2, 6, 10, 2) == K2LP_OK);
    CHECK(k2lp_set_schedule(ctx, 7, 6, 10, 2) == K2LP_EBADARG);
    CHECK(k2lp_set_schedule(ctx, 0, 5, 3, 2) == K2LP_EBADARG);
}

TEST_CASE("quadratic rows through the C surface") {
    Ctx ctx;
    k2lp_row row;
    REQUIRE(k2lp_quad_row(ctx, 15, 2, &row) == K2LP_OK);
    CHECK(row.label == 15);
    CHECK(row.p == 2);
    CHECK(row.vT == 2);
    CHECK(row.vR2 == 2);
    CHECK(row.vK2 == 4);
    CHECK(row.C == 2);
    CHECK(row.verdict == K2LP_EQUALITY);
    CHECK(row.c == 13);
    CHECK(row.stable == 1);

    REQUIRE(k2lp_quad_row(ctx, 41, 2, &row) == K2LP_OK);
    CHECK(row.verdict == K2LP_INEQUALITY);

    REQUIRE(k2lp_quad_row(ctx, 15, 3, &row) == K2LP_OK);
    CHECK(row.vK2 == 1);
    CHECK(row.congruence_ok == 1);
}

TEST_CASE("argument validation") {
    Ctx ctx;
    k2lp_row row;
    CHECK(k2lp_quad_row(ctx, 15, 5, &row) == K2LP_EBADARG);
    CHECK(k2lp_quad_row(ctx, 1, 2, &row) == K2LP_EBADARG);
    CHECK(k2lp_quad_row(ctx, 12, 2, &row) == K2LP_EBADARG);  // not squarefree
    CHECK(std::string(k2lp_last_error(ctx)).find("NotSquarefree") != std::string::npos);
    CHECK(k2lp_quad_row(nullptr, 15, 2, &row) == K2LP_EBADARG);
    CHECK(k2lp_degp_row(ctx, 19, 4, -1, &row) == K2LP_EBADARG);
    CHECK(k2lp_degp_row(ctx, 3, 3, -1, &row) == K2LP_EBADARG);
}

TEST_CASE("precision error surfaces as a status code") {
    Ctx ctx;
    k2lp_row row;
    REQUIRE(k2lp_set_schedule(ctx, K2LP_PATH_QUAD_P2, 3, 4, 2) == K2LP_OK);
    CHECK(k2lp_quad_row(ctx, 1022, 2, &row) == K2LP_EPRECISION);
    CHECK(std::strlen(k2lp_last_error(ctx)) > 0);
}

TEST_CASE("cubic rows and the ERANGE contract") {
    Ctx ctx;
    k2lp_cubic_row rows[4];
    int count = 0;
    REQUIRE(k2lp_cubic_rows(ctx, 91, 3, rows, 4, &count) == K2LP_OK);
    CHECK(count == 2);
    for (int i = 0; i < count; ++i) {
        CHECK(rows[i].row.vK2 == 1);
        CHECK(rows[i].row.vT == 1);
        CHECK(rows[i].row.C == 1);
        CHECK(rows[i].row.verdict == K2LP_EQUALITY);
        CHECK(4 * 91 == rows[i].a * rows[i].a + 27 * rows[i].b * rows[i].b);
    }
    count = 0;
    CHECK(k2lp_cubic_rows(ctx, 91, 3, rows, 1, &count) == K2LP_ERANGE);
    CHECK(count == 2);  // needed size reported

    REQUIRE(k2lp_cubic_rows(ctx, 31, 2, rows, 4, &count) == K2LP_OK);
    CHECK(count == 1);
    CHECK(rows[0].row.vR2 == 2);
    CHECK(rows[0].row.vK2 == 5);
}

TEST_CASE("degree-p rows") {
    Ctx ctx;
    k2lp_row row;
    REQUIRE(k2lp_degp_row(ctx, 19, 3, -1, &row) == K2LP_OK);
    CHECK(row.vK2 == 1);
    REQUIRE(k2lp_degp_row(ctx, 2593, 3, -1, &row) == K2LP_OK);
    CHECK(row.vK2 == 6);
    REQUIRE(k2lp_degp_row(ctx, 101, 5, 2, &row) == K2LP_OK);
    CHECK(row.vK2 == 3);
}

TEST_CASE("family search and report") {
    Ctx ctx;
    long long ms[8];
    int count = 0;
    REQUIRE(k2lp_dengli_search(ctx, 4, 30000, ms, 8, &count) == K2LP_OK);
    REQUIRE(count == 2);
    CHECK(ms[0] == 7215);
    CHECK(ms[1] == 26455);
    CHECK(k2lp_dengli_search(ctx, 3, 30000, ms, 8, &count) == K2LP_EBADARG);  // odd n

    k2lp_dengli rep;
    REQUIRE(k2lp_dengli_report(ctx, 7215, &rep) == K2LP_OK);
    CHECK(rep.conditions_ok == 1);
    CHECK(rep.nprimes == 4);
    CHECK(rep.primes[0] == 3);
    CHECK(rep.primes[1] == 5);
    CHECK(rep.matrix_rank == 4);
    CHECK(rep.h == 8);
    CHECK(rep.h2_valuation == 3);
    CHECK(rep.vT == 4);
    CHECK(rep.predicted_vK2 == 6);
    CHECK(rep.unit_ok == 1);
    CHECK(std::string(rep.rel_u) == "85");
    CHECK(std::string(rep.rel_v) == "1");
    CHECK(rep.rel_l2 == 5);
    CHECK(rep.rel_c == 1);

    CHECK(k2lp_dengli_report(ctx, 10, &rep) == K2LP_EBADARG);
    CHECK(std::string(k2lp_last_error(ctx)).find("NotDengLi") != std::string::npos);
}

TEST_CASE("birch-tate oracle") {
    Ctx ctx;
    long v = -1;
    REQUIRE(k2lp_birch_tate_valuation(ctx, 15, 2, &v) == K2LP_OK);
    CHECK(v == 4);
    REQUIRE(k2lp_birch_tate_valuation(ctx, 15, 3, &v) == K2LP_OK);
    CHECK(v == 1);
    CHECK(k2lp_birch_tate_valuation(ctx, 12, 2, &v) == K2LP_EBADARG);
}
