#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arith.h"

using namespace k2lp;

TEST_CASE("kronecker symbol") {
    CHECK(kronecker(1, 15) == 1);
    CHECK(kronecker(2, 7) == 1);
    CHECK(kronecker(3, 5) == -1);
    CHECK(kronecker(6, 15) == 0);
    // brute-force cross-check against square tables for odd primes
    for (i64 p : {3, 5, 7, 11, 13, 17, 19}) {
        for (i64 a = 1; a < p; ++a) {
            bool sq = false;
            for (i64 x = 1; x < p; ++x)
                if (x * x % p == a) sq = true;
            CHECK(kronecker(a, p) == (sq ? 1 : -1));
        }
    }
    // multiplicativity incl. negative and even arguments
    CHECK(kronecker(-1, 5) == 1);
    CHECK(kronecker(-1, 7) == -1);
    CHECK(kronecker(2, 17) == 1);
    CHECK(kronecker(60, 13) * kronecker(60, 7) == kronecker(60, 91));
}

TEST_CASE("primitive roots and discrete logs") {
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(11) == 2);
    CHECK(primitive_root(5) == 2);
    CHECK(discrete_log(1, 3, 7) == 0);
    CHECK(discrete_log(3, 3, 7) == 1);
    CHECK(discrete_log(2, 3, 7) == 2);
    auto tab = discrete_log_table(101, primitive_root(101));
    for (u64 a = 1; a < 101; ++a)
        CHECK(powmod(primitive_root(101), tab[a], 101) == a);
}

TEST_CASE("valuations") {
    CHECK(padic_valuation((i64)12, 2) == 2);
    CHECK(padic_valuation((i64)10, 5) == 1);
    CHECK(padic_valuation(mpq_class(1, 30), 5) == -1);
    CHECK(padic_valuation(mpz_class("243"), 3) == 5);
    CHECK_THROWS_AS(padic_valuation((i64)0, 2), ArithError);
}

TEST_CASE("modular primitives") {
    CHECK(powmod(3, 100, 101) == 1);
    CHECK(invmod(3, 10) == 7);
    CHECK_THROWS_AS(invmod(4, 8), ArithError);
    CHECK(is_prime(2));
    CHECK(is_prime(3001));
    CHECK(is_prime(4177));
    CHECK(!is_prime(4181));
    CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
    CHECK(!is_prime(2305843009213693953ull));
}

TEST_CASE("cyclotomic norms") {
    CycloElt zero(3);
    zero.add_monomial(0, 1);
    zero.add_monomial(1, 1);
    zero.add_monomial(2, 1);  // 1 + Y + Y^2 = 0
    CHECK(zero.is_zero());
    CycloElt two(3);
    two.add_monomial(0, 2);
    CHECK(cyclo_norm(two) == 4);
    CycloElt omy(3);
    omy.add_monomial(0, 1);
    omy.add_monomial(1, -1);  // 1 - Y
    CHECK(cyclo_norm(omy) == 3);
    CycloElt q5(5);
    q5.add_monomial(0, 1);
    q5.add_monomial(1, -1);
    CHECK(cyclo_norm(q5) == 5);
    CycloElt half(2);
    half.add_monomial(0, -7);
    CHECK(cyclo_norm(half) == -7);
    // multiplicativity
    CycloElt prod = two * omy;
    CHECK(cyclo_norm(prod) == 12);
}

TEST_CASE("bernoulli numbers") {
    auto B = bernoulli_numbers(12);
    CHECK(B[0] == 1);
    CHECK(B[1] == mpq_class(-1, 2));
    CHECK(B[2] == mpq_class(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == mpq_class(-1, 30));
    CHECK(B[12] == mpq_class(-691, 2730));
}

TEST_CASE("fundamental units") {
    auto u5 = fundamental_unit(5);  // minimal in Z[sqrt 5]
    CHECK(u5.a == 2);
    CHECK(u5.b == 1);
    CHECK(u5.norm == -1);
    auto u15 = fundamental_unit(15);
    CHECK(u15.a == 4);
    CHECK(u15.b == 1);
    CHECK(u15.norm == 1);
    auto u7215 = fundamental_unit(7215);
    CHECK(u7215.norm == 1);
    CHECK(u7215.a * u7215.a - 7215 * u7215.b * u7215.b == 1);
    CHECK(u7215.a % 8 == 4);
    // defining identity for a large member
    auto u = fundamental_unit(990015);
    CHECK(u.a * u.a - 990015 * u.b * u.b == u.norm);
}

TEST_CASE("misc integer helpers") {
    CHECK(is_squarefree(15));
    CHECK(!is_squarefree(12));
    CHECK(prime_factors(7215) == std::vector<i64>{3, 5, 13, 37});
    CHECK(binomial_mpz(52, 5) == 2598960);
}
