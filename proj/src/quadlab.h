// Real quadratic oracles: symbol matrices, analytic class number,
// principality relations, unit lemmas, and the family verifier.
#pragma once

#include "invariants.h"

namespace k2lp {

// Primes in verifier order: l1 = 3 (mod 8); l2 = the 5 (mod 8) prime with
// (l1/l2) = -1; remaining primes ascending. Empty when m does not qualify.
std::vector<i64> dengli_primes(i64 m);

// All qualifying m = l1 ... ln <= bound, ascending. n even.
std::vector<i64> dengli_search(int n, i64 bound);

struct SymbolMatrix {
    i64 m = 0;
    std::vector<i64> places;                     // [2, l1, ..., ln]
    std::vector<std::vector<int>> rows;          // (n+2) x (n+1), entries +-1
    std::vector<i64> row_labels;                 // [2, l1, ..., ln, -1]
};

SymbolMatrix hasse_matrix(i64 m);  // throws ArithError("NotDengLi")
int f2_rank(const SymbolMatrix& M);

struct ClassNumber {
    long h = 0;
    double residual = 0;  // |analytic value - h| before rounding
    int unit_index = 1;   // 1, or 3 when the Z[sqrt m] unit is a cube
};
// h = sqrt(disc) L(1,chi) / (2 log eps) by the log-sin sum; throws
// PrecisionError if no integer within 1e-6.
ClassNumber class_number_analytic(i64 m);

struct RelationWitness {
    mpz_class u, v;
    i64 sign = 1;   // u^2 - m v^2 = sign * 2 * l2 * c^2
    i64 l2 = 0;
    i64 c = 1;      // odd cofactor
};
// c = 1 pass on the continued-fraction convergents of sqrt(m) first, then a
// windowed odd-c scan. Throws ArithError("SearchExhausted") on failure.
RelationWitness find_principal_relation(i64 m, i64 ybound = 1000000, i64 cmax = 99);

struct RegulatorCheck {
    bool ok = false;
    int a_mod_8 = 0;
    bool a_quarter_odd = false;
    bool b_odd = false;
    int unit_norm = 0;
    bool square_congruence = false;  // eps^2 = -1 + 8 sqrt(m) (mod 16)
    int vT_formula = 0;              // v2(h) + v2(regulator part = 1) + 1
};
RegulatorCheck regulator_check(i64 m);  // throws ArithError("LemmaViolated")

struct DengLiReport {
    i64 m = 0;
    std::vector<i64> primes;
    bool conditions_ok = false;
    int matrix_rank = 0;
    int h2_valuation = 0;
    long h = 0;
    int vT = 0;  // analytic v2(#T)
    RegulatorCheck unit;
    RelationWitness relation;
    int predicted_vK2 = 0;  // n + 2
};
DengLiReport dengli_report(i64 m);

}  // namespace k2lp
