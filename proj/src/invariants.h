// Valuation tables for #K_2, #R_2, #T from the measure paths, genus-theoretic
// lower bounds, equality/inequality classification, and the exact oracles
// (resultant, Bernoulli, Birch-Tate) used to cross-check them.
#pragma once

#include "bernoulli.h"
#include "measure.h"

namespace k2lp {

enum class Verdict { Equality, Inequality, NotApplicable };

// Raised when a computed table row violates a proven constraint
// (lower bound, dichotomy, or the equality-case value of v(#K_2)).
struct ContradictionDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenusReport {
    int D = 0;  // ambiguous-class 2-rank datum (number of relevant ramified primes)
    int C = 0;  // genus constant: proven lower bound for the valuations
};

GenusReport genus_constant_quad(i64 m);    // real quadratic, p = 2; m = 2 excluded
GenusReport genus_constant_cubic3(i64 f);  // cyclic cubic, p = 3; f = 9 excluded

struct InvariantRow {
    i64 label = 0;  // m (quadratic) or f (cubic)
    int p = 0;
    int vT = -1;
    int vK2 = -1;
    int vR2 = -1;  // -1 when the path does not expose it
    int C = -1;
    Verdict verdict = Verdict::NotApplicable;
    int n_used = 0;
    bool stable = false;
    bool congruence_ok = true;
    i64 c = 0;
};

// Quadratic field Q(sqrt m), p in {2, 3}. m in {2, 3} returns the hardwired
// exceptional valuations with verdict NotApplicable.
InvariantRow quad_row(i64 m, int p, const Schedule& sch, int threads);

// Cyclic cubic field, p in {2, 3}. f = 9 (p = 3) is hardwired.
InvariantRow cubic_row(const CubicFieldInstance& inst, int p, const Schedule& sch, int threads);

// ---- exact oracles ----

// v_p(#K_2) for the degree-p subfield of Q(mu_ell) by the Stickelberger
// resultant: norm of sum_a (a^2 - a ell) Y^(dlog a mod p).
int degp_k2_valuation_exact(i64 ell, unsigned p);

// Raw v_p(norm S) of the level-n measure sum with weight a^weight_exp.
int degp_measure_valuation(i64 ell, unsigned p, int n, u64 weight_exp);

// v_p(#K_{2+2(m-1)}-analogue) = v_p(prod_chi B_{m,chi}) + 1, m = 2 + (p-3)p^n.
long higher_k_valuation(i64 ell, unsigned p, int n);

// #roots of unity in the compositum sense entering Birch-Tate; 24 generically.
i64 w2_quadratic(i64 m);

mpz_class birch_tate_k2(i64 m);  // #K_2(O_K) for K = Q(sqrt m), via w_2 |zeta_K(-1)|
long birch_tate_k2_valuation(i64 m, unsigned p);

}  // namespace k2lp
