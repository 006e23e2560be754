// Generalized Bernoulli numbers B_{m,chi} as elements of Q(zeta_d), d prime.
#pragma once

#include "arith.h"
#include "chars.h"

namespace k2lp {

// Element of Q(zeta_d) on the power basis 1, Y, ..., Y^(d-2); d prime
// (d = 2 collapses to a single rational).
struct CycloRat {
    unsigned d;
    std::vector<mpq_class> c;

    explicit CycloRat(unsigned d_) : d(d_), c(d_ >= 2 ? d_ - 1 : 1) {}
    void add_monomial(unsigned k, const mpq_class& v);
    bool operator==(const CycloRat& o) const { return d == o.d && c == o.c; }
};

// v_p of the norm to Q (resultant with Phi_d); throws on zero.
long cyclo_rat_norm_valuation(const CycloRat& x, unsigned long p);

// B_{m,chi} = f^(m-1) * sum_a chi(a) B_m(a/f), by the Bernoulli-polynomial
// expansion (B_1 = -1/2 convention).
CycloRat generalized_bernoulli_sum(const DirichletCharacter& chi, unsigned m);

// Same value by generating-function coefficient extraction:
// sum_a chi(a) t e^{at} / (e^{ft} - 1) = sum_m B_{m,chi} t^m / m!.
CycloRat generalized_bernoulli_gf(const DirichletCharacter& chi, unsigned m);

// Dual-algorithm wrapper: computes both, throws on disagreement.
CycloRat generalized_bernoulli(const DirichletCharacter& chi, unsigned m);

}  // namespace k2lp
