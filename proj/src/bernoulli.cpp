#include "bernoulli.h"

namespace k2lp {

void CycloRat::add_monomial(unsigned k, const mpq_class& v) {
    k %= d;
    if (k == d - 1) {
        for (auto& x : c) x -= v;  // Y^(d-1) = -(1 + ... + Y^(d-2))
    } else {
        c[k] += v;
    }
}

long cyclo_rat_norm_valuation(const CycloRat& x, unsigned long p) {
    if (x.d == 2) return padic_valuation(x.c[0], p);
    // clear denominators, take norm of integer part, subtract (d-1)*v(den)
    mpz_class den = 1;
    for (const auto& q : x.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    CycloElt e(x.d);
    bool zero = true;
    for (unsigned i = 0; i + 1 < x.d; ++i) {
        mpq_class t = x.c[i] * mpq_class(den);
        e.c[i] = t.get_num();
        if (e.c[i] != 0) zero = false;
    }
    if (zero) throw ArithError("ZeroValuation");
    mpz_class nrm = cyclo_norm(e);
    return padic_valuation(nrm, p) - (long)(x.d - 1) * padic_valuation(den, p);
}

CycloRat generalized_bernoulli_sum(const DirichletCharacter& chi, unsigned m) {
    if (chi.d < 2) throw ArithError("NotPrimitive");
    const i64 f = chi.f;
    auto B = bernoulli_numbers(m);
    CycloRat out(chi.d);
    // per residue a: f^(m-1) B_m(a/f) = sum_j C(m,j) B_j a^(m-j) f^(j-1)
    for (i64 a = 1; a <= f; ++a) {
        int e = chi.expo[(size_t)(a % f)];
        if (e < 0) continue;
        mpq_class E = 0;
        mpz_class apow = 1;  // a^j accumulated backwards: build a^(m-j) via table
        std::vector<mpz_class> ap(m + 1);
        ap[0] = 1;
        for (unsigned j = 1; j <= m; ++j) ap[j] = ap[j - 1] * a;
        mpq_class fpow = mpq_class(1) / f;  // f^(j-1)
        for (unsigned j = 0; j <= m; ++j) {
            if (B[j] != 0) E += mpq_class(binomial_mpz(m, j)) * B[j] * mpq_class(ap[m - j]) * fpow;
            fpow *= f;
        }
        out.add_monomial((unsigned)e, E);
    }
    return out;
}

CycloRat generalized_bernoulli_gf(const DirichletCharacter& chi, unsigned m) {
    if (chi.d < 2) throw ArithError("NotPrimitive");
    const i64 f = chi.f;
    const unsigned d = chi.d;
    // N(t) = sum_a chi(a) e^{at}, D(t) = (e^{ft}-1)/t, both to order m;
    // B_{m,chi} = m! [t^m] N/D.
    std::vector<CycloRat> N(m + 1, CycloRat(d));
    std::vector<mpq_class> fact(m + 2);
    fact[0] = 1;
    for (unsigned i = 1; i <= m + 1; ++i) fact[i] = fact[i - 1] * (int)i;
    for (i64 a = 1; a <= f; ++a) {
        int e = chi.expo[(size_t)(a % f)];
        if (e < 0) continue;
        mpz_class ap = 1;
        for (unsigned i = 0; i <= m; ++i) {
            N[i].add_monomial((unsigned)e, mpq_class(ap) / fact[i]);
            ap *= a;
        }
    }
    std::vector<mpq_class> D(m + 1);
    mpz_class fp = f;
    for (unsigned i = 0; i <= m; ++i) {
        D[i] = mpq_class(fp) / fact[i + 1];
        fp *= f;
    }
    std::vector<CycloRat> Q(m + 1, CycloRat(d));
    for (unsigned i = 0; i <= m; ++i) {
        CycloRat acc = N[i];
        for (unsigned j = 0; j < i; ++j) {
            for (unsigned k = 0; k + 1 < d; ++k) acc.c[k] -= Q[j].c[k] * D[i - j];
        }
        for (unsigned k = 0; k + 1 < d; ++k) Q[i].c[k] = acc.c[k] / D[0];
    }
    CycloRat out(d);
    for (unsigned k = 0; k + 1 < d; ++k) {
        out.c[k] = Q[m].c[k] * fact[m];
        mpq_class& q = out.c[k];
        mpq_canonicalize(q.get_mpq_t());
    }
    return out;
}

CycloRat generalized_bernoulli(const DirichletCharacter& chi, unsigned m) {
    CycloRat a = generalized_bernoulli_sum(chi, m);
    CycloRat b = generalized_bernoulli_gf(chi, m);
    for (auto& q : a.c) mpq_canonicalize(q.get_mpq_t());
    for (auto& q : b.c) mpq_canonicalize(q.get_mpq_t());
    if (!(a == b)) throw ArithError("BernoulliAlgorithmMismatch");
    return a;
}

}  // namespace k2lp
