// Twisted Stickelberger pseudo-measure sums at integer s, with precision
// scheduling and stability-guarded valuation extraction.
#pragma once

#include "arith.h"
#include "chars.h"

namespace k2lp {

struct Schedule {
    int n0 = 3;
    int nmax = 6;
    int guard = 2;
};

Schedule default_schedule_quad(int p);   // p=2: (8,16,2); p=3: (5,9,2)
Schedule default_schedule_cubic(int p);  // p=3: (3,6,2); p=2: (8,12,2)

struct MeasureOutcome {
    int valuation = 0;
    bool below_precision = false;
    int n_used = 0;
    bool stable = false;
};

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lambda = (a'_c * c - a) / f_n with a'_c * c = a (mod f_n), a'_c in [1, f_n].
i64 lambda_twist(u64 a, u64 c, u64 fn);

// Smallest c >= 2 with gcd(c, 2 p f) = 1 and chi(c) != 1.
i64 choose_c(const DirichletCharacter& chi, unsigned p);

// ---- quadratic paths (raw half-range sums; modulus q p^n) ----
struct QuadSums {
    u64 s1 = 0;      // weight a^{-1} (s = 1)
    u64 sm1 = 0;     // weight a (s = -1)
    u64 modulus = 0;
};
QuadSums quad_sums(const DirichletCharacter& chi, int p, int n, i64 c, int threads);

struct QuadMeasure {
    MeasureOutcome t;  // s = 1, raw valuation of S(1)
    MeasureOutcome k;  // s = -1, raw valuation of S(-1)
    i64 c = 0;
    bool congruence_ok = true;  // p=3: S(1)/2 = S(-1)/(1+c^2) mod 3
};
QuadMeasure measure_quadratic(const DirichletCharacter& chi, int p, const Schedule& sch, int threads);

// Generic weight a^{-1}<a>^{1-s} mod q p^n (Teichmueller-split), any integer s.
u64 quad_twisted_sum(const DirichletCharacter& chi, int p, int n, i64 c, i64 s);

// Level-(n+1) sum reduces to level-n sum mod q p^n, s in {-1, 0, 1, 2}.
bool norm_compatibility_quad(const DirichletCharacter& chi, int p, i64 c, int n);

// ---- cyclic cubic, p = 3 (exact coset sums over f_n = 3^n f) ----
struct Cubic3Sums {
    mpz_class S[3];  // S0 + S1 Y + S2 Y^2
};
Cubic3Sums cubic3_sums(const CubicFieldInstance& inst, int n, i64 c, int s);

struct CubicMeasure {
    MeasureOutcome t;  // s = 1, raw v(norm)
    MeasureOutcome k;  // s = -1, raw v(norm)
    i64 c = 0;
    bool congruence_ok = true;  // p=2 only: N_T/3 = N_R/(1+c^2+c^4) mod 8
};
CubicMeasure measure_cubic3(const CubicFieldInstance& inst, const Schedule& sch);

// Componentwise S_k(n+1) = S_k(n) mod 3^n, s in {-1, 1}.
bool norm_compatibility_cubic3(const CubicFieldInstance& inst, i64 c, int n);

// ---- cyclic cubic, p = 2 (wraparound sums mod 2^(n+2), prime f) ----
struct Cubic2Sums {
    u64 S[3] = {0, 0, 0};
    u64 modulus = 0;
};
Cubic2Sums cubic2_sums(const CubicFieldInstance& inst, int n, i64 c, int s, int threads);
CubicMeasure measure_cubic2(const CubicFieldInstance& inst, const Schedule& sch, int threads);

// ---- degree-p fields (ell = 1 mod p), exact measure sum ----
// Weight a^weight_exp over a in [1, f_n/2], f_n = p^(n+1) ell; the result is
// exact in Z[Y]/Phi_p. weight_exp = 1 realizes s = -1; m-1 realizes s = 1-m.
CycloElt degp_measure_sum(i64 ell, unsigned p, int n, u64 weight_exp, i64* c_used = nullptr);

u64 norm_mod(const Cubic2Sums& s);  // |S0-S2, S1-S2| norm mod modulus
mpz_class norm_exact(const Cubic3Sums& s);

}  // namespace k2lp
