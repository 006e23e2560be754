/* Public C interface: p-adic L-valuation scans for real abelian fields,
 * exact K-theory oracles, and the quadratic family verifier.
 *
 * All entry points are reentrant as long as each context is used from a
 * single thread at a time. Errors are reported through the return code;
 * k2lp_last_error() gives a diagnostic string for the most recent failure
 * on the context. */
#ifndef K2LP_H
#define K2LP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct k2lp_ctx k2lp_ctx;

enum k2lp_status {
    K2LP_OK = 0,
    K2LP_EBADARG = 1,       /* invalid argument (range, primality, parity, ...) */
    K2LP_EPRECISION = 2,    /* precision schedule exhausted before stability */
    K2LP_ECONTRADICTION = 3,/* a proven constraint failed on computed data */
    K2LP_ERANGE = 4,        /* output buffer too small */
    K2LP_EINTERNAL = 5
};

enum k2lp_verdict { K2LP_EQUALITY = 0, K2LP_INEQUALITY = 1, K2LP_NA = 2 };

/* Which measure path a schedule override applies to. */
enum k2lp_path {
    K2LP_PATH_QUAD_P2 = 0,
    K2LP_PATH_QUAD_P3 = 1,
    K2LP_PATH_CUBIC_P3 = 2,
    K2LP_PATH_CUBIC_P2 = 3
};

k2lp_ctx* k2lp_ctx_new(void);
void k2lp_ctx_free(k2lp_ctx* ctx);
const char* k2lp_last_error(const k2lp_ctx* ctx);

void k2lp_set_threads(k2lp_ctx* ctx, int threads);
int k2lp_set_schedule(k2lp_ctx* ctx, int path, int n0, int nmax, int guard);

/* One scan-table row. Valuations that a path does not expose are -1. */
typedef struct {
    long long label;       /* m, f, or ell */
    int p;
    int vT;
    int vK2;
    int vR2;
    int C;                 /* genus lower bound, -1 when not applicable */
    int verdict;           /* k2lp_verdict */
    int n_used;
    int stable;
    int congruence_ok;     /* modulus-of-continuity congruence, 1 = holds */
    long long c;           /* twist used */
} k2lp_row;

/* Real quadratic Q(sqrt m), p in {2, 3}. */
int k2lp_quad_row(k2lp_ctx* ctx, long long m, int p, k2lp_row* out);

typedef struct {
    k2lp_row row;
    long long poly[4];     /* monic defining cubic, degree-descending */
    long long a, b;        /* 4f = a^2 + 27 b^2 */
} k2lp_cubic_row;

/* All cyclic cubic fields of conductor exactly f; *count <= cap rows
 * written. cap too small returns K2LP_ERANGE with *count = needed. */
int k2lp_cubic_rows(k2lp_ctx* ctx, long long f, int p,
                    k2lp_cubic_row* out, int cap, int* count);

/* Degree-p subfield of Q(mu_ell), exact Stickelberger oracle. higher_n < 0
 * fills vK2 with v_p(#K_2); higher_n >= 0 fills it with the weight
 * m = 2 + (p-3) p^higher_n Bernoulli valuation instead. */
int k2lp_degp_row(k2lp_ctx* ctx, long long ell, int p, int higher_n, k2lp_row* out);

/* Quadratic family search: all qualifying m <= bound for even n. */
int k2lp_dengli_search(k2lp_ctx* ctx, int n, long long bound,
                       long long* out, int cap, int* count);

typedef struct {
    long long m;
    int nprimes;
    long long primes[16];  /* verifier order: l1, l2, rest ascending */
    int conditions_ok;
    int matrix_rank;
    long h;
    int h2_valuation;
    int vT;                /* analytic v2(#T) */
    int predicted_vK2;     /* n + 2 */
    /* unit lemmas */
    int unit_ok;
    int a_mod_8;
    int a_quarter_odd;
    int b_odd;
    int unit_norm;
    int square_congruence;
    /* principality relation u^2 - m v^2 = sign * 2 * l2 * c^2 */
    char rel_u[128];
    char rel_v[128];
    long long rel_sign;
    long long rel_l2;
    long long rel_c;
} k2lp_dengli;

int k2lp_dengli_report(k2lp_ctx* ctx, long long m, k2lp_dengli* out);

/* Exact cross-check oracles. */
int k2lp_birch_tate_valuation(k2lp_ctx* ctx, long long m, int p, long* out);

#ifdef __cplusplus
}
#endif

#endif /* K2LP_H */
