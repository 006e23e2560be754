#include "measure.h"

#include <numeric>
#include <thread>

namespace k2lp {

Schedule default_schedule_quad(int p) { return p == 2 ? Schedule{8, 16, 2} : Schedule{5, 9, 2}; }
Schedule default_schedule_cubic(int p) { return p == 3 ? Schedule{3, 6, 2} : Schedule{8, 12, 2}; }

i64 lambda_twist(u64 a, u64 c, u64 fn) {
    if (std::gcd(a, fn) != 1 || std::gcd(c, fn) != 1) throw ArithError("NotCoprime");
    u64 ap = mulmod(a % fn, invmod(c % fn, fn), fn);
    if (ap == 0) ap = fn;  // a'_c in [1, f_n]
    return (i64)(((u128)ap * (c % fn) - a % fn) / fn);
}

i64 choose_c(const DirichletCharacter& chi, unsigned p) {
    for (i64 c = 2;; ++c) {
        if (std::gcd<i64>(c, 2 * (i64)p * chi.f) != 1) continue;
        int e = chi.exponent(c);
        if (e > 0) return c;
        if (c > chi.f * 2 + 1000) throw ArithError("NoValidTwist");
    }
}

namespace {

// run fn(lo, hi) over chunks of [1, limit]; partials combined in index order
template <typename Part, typename Fn>
std::vector<Part> parallel_blocks(u64 limit, int threads, Fn&& body) {
    if (threads < 1) threads = 1;
    u64 nblk = (u64)threads;
    std::vector<Part> parts(nblk);
    if (nblk == 1) {
        body(1, limit + 1, parts[0]);
        return parts;
    }
    std::vector<std::thread> ts;
    u64 step = limit / nblk + 1;
    for (u64 b = 0; b < nblk; ++b) {
        u64 lo = 1 + b * step, hi = std::min(limit + 1, 1 + (b + 1) * step);
        if (lo >= hi) continue;
        ts.emplace_back([&, lo, hi, b] { body(lo, hi, parts[b]); });
    }
    for (auto& t : ts) t.join();
    return parts;
}

int raw_valuation_u64(u64 s, u64 modulus, int p) {
    s %= modulus;
    if (s == 0) return -1;  // at/above the precision cap
    int v = 0;
    while (s % (u64)p == 0) s /= (u64)p, ++v;
    return v;
}

u64 teichmuller(u64 a, int p, u64 M) {
    if (p == 2) {
        // theta(a) = +-1 by a mod 4
        return (a % 4 == 1) ? 1 : M - 1;
    }
    u64 t = a % M;
    for (int i = 0; i < 64; ++i) {
        u64 nt = powmod(t, (u64)p, M);
        if (nt == t) break;
        t = nt;
    }
    return t;
}

}  // namespace

QuadSums quad_sums(const DirichletCharacter& chi, int p, int n, i64 c, int threads) {
    const u64 f = (u64)chi.f;
    const u64 M = (p == 2) ? (u64)4 << n : [&] {
        u64 m = 3;
        for (int i = 0; i < n; ++i) m *= 3;
        return m;
    }();
    const u64 fn = M * f;
    const u64 cinv = invmod((u64)c % fn, fn);
    const i64 g = (1 - c) / 2;
    // inverse table mod M (odd/prime-to-p residues)
    std::vector<u32> inv(M, 0);
    for (u64 r = 1; r < M; ++r)
        if (r % (u64)p != 0) inv[r] = (u32)invmod(r, M);
    const auto* expo = chi.expo.data();

    if (p == 2) {
        struct Part {
            u64 s1 = 0, sm1 = 0;
        };
        u64 half = fn / 2;
        auto parts = parallel_blocks<Part>(half, threads, [&](u64 lo, u64 hi, Part& pt) {
            u64 a = lo | 1;  // odd start
            u64 rf = a % f, rM = a & (M - 1);
            for (; a < hi; a += 2, rf += 2, rM = (rM + 2) & (M - 1)) {
                if (rf >= f) rf -= f;
                int e = expo[rf];
                if (e < 0) continue;
                u64 aa = mulmod(a, cinv, fn);
                i64 w = (i64)(((u128)aa * (u64)c - a) / fn) + g;
                u64 wt = (u64)w;  // two's complement wraparound is exact mod 2^64
                u64 tm1 = a * wt, t1 = (u64)inv[rM] * wt;
                if (e == 0) {
                    pt.sm1 += tm1;
                    pt.s1 += t1;
                } else {
                    pt.sm1 -= tm1;
                    pt.s1 -= t1;
                }
            }
        });
        QuadSums out;
        out.modulus = M;
        u64 s1 = 0, sm1 = 0;
        for (auto& pt : parts) s1 += pt.s1, sm1 += pt.sm1;
        out.s1 = s1 & (M - 1);
        out.sm1 = sm1 & (M - 1);
        return out;
    }

    struct Part {
        i128 s1 = 0, sm1 = 0;
    };
    u64 half = fn / 2;
    auto parts = parallel_blocks<Part>(half, threads, [&](u64 lo, u64 hi, Part& pt) {
        u64 r3 = lo % 3, rf = lo % f, rM = lo % M;
        for (u64 a = lo; a < hi; ++a) {
            if (r3 != 0) {
                int e = expo[rf];
                if (e >= 0) {
                    u64 aa = mulmod(a, cinv, fn);
                    i64 w = (i64)(((u128)aa * (u64)c - a) / fn) + g;
                    i128 tm1 = (i128)(i64)(a % M) * w;
                    i128 t1 = (i128)(i64)inv[rM] * w;
                    if (e == 0) {
                        pt.sm1 += tm1;
                        pt.s1 += t1;
                    } else {
                        pt.sm1 -= tm1;
                        pt.s1 -= t1;
                    }
                }
            }
            if (++r3 == 3) r3 = 0;
            if (++rf == f) rf = 0;
            if (++rM == M) rM = 0;
        }
    });
    i128 s1 = 0, sm1 = 0;
    for (auto& pt : parts) s1 += pt.s1, sm1 += pt.sm1;
    auto red = [&](i128 x) {
        i128 m = (i128)M;
        x %= m;
        if (x < 0) x += m;
        return (u64)x;
    };
    return QuadSums{red(s1), red(sm1), M};
}

QuadMeasure measure_quadratic(const DirichletCharacter& chi, int p, const Schedule& sch, int threads) {
    QuadMeasure out;
    out.c = choose_c(chi, (unsigned)p);
    int prev1 = -2, prevm1 = -2;
    QuadSums last{};
    for (int n = sch.n0; n <= sch.nmax; ++n) {
        QuadSums qs = quad_sums(chi, p, n, out.c, threads);
        int v1 = raw_valuation_u64(qs.s1, qs.modulus, p);
        int vm1 = raw_valuation_u64(qs.sm1, qs.modulus, p);
        int cap = (p == 2 ? n + 2 : n + 1) - sch.guard;
        bool ok1 = v1 >= 0 && v1 == prev1 && v1 <= cap;
        bool okm1 = vm1 >= 0 && vm1 == prevm1 && vm1 <= cap;
        if (ok1 && okm1) {
            out.t = MeasureOutcome{v1, false, n, true};
            out.k = MeasureOutcome{vm1, false, n, true};
            last = qs;
            break;
        }
        prev1 = v1;
        prevm1 = vm1;
        last = qs;
        if (n == sch.nmax) {
            out.t = MeasureOutcome{v1, !ok1, n, ok1};
            out.k = MeasureOutcome{vm1, !okm1, n, okm1};
        }
    }
    if (p == 3) {
        // corollary congruence: S(1)/2 = S(-1)/(1+c^2) (mod 3)
        u64 M = last.modulus;
        u64 L1 = mulmod(last.s1, invmod(2 % M, M), M);
        u64 Lm1 = mulmod(last.sm1, invmod((u64)(1 + out.c * out.c) % M, M), M);
        out.congruence_ok = ((L1 + M - Lm1) % 3 == 0);
    }
    return out;
}

u64 quad_twisted_sum(const DirichletCharacter& chi, int p, int n, i64 c, i64 s) {
    const u64 f = (u64)chi.f;
    u64 M = (p == 2) ? (u64)4 << n : 3;
    if (p != 2)
        for (int i = 0; i < n; ++i) M *= 3;
    const u64 fn = M * f;
    const u64 cinv = invmod((u64)c % fn, fn);
    const i64 g = (1 - c) / 2;
    u64 acc = 0;
    for (u64 a = 1; a <= fn / 2; ++a) {
        if (a % (u64)p == 0) continue;
        int e = chi.exponent((i64)(a % f));
        if (e < 0) continue;
        u64 aa = mulmod(a, cinv, fn);
        i64 w = (i64)(((u128)aa * (u64)c - a) / fn) + g;
        // weight a^{-1} <a>^{1-s}, <a> = a / theta(a)
        u64 th = teichmuller(a, p, M);
        u64 br = mulmod(a % M, invmod(th, M), M);
        i64 ex = 1 - s;
        u64 pw = ex >= 0 ? powmod(br, (u64)ex, M) : powmod(invmod(br, M), (u64)(-ex), M);
        u64 wt = mulmod(invmod(a % M, M), pw, M);
        i64 term = (i64)mulmod(wt, (u64)((w % (i64)M + (i64)M) % (i64)M), M);
        if (e != 0) term = -term;
        acc = (u64)(((i64)acc + term) % (i64)M + (i64)M) % M;
    }
    return acc;
}

bool norm_compatibility_quad(const DirichletCharacter& chi, int p, i64 c, int n) {
    u64 M = (p == 2) ? (u64)4 << n : 3;
    if (p != 2)
        for (int i = 0; i < n; ++i) M *= 3;
    for (i64 s : {-1, 0, 1, 2}) {
        u64 a = quad_twisted_sum(chi, p, n, c, s);
        u64 b = quad_twisted_sum(chi, p, n + 1, c, s);
        if ((a % M) != (b % M)) return false;
    }
    return true;
}

// ---- cubic p = 3 ----

namespace {

u64 pow3(int n) {
    u64 r = 1;
    while (n--) r *= 3;
    return r;
}

}  // namespace

Cubic3Sums cubic3_sums(const CubicFieldInstance& inst, int n, i64 c, int s) {
    const u64 f = (u64)inst.f;
    const u64 fn = pow3(n) * f;
    const u64 cinv = invmod((u64)c % fn, fn);
    const i64 g2 = 1 - c;  // track 2*(lambda + (1-c)/2) to stay integral, halve at the end
    const auto* expo = inst.chi.expo.data();
    // A0: kernel classes in the half range; A1 = c A0, A2 = c^2 A0 mod fn
    std::vector<u64> A0;
    for (u64 a = 1; a <= fn / 2; ++a) {
        if (a % 3 == 0) continue;
        int e = expo[a % f];
        if (e == 0) A0.push_back(a);
    }
    i128 S[3] = {0, 0, 0};
    for (int j = 0; j < 3; ++j) {
        for (u64 a0 : A0) {
            u64 a = a0;
            if (j == 1) a = mulmod(a0, (u64)c % fn, fn);
            if (j == 2) a = mulmod(mulmod(a0, (u64)c % fn, fn), (u64)c % fn, fn);
            u64 aa = mulmod(a, cinv, fn);
            i64 w2 = 2 * (i64)(((u128)aa * (u64)c - a) / fn) + g2;
            u64 wt = (s == -1) ? a : invmod(a, fn);
            S[j] += (i128)(i64)wt * w2;
        }
    }
    Cubic3Sums out;
    for (int j = 0; j < 3; ++j) {
        i128 x = S[j];
        bool neg = x < 0;
        if (neg) x = -x;
        if (x % 2 != 0) throw ArithError("HalfIntegralSum");
        x /= 2;
        mpz_class v = 0;
        mpz_class hi = (mpz_class)(u64)(x >> 64), lo = (mpz_class)(u64)x;
        v = (hi << 64) + lo;
        out.S[j] = neg ? mpz_class(-v) : v;
    }
    return out;
}

mpz_class norm_exact(const Cubic3Sums& s) {
    mpz_class A = s.S[0] - s.S[2], B = s.S[1] - s.S[2];
    return A * A - A * B + B * B;
}

CubicMeasure measure_cubic3(const CubicFieldInstance& inst, const Schedule& sch) {
    CubicMeasure out;
    out.c = choose_c(inst.chi, 3);
    int prev1 = -2, prevm1 = -2;
    for (int n = sch.n0; n <= sch.nmax; ++n) {
        auto get_v = [&](int s) -> int {
            mpz_class nrm = norm_exact(cubic3_sums(inst, n, out.c, s));
            if (nrm == 0) return -1;
            return (int)padic_valuation(nrm, 3);
        };
        int v1 = get_v(1), vm1 = get_v(-1);
        int cap = n - sch.guard;  // components congruent mod 3^n between levels
        bool ok1 = v1 >= 0 && v1 == prev1 && v1 <= 2 * cap;
        bool okm1 = vm1 >= 0 && vm1 == prevm1 && vm1 <= 2 * cap;
        if (ok1 && okm1) {
            out.t = MeasureOutcome{v1, false, n, true};
            out.k = MeasureOutcome{vm1, false, n, true};
            return out;
        }
        prev1 = v1;
        prevm1 = vm1;
        if (n == sch.nmax) {
            out.t = MeasureOutcome{v1, !ok1, n, ok1};
            out.k = MeasureOutcome{vm1, !okm1, n, okm1};
        }
    }
    return out;
}

bool norm_compatibility_cubic3(const CubicFieldInstance& inst, i64 c, int n) {
    mpz_class M = (long)pow3(n);
    for (int s : {-1, 1}) {
        Cubic3Sums a = cubic3_sums(inst, n, c, s);
        Cubic3Sums b = cubic3_sums(inst, n + 1, c, s);
        for (int j = 0; j < 3; ++j) {
            mpz_class d = a.S[j] - b.S[j];
            if (d % M != 0) return false;
        }
    }
    return true;
}

// ---- cubic p = 2 ----

Cubic2Sums cubic2_sums(const CubicFieldInstance& inst, int n, i64 c, int s, int threads) {
    const u64 f = (u64)inst.f;
    const u64 M = (u64)4 << n;
    const u64 fn = M * f;
    const u64 cinv = invmod((u64)c % fn, fn);
    const i64 g = (1 - c) / 2;
    const auto* expo = inst.chi.expo.data();
    std::vector<u32> inv(M, 0);
    if (s == 1)
        for (u64 r = 1; r < M; r += 2) inv[r] = (u32)invmod(r, M);
    struct Part {
        u64 S[3] = {0, 0, 0};
    };
    auto parts = parallel_blocks<Part>(fn / 2, threads, [&](u64 lo, u64 hi, Part& pt) {
        u64 a = lo | 1;
        u64 rf = a % f, rM = a & (M - 1);
        for (; a < hi; a += 2, rf += 2, rM = (rM + 2) & (M - 1)) {
            if (rf >= f) rf -= f;
            int e = expo[rf];
            if (e < 0) continue;
            u64 aa = mulmod(a, cinv, fn);
            u64 w = (u64)((i64)(((u128)aa * (u64)c - a) / fn) + g);
            pt.S[e] += (s == -1 ? a : (u64)inv[rM]) * w;
        }
    });
    Cubic2Sums out;
    out.modulus = M;
    for (auto& pt : parts)
        for (int j = 0; j < 3; ++j) out.S[j] += pt.S[j];
    for (int j = 0; j < 3; ++j) out.S[j] &= M - 1;
    return out;
}

u64 norm_mod(const Cubic2Sums& s) {
    u64 M = s.modulus;
    u64 A = (s.S[0] + M - s.S[2]) & (M - 1), B = (s.S[1] + M - s.S[2]) & (M - 1);
    return (A * A + M * M - A * B + B * B) & (M - 1);
}

CubicMeasure measure_cubic2(const CubicFieldInstance& inst, const Schedule& sch, int threads) {
    CubicMeasure out;
    out.c = choose_c(inst.chi, 2);
    int prev1 = -2, prevm1 = -2;
    u64 lastNT = 0, lastNR = 0, lastM = 0;
    for (int n = sch.n0; n <= sch.nmax; ++n) {
        u64 NT = norm_mod(cubic2_sums(inst, n, out.c, 1, threads));
        u64 NR = norm_mod(cubic2_sums(inst, n, out.c, -1, threads));
        u64 M = (u64)4 << n;
        int v1 = raw_valuation_u64(NT, M, 2);
        int vm1 = raw_valuation_u64(NR, M, 2);
        int cap = n + 2 - sch.guard;
        bool ok1 = v1 >= 0 && v1 == prev1 && v1 <= cap;
        bool okm1 = vm1 >= 0 && vm1 == prevm1 && vm1 <= cap;
        lastNT = NT;
        lastNR = NR;
        lastM = M;
        if (ok1 && okm1) {
            out.t = MeasureOutcome{v1, false, n, true};
            out.k = MeasureOutcome{vm1, false, n, true};
            break;
        }
        prev1 = v1;
        prevm1 = vm1;
        if (n == sch.nmax) {
            out.t = MeasureOutcome{v1, !ok1, n, ok1};
            out.k = MeasureOutcome{vm1, !okm1, n, okm1};
        }
    }
    // corollary congruence: #R_2 = #T (mod 8) via unit-twist normalization
    u64 M = lastM;
    i64 c = out.c;
    u64 tw = (u64)((1 + (i128)c * c + (i128)c * c * c * c) % (i128)M);
    u64 LT = mulmod(lastNT, invmod(3 % M, M), M);
    u64 LR = mulmod(lastNR, invmod(tw, M), M);
    out.congruence_ok = ((LT + M - LR) % 8 == 0);
    return out;
}

// ---- degree-p exact measure ----

CycloElt degp_measure_sum(i64 ell, unsigned p, int n, u64 weight_exp, i64* c_used) {
    if (!is_prime((u64)ell) || (u64)(ell - 1) % p != 0) throw ArithError("BadCongruence");
    u64 fn = (u64)ell;
    for (int i = 0; i <= n; ++i) fn *= p;
    u64 g0 = primitive_root((u64)ell);
    auto dlog = discrete_log_table((u64)ell, g0);
    i64 c = 2;
    for (;; ++c) {
        if (std::gcd<u64>((u64)c, 2 * p * (u64)ell) != 1) continue;
        if (dlog[(size_t)(c % ell)] % p != 0) break;
    }
    if (c_used) *c_used = c;
    u64 cinv = invmod((u64)c, fn);
    i64 g2 = 1 - c;  // doubled constant term, exact division at the end
    std::vector<mpz_class> coef2(p - 1);
    std::vector<mpz_class> tail(1);
    mpz_class tail2 = 0;  // coefficient pushed onto every basis slot by Y^(p-1)
    for (u64 a = 1; a <= fn / 2; ++a) {
        if (a % p == 0 || a % (u64)ell == 0) continue;
        u64 aa = mulmod(a, cinv, fn);
        i64 w2 = 2 * (i64)(((u128)aa * (u64)c - a) / fn) + g2;
        u64 A = powmod(a, weight_exp, fn);
        mpz_class E = mpz_class((long)w2) * mpz_class((unsigned long)A);
        unsigned u = dlog[(size_t)(a % (u64)ell)] % p;
        if (u == p - 1)
            tail2 += E;
        else
            coef2[u] += E;
    }
    CycloElt out(p);
    for (unsigned k = 0; k + 1 < p; ++k) {
        mpz_class t = coef2[k] - tail2;
        if (t % 2 != 0) throw ArithError("HalfIntegralSum");
        out.c[k] = t / 2;
    }
    return out;
}

}  // namespace k2lp
