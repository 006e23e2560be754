#include "quadlab.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace k2lp {

std::vector<i64> dengli_primes(i64 m) {
    if (m <= 1 || m % 2 == 0 || !is_squarefree(m)) return {};
    std::vector<i64> ps = prime_factors(m);
    i64 l1 = 0;
    std::vector<i64> rest;
    for (i64 l : ps) {
        if (l % 8 == 3) {
            if (l1) return {};  // two 3-mod-8 primes
            l1 = l;
        } else if (l % 8 == 5) {
            rest.push_back(l);
        } else {
            return {};
        }
    }
    if (!l1 || rest.empty()) return {};
    i64 l2 = 0;
    std::vector<i64> tail;
    for (i64 l : rest) {
        if (kronecker(l1, l) == -1) {
            if (l2) return {};  // (l1/l) = -1 must single out l2
            l2 = l;
        } else {
            tail.push_back(l);
        }
    }
    if (!l2) return {};
    std::vector<i64> out{l1, l2};
    out.insert(out.end(), tail.begin(), tail.end());
    // pairwise condition among the 5-mod-8 primes
    for (size_t i = 1; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (kronecker(out[i], out[j]) != -1) return {};
    if (out.size() % 2 != 0) return {};
    return out;
}

std::vector<i64> dengli_search(int n, i64 bound) {
    if (n < 2 || n % 2 != 0) throw ArithError("BadArg");
    std::vector<i64> primes;
    for (i64 q = 3; q <= bound / 15; q += 2)
        if ((q % 8 == 3 || q % 8 == 5) && is_prime((u64)q)) primes.push_back(q);
    std::vector<i64> out;
    std::vector<size_t> pick;
    auto dfs = [&](auto&& self, size_t from, i64 prod, int left) -> void {
        if (left == 0) {
            if (!dengli_primes(prod).empty()) out.push_back(prod);
            return;
        }
        for (size_t i = from; i < primes.size(); ++i) {
            if (prod > bound / primes[i]) break;
            self(self, i + 1, prod * primes[i], left - 1);
        }
    };
    dfs(dfs, 0, 1, n);
    std::sort(out.begin(), out.end());
    return out;
}

SymbolMatrix hasse_matrix(i64 m) {
    std::vector<i64> ls = dengli_primes(m);
    if (ls.empty()) throw ArithError("NotDengLi");
    int n = (int)ls.size();
    SymbolMatrix M;
    M.m = m;
    M.places.push_back(2);
    M.places.insert(M.places.end(), ls.begin(), ls.end());
    M.row_labels = M.places;
    M.row_labels.push_back(-1);
    M.rows.assign((size_t)n + 2, std::vector<int>((size_t)n + 1, 1));
    // row 2
    for (int j = 0; j < n; ++j) M.rows[0][(size_t)j + 1] = kronecker(2, ls[(size_t)j]);
    // odd prime rows: column 2 by the Q_2(sqrt -1) norm criterion, odd
    // columns by quadratic reciprocity at unramified places, diagonal from
    // the product formula
    for (int i = 0; i < n; ++i) {
        auto& row = M.rows[(size_t)i + 1];
        row[0] = (ls[(size_t)i] % 4 == 1) ? 1 : -1;
        int prod = row[0];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            row[(size_t)j + 1] = kronecker(ls[(size_t)i], ls[(size_t)j]);
            prod *= row[(size_t)j + 1];
        }
        row[(size_t)i + 1] = prod;  // row product = +1
    }
    auto& last = M.rows[(size_t)n + 1];
    last[0] = -1;
    for (int j = 0; j < n; ++j) last[(size_t)j + 1] = kronecker(-1, ls[(size_t)j]);
    return M;
}

int f2_rank(const SymbolMatrix& M) {
    std::vector<u64> rows;
    for (const auto& r : M.rows) {
        u64 bits = 0;
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j] == -1) bits |= (u64)1 << j;
        rows.push_back(bits);
    }
    int rank = 0;
    for (size_t col = 0; col < M.places.size(); ++col) {
        u64 mask = (u64)1 << col;
        size_t piv = rows.size();
        for (size_t i = (size_t)rank; i < rows.size(); ++i)
            if (rows[i] & mask) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[(size_t)rank], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != (size_t)rank && (rows[i] & mask)) rows[i] ^= rows[(size_t)rank];
        ++rank;
    }
    return rank;
}

ClassNumber class_number_analytic(i64 m) {
    i64 D = (m % 4 == 1) ? m : 4 * m;
    ContinuedFractionUnit eps = fundamental_unit(m);
    mpf_class ef(0, 256);
    ef = mpf_class(eps.a, 256) + mpf_class(eps.b, 256) * sqrt(mpf_class(m, 256));
    long exp2;
    double mant = mpf_get_d_2exp(&exp2, ef.get_mpf_t());
    long double logeps = logl((long double)mant) + (long double)exp2 * logl(2.0L);
    long double s = 0.0L;
    for (i64 r = 1; r < D; ++r) {
        int ch = kronecker(D, r);
        if (ch) s -= (long double)ch * logl(sinl((long double)M_PI * r / D));
    }
    long double h0 = s / (2.0L * logeps);
    // index 3 only possible for m = 1 (mod 4): eps has a cube root
    // (t + u sqrt m)/2 in O_K iff t^3 - 3 n t = 2a has an integer root with
    // (t^2 - 4n)/m an odd perfect square (n = norm of eps)
    int idx = 1;
    if (m % 4 == 1) {
        mpz_class two_a = 2 * eps.a, t0;
        mpz_root(t0.get_mpz_t(), two_a.get_mpz_t(), 3);
        for (mpz_class t = t0 - 2; t <= t0 + 2; ++t) {
            if (t <= 0 || t * t * t - 3 * eps.norm * t != two_a) continue;
            mpz_class num = t * t - 4 * eps.norm;
            if (num % m == 0) {
                mpz_class u2 = num / m, u;
                mpz_sqrt(u.get_mpz_t(), u2.get_mpz_t());
                if (u * u == u2) idx = 3;
            }
            break;
        }
    }
    long double h = h0 * idx;
    long double r = fabsl(h - roundl(h));
    if (r < 1e-6L && roundl(h) >= 1) {
        ClassNumber out;
        out.h = (long)roundl(h);
        out.residual = (double)r;
        out.unit_index = idx;
        return out;
    }
    throw PrecisionError("class number residual too large at m=" + std::to_string(m));
}

RelationWitness find_principal_relation(i64 m, i64 ybound, i64 cmax) {
    std::vector<i64> ls = dengli_primes(m);
    if (ls.empty()) throw ArithError("NotDengLi");
    const i64 l2 = ls[1];
    const mpz_class tgt = 2 * l2;
    // pass 1, c = 1: |x^2 - m y^2| = 2 l2 < sqrt(disc) forces x/y to be a
    // convergent of sqrt(m); walk one full period
    {
        mpz_class a0 = sqrt(mpz_class(m));
        mpz_class P = 0, Q = 1, a = a0;
        mpz_class p0 = 1, p1 = a0, q0 = 0, q1 = 1;
        for (int step = 0; step < 10000000; ++step) {
            mpz_class t = p1 * p1 - m * q1 * q1;
            if (abs(t) == tgt) {
                RelationWitness w;
                w.u = p1;
                w.v = q1;
                w.sign = (t > 0) ? 1 : -1;
                w.l2 = l2;
                w.c = 1;
                return w;
            }
            if (step > 0 && abs(t) == 1) break;  // full period scanned
            P = a * Q - P;
            Q = (m - P * P) / Q;
            a = (a0 + P) / Q;
            mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
            p0 = p1;
            p1 = p2;
            q0 = q1;
            q1 = q2;
        }
    }
    // pass 2: odd cofactors c <= cmax, windowed x scan around sqrt(m) y
    std::vector<std::pair<i64, i64>> targets;  // (2 l2 c^2, c)
    for (i64 c = 3; c <= cmax; c += 2) targets.emplace_back(2 * l2 * c * c, c);
    i64 Nmax = targets.empty() ? 0 : targets.back().first;
    for (i64 y = 1; y <= ybound; ++y) {
        u128 my2 = (u128)(u64)m * (u64)y * (u64)y;
        u64 x = (u64)sqrtl((long double)my2);
        while ((u128)x * x > my2) --x;
        while ((u128)(x + 1) * (x + 1) <= my2) ++x;
        for (u64 xx = x;; --xx) {  // negative side: m y^2 - x^2
            if (xx < 1) break;
            u128 N = my2 - (u128)xx * xx;
            if (N > (u128)(u64)Nmax) break;
            for (auto& [t, c] : targets)
                if (N == (u128)(u64)t) {
                    RelationWitness w;
                    w.u = mpz_class((unsigned long)xx);
                    w.v = y;
                    w.sign = -1;
                    w.l2 = l2;
                    w.c = c;
                    return w;
                }
            if (xx == 1) break;
        }
        for (u64 xx = x + 1;; ++xx) {
            u128 N = (u128)xx * xx - my2;
            if (N > (u128)(u64)Nmax) break;
            for (auto& [t, c] : targets)
                if (N == (u128)(u64)t) {
                    RelationWitness w;
                    w.u = mpz_class((unsigned long)xx);
                    w.v = y;
                    w.sign = 1;
                    w.l2 = l2;
                    w.c = c;
                    return w;
                }
        }
    }
    throw ArithError("SearchExhausted");
}

RegulatorCheck regulator_check(i64 m) {
    ContinuedFractionUnit eps = fundamental_unit(m);
    RegulatorCheck rc;
    rc.unit_norm = eps.norm;
    rc.a_mod_8 = (int)mpz_fdiv_ui(eps.a.get_mpz_t(), 8);
    mpz_class aq = eps.a / 4;
    rc.a_quarter_odd = (eps.a % 4 == 0) && mpz_odd_p(aq.get_mpz_t());
    rc.b_odd = mpz_odd_p(eps.b.get_mpz_t());
    // eps^2 = (a^2 + m b^2) + 2ab sqrt(m): compare with -1 + 8 sqrt(m) mod 16
    mpz_class rat = eps.a * eps.a + m * eps.b * eps.b + 1;
    mpz_class irr = 2 * eps.a * eps.b;
    rc.square_congruence = (rat % 16 == 0) && (irr % 16 == 8);
    rc.ok = (rc.unit_norm == 1) && rc.a_quarter_odd && rc.b_odd && rc.square_congruence;
    if (!rc.ok) throw ArithError("LemmaViolated");
    ClassNumber h = class_number_analytic(m);
    rc.vT_formula = padic_valuation((i64)h.h, 2) + 0 + 1;
    return rc;
}

DengLiReport dengli_report(i64 m) {
    DengLiReport rep;
    rep.m = m;
    rep.primes = dengli_primes(m);
    rep.conditions_ok = !rep.primes.empty();
    if (!rep.conditions_ok) return rep;
    int n = (int)rep.primes.size();
    rep.matrix_rank = f2_rank(hasse_matrix(m));
    ClassNumber h = class_number_analytic(m);
    rep.h = h.h;
    rep.h2_valuation = padic_valuation((i64)h.h, 2);
    rep.unit = regulator_check(m);
    rep.vT = rep.unit.vT_formula;
    rep.relation = find_principal_relation(m);
    rep.predicted_vK2 = n + 2;
    return rep;
}

}  // namespace k2lp
