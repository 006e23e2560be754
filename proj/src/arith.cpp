#include "arith.h"
#include <cmath>

#include <algorithm>
#include <numeric>

namespace k2lp {

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    // extended Euclid on signed 128-bit to avoid overflow
    i128 t = 0, nt = 1;
    i128 r = (i128)m, nr = (i128)(a % m);
    while (nr != 0) {
        i128 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw ArithError("NotCoprime");
    if (t < 0) t += m;
    return (u64)t;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic base set for 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    // strip 2s from n: (a/2) depends on a mod 8
    int v = 0;
    while ((n & 1) == 0) n >>= 1, ++v;
    if (v & 1) {
        i64 am = a & 7;  // a mod 8, needs a odd here (a even handled above)
        if (am < 0) am += 8;
        if (am == 3 || am == 5) sign = -sign;
    }
    a %= n;
    if (a < 0) a += n;
    // Jacobi symbol (a/n), n odd positive
    while (a != 0) {
        int va = 0;
        while ((a & 1) == 0) a >>= 1, ++va;
        if (va & 1) {
            i64 nm = n & 7;
            if (nm == 3 || nm == 5) sign = -sign;
        }
        if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? sign : 0;
}

u64 primitive_root(u64 ell) {
    if (!is_prime(ell)) throw ArithError("NotPrime");
    if (ell == 2) return 1;
    u64 phi = ell - 1;
    std::vector<u64> ps;
    u64 t = phi;
    for (u64 d = 2; d * d <= t; ++d) {
        if (t % d == 0) {
            ps.push_back(d);
            while (t % d == 0) t /= d;
        }
    }
    if (t > 1) ps.push_back(t);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : ps) {
            if (powmod(g, phi / q, ell) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

std::vector<u32> discrete_log_table(u64 ell, u64 g) {
    std::vector<u32> tab(ell, 0);
    u64 x = 1;
    for (u64 k = 0; k + 1 < ell; ++k) {
        tab[x] = (u32)k;
        x = mulmod(x, g, ell);
    }
    return tab;
}

u64 discrete_log(u64 a, u64 g, u64 ell) {
    a %= ell;
    if (a == 0) throw ArithError("NotCoprime");
    u64 x = 1;
    for (u64 k = 0; k + 1 < ell; ++k) {
        if (x == a) return k;
        x = mulmod(x, g, ell);
    }
    throw ArithError("NotCoprime");
}

int padic_valuation(i64 x, i64 p) {
    if (x == 0) throw ArithError("ZeroValuation");
    if (x < 0) x = -x;
    int v = 0;
    while (x % p == 0) x /= p, ++v;
    return v;
}

long padic_valuation(const mpz_class& x, unsigned long p) {
    if (x == 0) throw ArithError("ZeroValuation");
    mpz_class t = abs(x), q, r;
    long v = 0;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), p);
        if (r != 0) return v;
        t = q;
        ++v;
    }
}

long padic_valuation(const mpq_class& x, unsigned long p) {
    if (x == 0) throw ArithError("ZeroValuation");
    long vn = (x.get_num() == 0) ? 0 : padic_valuation(mpz_class(x.get_num()), p);
    long vd = padic_valuation(mpz_class(x.get_den()), p);
    return vn - vd;
}

bool is_squarefree(i64 m) {
    if (m < 0) m = -m;
    if (m == 0) return false;
    for (i64 d = 2; d * d <= m; ++d) {
        if (m % (d * d) == 0) return false;
        while (m % d == 0) m /= d;
    }
    return true;
}

std::vector<i64> prime_factors(i64 m) {
    if (m < 0) m = -m;
    std::vector<i64> out;
    for (i64 d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

CycloElt::CycloElt(unsigned p_, std::optional<mpz_class> m)
    : p(p_), c(p_ >= 2 ? p_ - 1 : 1), mod(std::move(m)) {
    if (p < 2) throw ArithError("BadCyclotomicOrder");
}

void CycloElt::reduce() {
    if (!mod) return;
    for (auto& x : c) {
        x %= *mod;
        if (x < 0) x += *mod;
    }
}

void CycloElt::add_monomial(unsigned k, const mpz_class& v) {
    k %= p;
    if (k == p - 1) {
        // Y^(p-1) = -(1 + Y + ... + Y^(p-2))
        for (auto& x : c) x -= v;
    } else {
        c[k] += v;
    }
}

CycloElt CycloElt::operator+(const CycloElt& o) const {
    CycloElt r(*this);
    for (unsigned i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    r.reduce();
    return r;
}

CycloElt CycloElt::operator-(const CycloElt& o) const {
    CycloElt r(*this);
    for (unsigned i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    r.reduce();
    return r;
}

CycloElt CycloElt::operator*(const CycloElt& o) const {
    CycloElt r(p, mod);
    // schoolbook product then fold Y^k for k >= p-1 via Y^p = 1, Y^(p-1) = -(sum)
    std::vector<mpz_class> prod(2 * p - 3 + 1);
    for (unsigned i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (unsigned j = 0; j < o.c.size(); ++j) prod[i + j] += c[i] * o.c[j];
    }
    for (unsigned k = 0; k < prod.size(); ++k) {
        if (prod[k] != 0) r.add_monomial(k % p, prod[k]);
    }
    r.reduce();
    return r;
}

bool CycloElt::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const mpz_class& x) { return x == 0; });
}

namespace {

// Resultant of monic A and B over Q by the Euclidean recursion.
mpq_class resultant(std::vector<mpq_class> A, std::vector<mpq_class> B) {
    auto deg = [](const std::vector<mpq_class>& P) -> long {
        for (long i = (long)P.size() - 1; i >= 0; --i)
            if (P[i] != 0) return i;
        return -1;
    };
    mpq_class acc = 1;
    long dA = deg(A), dB = deg(B);
    for (;;) {
        if (dB < 0) return 0;
        if (dB == 0) {
            mpq_class r = 1;
            for (long i = 0; i < dA; ++i) r *= B[0];
            return acc * r;
        }
        // R = A mod B
        std::vector<mpq_class> R = A;
        for (long i = dA; i >= dB; --i) {
            if (R[i] == 0) continue;
            mpq_class q = R[i] / B[dB];
            for (long j = 0; j <= dB; ++j) R[i - dB + j] -= q * B[j];
        }
        long dR = deg(R);
        mpq_class lc = 1;
        for (long i = 0; i < dA - dR; ++i) lc *= B[dB];
        if ((dA & 1) && (dB & 1)) acc = -acc;
        acc *= lc;
        A = B;
        dA = dB;
        B = R;
        dB = dR;
    }
}

}  // namespace

mpz_class cyclo_norm(const CycloElt& x) {
    if (x.p == 2) return x.c[0];
    std::vector<mpq_class> phi(x.p, 1);  // Phi_p = 1 + x + ... + x^(p-1)
    std::vector<mpq_class> L(x.c.size());
    for (unsigned i = 0; i < x.c.size(); ++i) L[i] = mpq_class(x.c[i]);
    mpq_class r = resultant(phi, L);
    mpq_class rc;
    mpq_canonicalize(r.get_mpq_t());
    if (r.get_den() != 1) throw ArithError("NonIntegralResultant");
    return r.get_num();
}

std::vector<mpq_class> bernoulli_numbers(unsigned upto) {
    // sum_{j=0}^{n-1} C(n,j) B_j = 0 for n >= 2; B_0 = 1, B_1 = -1/2.
    std::vector<mpq_class> B(upto + 1);
    B[0] = 1;
    for (unsigned n = 1; n <= upto; ++n) {
        mpq_class s = 0;
        for (unsigned j = 0; j < n; ++j) {
            if (B[j] != 0) s += mpq_class(binomial_mpz(n + 1, j)) * B[j];
        }
        B[n] = -s / mpq_class(binomial_mpz(n + 1, n));
    }
    return B;
}

ContinuedFractionUnit fundamental_unit(i64 m) {
    if (m <= 1 || !is_squarefree(m)) throw ArithError("NotSquarefree");
    i64 a0 = (i64)std::sqrt((double)m);
    while ((a0 + 1) * (a0 + 1) <= m) ++a0;
    while (a0 * a0 > m) --a0;
    i64 P = 0, Q = 1, ai = a0;
    mpz_class p0 = 1, p1 = a0, q0 = 0, q1 = 1;
    unsigned period = 0;
    for (;;) {
        ++period;
        mpz_class t = p1 * p1 - m * q1 * q1;
        if (t == 1 || t == -1)
            return ContinuedFractionUnit{m, p1, q1, t == 1 ? 1 : -1, period};
        P = ai * Q - P;
        Q = (m - P * P) / Q;
        ai = (a0 + P) / Q;
        mpz_class np = ai * p1 + p0, nq = ai * q1 + q0;
        p0 = p1;
        p1 = np;
        q0 = q1;
        q1 = nq;
    }
}

}  // namespace k2lp
