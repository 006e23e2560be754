#include "chars.h"
#include <cmath>

#include <numeric>

namespace k2lp {

DirichletCharacter quadratic_character(i64 m) {
    if (m <= 1 || !is_squarefree(m)) throw ArithError("NotSquarefree");
    i64 disc = (m % 4 == 1) ? m : 4 * m;
    DirichletCharacter chi;
    chi.f = disc;
    chi.d = 2;
    chi.expo.assign((size_t)disc, -1);
    for (i64 a = 0; a < disc; ++a) {
        int k = kronecker(disc, a);
        if (k != 0) chi.expo[(size_t)a] = (k == 1) ? 0 : 1;
    }
    return chi;
}

std::vector<DirichletCharacter> order_p_characters(i64 ell, unsigned p) {
    if (ell <= 2 || (u64)(ell - 1) % p != 0) throw ArithError("BadCongruence");
    u64 g = primitive_root((u64)ell);
    auto dlog = discrete_log_table((u64)ell, g);
    std::vector<DirichletCharacter> out;
    for (unsigned j = 1; j < p; ++j) {
        DirichletCharacter chi;
        chi.f = ell;
        chi.d = p;
        chi.expo.assign((size_t)ell, -1);
        for (i64 a = 1; a < ell; ++a)
            chi.expo[(size_t)a] = (int)((u64)j * (dlog[(size_t)a] % p) % p);
        if (!chi.is_even()) throw ArithError("OddCharacter");  // p odd: automatic
        out.push_back(std::move(chi));
    }
    return out;
}

namespace {

mpz_class cubic_disc(const std::array<i64, 4>& P) {
    // disc of x^3 + b x^2 + c x + d
    mpz_class b = P[1], c = P[2], d = P[3];
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

bool poly_has_root_mod(const std::array<i64, 4>& P, u64 r) {
    for (u64 x = 0; x < r; ++x) {
        u64 v = 0;
        for (i64 cc : P) {
            i64 c = cc % (i64)r;
            if (c < 0) c += (i64)r;
            v = (mulmod(v, x, r) + (u64)c) % r;
        }
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

DirichletCharacter artin_kernel_match(i64 f, const std::array<i64, 4>& poly, u64 prime_search_bound) {
    mpz_class disc = cubic_disc(poly);
    std::vector<uint8_t> ker((size_t)f, 0);
    for (i64 s = 1; s < f; ++s) {
        if (std::gcd(s, f) != 1) continue;
        bool decided = false;
        for (u64 r = (u64)s; r < prime_search_bound; r += (u64)f) {
            if (r <= 3 || !is_prime(r)) continue;
            if ((u64)(3 * f) % r == 0) continue;
            if (mpz_divisible_ui_p(disc.get_mpz_t(), (unsigned long)r)) continue;  // index prime
            ker[(size_t)s] = poly_has_root_mod(poly, r) ? 1 : 0;
            decided = true;
            break;
        }
        if (!decided) throw ArithError("SieveExhausted");
    }
    // index-3 kernel -> exponent table: ker -> 0, c0*ker -> 1, c0^2*ker -> 2
    i64 c0 = -1;
    for (i64 s = 2; s < f; ++s) {
        if (std::gcd(s, f) == 1 && !ker[(size_t)s]) {
            c0 = s;
            break;
        }
    }
    if (c0 < 0) throw ArithError("KernelNotIndex3");
    u64 c0inv = invmod((u64)c0, (u64)f);
    DirichletCharacter chi;
    chi.f = f;
    chi.d = 3;
    chi.expo.assign((size_t)f, -1);
    for (i64 s = 1; s < f; ++s) {
        if (std::gcd(s, f) != 1) continue;
        if (ker[(size_t)s]) {
            chi.expo[(size_t)s] = 0;
        } else if (ker[mulmod((u64)s, c0inv, (u64)f)]) {
            chi.expo[(size_t)s] = 1;
        } else {
            if (!ker[mulmod(mulmod((u64)s, c0inv, (u64)f), c0inv, (u64)f)])
                throw ArithError("KernelNotIndex3");
            chi.expo[(size_t)s] = 2;
        }
    }
    return chi;
}

std::vector<CubicFieldInstance> cubic_field_instances(i64 f, u64 prime_search_bound) {
    std::vector<CubicFieldInstance> out;
    if (f < 7) return out;
    int h = 0;
    i64 F = f;
    while (F % 3 == 0) F /= 3, ++h;
    if (h != 0 && h != 2) return out;
    if (!is_squarefree(F)) return out;
    for (i64 ell : prime_factors(F))
        if (ell % 3 != 1) return out;
    for (i64 b = 1; 27 * b * b <= 4 * f; ++b) {
        if (h == 2 && b % 3 == 0) continue;
        i64 A = 4 * f - 27 * b * b;
        i64 a = (i64)std::sqrt((double)A);
        while (a * a < A) ++a;
        while (a * a > A) --a;
        if (a < 1 || a * a != A) continue;
        CubicFieldInstance inst;
        inst.f = f;
        inst.b = b;
        if (h == 0) {
            if (a % 3 == 1) a = -a;
            inst.a = a;
            inst.poly = {1, 1, (1 - f) / 3, (f * (a - 3) + 1) / 27};
        } else {
            if (a % 9 == 3) a = -a;
            inst.a = a;
            inst.poly = {1, 0, -f / 3, -f * a / 27};
        }
        inst.chi = artin_kernel_match(f, inst.poly, prime_search_bound);
        out.push_back(std::move(inst));
    }
    return out;
}

CycloElt evaluate(const DirichletCharacter& chi, i64 a) {
    CycloElt v(chi.d);
    int e = chi.exponent(a);
    if (e < 0) return v;  // ramified -> 0
    v.add_monomial((unsigned)e, 1);
    return v;
}

}  // namespace k2lp
