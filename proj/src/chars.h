// Dirichlet characters: quadratic, cyclic cubic (Artin-kernel matched),
// order-p of prime conductor.
#pragma once

#include <array>
#include <vector>

#include "arith.h"

namespace k2lp {

// chi(a) = zeta_d ^ expo[a mod f]; expo = -1 marks gcd(a, f) > 1 (ramified).
struct DirichletCharacter {
    i64 f = 0;
    unsigned d = 1;
    std::vector<int32_t> expo;

    int exponent(i64 a) const {
        a %= f;
        if (a < 0) a += f;
        return expo[(size_t)a];
    }
    bool is_even() const { return exponent(f - 1) == 0; }
};

DirichletCharacter quadratic_character(i64 m);

// The p-1 nontrivial characters of order p, conductor ell, ell = 1 (mod p);
// chi_j(g) = zeta_p^j for the smallest primitive root g.
std::vector<DirichletCharacter> order_p_characters(i64 ell, unsigned p);

struct CubicFieldInstance {
    i64 f = 0;
    i64 a = 0, b = 0;               // 4f = a^2 + 27 b^2, signs normalized
    std::array<i64, 4> poly{};      // monic cubic: x^3 + poly[1] x^2 + poly[2] x + poly[3]
    DirichletCharacter chi;         // one of the conjugate pair (other is 2*expo mod 3)
};

// One instance per cyclic cubic field of conductor exactly f; empty list if f
// is not a cubic conductor.
std::vector<CubicFieldInstance> cubic_field_instances(i64 f, u64 prime_search_bound = 1u << 26);

// Match an order-3 character pair to a defining polynomial by the split-prime
// sieve over residue classes mod f. Throws ArithError("SieveExhausted") if a
// class has no usable prime below the bound.
DirichletCharacter artin_kernel_match(i64 f, const std::array<i64, 4>& poly, u64 prime_search_bound);

// chi(a) as an element of Z[Y]/Phi_d (zero when ramified).
CycloElt evaluate(const DirichletCharacter& chi, i64 a);

}  // namespace k2lp
