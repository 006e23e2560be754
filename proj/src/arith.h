// Exact integer / modular / rational / cyclotomic primitives.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace k2lp {

using u32 = uint32_t;
using u64 = uint64_t;
using i64 = int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct ArithError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m);  // throws ArithError("NotCoprime") if gcd(a,m) != 1
bool is_prime(u64 n);      // deterministic Miller-Rabin for 64-bit inputs

// Kronecker symbol (a/n), full extension to arbitrary integers.
int kronecker(i64 a, i64 n);

// Smallest primitive root g >= 2 mod prime ell.
u64 primitive_root(u64 ell);

// table[a] = k with g^k = a (mod ell), k in [0, ell-2]; table[0] unused.
std::vector<u32> discrete_log_table(u64 ell, u64 g);
u64 discrete_log(u64 a, u64 g, u64 ell);

int padic_valuation(i64 x, i64 p);
long padic_valuation(const mpz_class& x, unsigned long p);
long padic_valuation(const mpq_class& x, unsigned long p);

bool is_squarefree(i64 m);
std::vector<i64> prime_factors(i64 m);  // distinct primes, ascending

mpz_class binomial_mpz(unsigned long n, unsigned long k);

// Element of Z[Y]/Phi_p(Y) on the power basis 1, Y, ..., Y^(p-2).
// For p = 2 this degenerates to a single integer. Optional modulus M keeps
// coefficients reduced into [0, M).
struct CycloElt {
    unsigned p;
    std::vector<mpz_class> c;  // size p-1
    std::optional<mpz_class> mod;

    explicit CycloElt(unsigned p_, std::optional<mpz_class> m = std::nullopt);
    void reduce();
    void add_monomial(unsigned k, const mpz_class& v);  // += v * Y^k, k in [0, p-1]
    CycloElt operator+(const CycloElt& o) const;
    CycloElt operator-(const CycloElt& o) const;
    CycloElt operator*(const CycloElt& o) const;
    bool is_zero() const;
};

// Resultant of Phi_p and the coefficient polynomial = product of x over the
// embeddings Y -> zeta_p^j. For p = 2, returns x itself.
mpz_class cyclo_norm(const CycloElt& x);

// Exact B_0 .. B_upto with the B_1 = -1/2 convention.
std::vector<mpq_class> bernoulli_numbers(unsigned upto);

// Minimal unit a + b*sqrt(m) of the order Z[sqrt m], found on the continued
// fraction of sqrt(m).
struct ContinuedFractionUnit {
    i64 m;
    mpz_class a, b;
    int norm;  // +1 or -1
    unsigned period;
};
ContinuedFractionUnit fundamental_unit(i64 m);

}  // namespace k2lp
