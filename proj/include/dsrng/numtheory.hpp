#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace dsrng {

// Arbitrary-precision integer used across the public interface. Fixed-width
// fast paths exist internally and are bit-identical to the Int routines.
using Int = mpz_class;

/// Complete prime factorization of a positive integer.
struct Factorization {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent), primes ascending

    Int recompose() const;
};

/// base^exponent mod modulus by square-and-multiply. Requires modulus >= 2
/// and nonnegative base/exponent; throws std::domain_error otherwise.
Int mod_exp(const Int& base, const Int& exponent, const Int& modulus);

/// Fixed-width counterpart of mod_exp; overflow-safe via 128-bit products.
uint64_t mod_exp_u64(uint64_t base, uint64_t exponent, uint64_t modulus);

/// Smallest t >= 1 with g^t == 1 (mod m). Requires gcd(g, m) == 1 (throws
/// std::domain_error otherwise). Computed by factoring the group exponent
/// (m - 1 for prime m, Carmichael's lambda otherwise) and stripping prime
/// factors; moduli above 2^64 are rejected as unsupported.
Int multiplicative_order(const Int& g, const Int& m);

/// True iff multiplicative_order(g, p) == p - 1. p must be an odd prime and
/// g a unit mod p; throws std::domain_error otherwise.
bool is_primitive_root(const Int& g, const Int& p);

/// Miller-Rabin primality test. Below 2^64 a fixed witness set gives
/// deterministic answers; above, `rounds` witnesses drawn from a fixed-seed
/// generator bound the composite error by 4^-rounds while keeping results
/// reproducible. n <= 1 reports false.
bool is_probable_prime(const Int& n, int rounds = 24);
bool is_probable_prime_u64(uint64_t n);

/// Trial division by primes up to 10^6, then Brent's variant of Pollard rho.
/// Deterministic. Inputs outside [2, 2^64) are rejected.
Factorization factorize(const Int& n);
Factorization factorize_u64(uint64_t n);

/// True iff p is prime and p % 4 == 3.
bool is_blum_prime(const Int& p);

/// Carmichael function computed from a factorization.
Int carmichael(const Factorization& f);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace dsrng
