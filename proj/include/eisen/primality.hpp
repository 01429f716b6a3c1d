#ifndef EISEN_PRIMALITY_HPP
#define EISEN_PRIMALITY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "eisen/bigint.hpp"

namespace eisen {

/// True iff n is a rational prime.  Deterministic Miller-Rabin (fixed base
/// set) below 2^64; above that, extra seeded rounds push the error below
/// 2^-128.  Requires n >= 0.
bool is_prime(const BigInt& n);

/// Budget knobs for factor_integer.  The empirical lab only ever factors
/// norms of box elements, so the defaults are deliberately small.
struct FactorConfig {
    std::uint64_t trial_bound = 10000;     // trial division up to this
    std::uint64_t rho_iterations = 1 << 20; // Brent iterations per attempt
    unsigned rho_retries = 64;              // fresh parameters per cofactor
    unsigned cofactor_bits = 96;            // FactorTooHard above this
};

/// Prime factorization of |n| as (prime, exponent), primes ascending.
/// n = ±1 yields the empty factorization.  Throws FactorTooHard when a
/// composite cofactor larger than the configured bound survives the
/// Pollard-rho budget.  Requires n != 0.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n,
                                                        const FactorConfig& cfg = {});

/// All primes <= limit, ascending (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

} // namespace eisen

#endif
