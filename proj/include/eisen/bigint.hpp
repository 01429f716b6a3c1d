#ifndef EISEN_BIGINT_HPP
#define EISEN_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eisen {

// Arbitrary-precision integers and exact rationals are GMP-backed.
// mpq_class values are kept canonical (gcd(num, den) = 1, den > 0);
// helpers below canonicalize whenever a fraction is assembled by hand.
using BigInt = mpz_class;
using BigRat = mpq_class;

/// num/den as a canonical rational (den may be negative or share factors).
BigRat make_rat(BigInt num, BigInt den);

/// base^e for machine-word exponents.
BigInt pow_ui(const BigInt& base, unsigned long e);

enum class Rounding {
    Down,    // toward -infinity: safe for interval lower bounds
    Up,      // toward +infinity: safe for interval upper bounds
    Nearest, // round half away from zero: point estimates
};

/// Plain decimal expansion of q with `digits` fractional digits.
std::string decimal_string(const BigRat& q, int digits, Rounding mode);

} // namespace eisen

#endif
