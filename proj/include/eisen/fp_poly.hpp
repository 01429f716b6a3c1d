#ifndef EISEN_FP_POLY_HPP
#define EISEN_FP_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eisen/bigint.hpp"

namespace eisen {

/// Dense univariate polynomial over F_p, p a word-sized prime.
/// Coefficients are stored reduced into [0, p), lowest degree first, with
/// no trailing zero limbs (the zero polynomial has an empty vector).
class FpPoly {
  public:
    explicit FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    /// Reduce an integer polynomial (lowest degree first) mod p.
    static FpPoly from_integer_poly(std::uint64_t p, std::span<const BigInt> coeffs);
    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
    static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    std::uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(std::uint64_t s) const;
    FpPoly monic() const;
    FpPoly derivative() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
    FpPoly operator%(const FpPoly& o) const { return divmod(o).second; }

    std::uint64_t evaluate(std::uint64_t x) const;

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    /// Deterministic ordering: by degree, then coefficients from x^0 up.
    static bool lex_less(const FpPoly& a, const FpPoly& b);

    std::string to_string(const std::string& var = "x") const;

  private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
    void trim();
};

FpPoly fp_gcd(FpPoly a, FpPoly b); // monic gcd

/// base^e mod m, with an arbitrary-precision exponent.
FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& m);

/// Extended Euclid: returns monic g = gcd(a, b) and u with u*a = g (mod b).
/// Used for inversion in F_p[x]/(b).
std::pair<FpPoly, FpPoly> fp_gcdext_u(const FpPoly& a, const FpPoly& b);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by FpPoly::lex_less.  Squarefree split, then distinct-degree,
/// then seeded Cantor-Zassenhaus equal-degree splitting (deterministic
/// run-to-run).  Requires f nonzero.
std::vector<std::pair<FpPoly, unsigned>> factor_poly_mod_p(const FpPoly& f);

} // namespace eisen

#endif
