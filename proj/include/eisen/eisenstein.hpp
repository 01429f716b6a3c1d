#ifndef EISEN_EISENSTEIN_HPP
#define EISEN_EISENSTEIN_HPP

#include <optional>
#include <vector>

#include "eisen/number_field.hpp"
#include "eisen/primality.hpp"

namespace eisen {

/// f(x) = sum a_i x^i over o, stored as (a_0, ..., a_d) with a_0 the
/// constant term.  The nominal degree d is the tuple length minus one;
/// a_d itself may be zero for box elements.
struct CoefficientTuple {
    const NumberField* field;
    std::vector<AlgebraicInteger> a;

    unsigned degree() const { return static_cast<unsigned>(a.size()) - 1; }
};

struct EisensteinWitness {
    const PrimeIdealData* prime;
    std::optional<AlgebraicInteger> shift; // present for shifted witnesses
};

/// a_d not in P, a_i in P for all i < d, a_0 not in P^2.
bool is_p_eisenstein(const CoefficientTuple& f, const PrimeIdealData& P);

/// f(x + b), via binomial expansion; degree and leading coefficient are
/// unchanged.
CoefficientTuple shift_poly(const CoefficientTuple& f, const AlgebraicInteger& b);

/// The canonical residue b with f(x+b) P-Eisenstein, if one exists.  Only
/// b mod P matters; when P does not divide d the witness residue is forced
/// by the x^(d-1) coefficient, otherwise all residues are scanned in
/// canonical order.
std::optional<AlgebraicInteger> shifted_eisenstein_witness(
    const CoefficientTuple& f, const PrimeIdealData& P,
    const BigInt& residue_bound = BigInt(1 << 20));

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / a_d, computed over o via a
/// Sylvester determinant with exact division.  Requires a_d != 0, d >= 2.
AlgebraicInteger discriminant(const CoefficientTuple& f);

/// Prime ideals dividing the principal ideal (x), found by factoring the
/// norm and splitting.  x must be nonzero; units give the empty list.
std::vector<const PrimeIdealData*> primes_dividing_element(
    const NumberField& F, const AlgebraicInteger& x, const FactorConfig& cfg = {});

/// All primes dividing (a_0): a superset of the P-Eisenstein witnesses.
/// Empty when a_0 is zero or a unit.
std::vector<const PrimeIdealData*> candidate_primes_eisenstein(
    const CoefficientTuple& f, const FactorConfig& cfg = {});

/// All primes dividing (disc f): a superset of the shifted witnesses.
/// Empty when a_d = 0 or disc(f) = 0.
std::vector<const PrimeIdealData*> candidate_primes_shifted(
    const CoefficientTuple& f, const FactorConfig& cfg = {});

} // namespace eisen

#endif
