#ifndef EISEN_NUMBER_FIELD_HPP
#define EISEN_NUMBER_FIELD_HPP

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "eisen/bigint.hpp"
#include "eisen/fp_poly.hpp"
#include "eisen/int_matrix.hpp"

namespace eisen {

class NumberField;

/// Element of o = Z[theta], stored as coordinates in the power basis
/// 1, theta, ..., theta^(k-1).
struct AlgebraicInteger {
    std::vector<BigInt> c;

    bool operator==(const AlgebraicInteger& o) const = default;
    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    std::string to_string(const std::string& var = "t") const;
};

/// Full-rank sublattice of o given by a k x k HNF basis; used for ideals
/// (theta-closure is checked at construction).
class IdealLattice {
  public:
    IdealLattice(const NumberField& field, const IntMatrix& generator_rows);
    static IdealLattice unit(const NumberField& field);
    static IdealLattice principal(const NumberField& field, const AlgebraicInteger& x);

    bool contains(const AlgebraicInteger& x) const;
    const IntMatrix& basis() const { return basis_; }
    const BigInt& norm() const { return norm_; } // |o / a| = |det basis|
    const NumberField& field() const { return *field_; }

  private:
    IdealLattice() = default;
    const NumberField* field_ = nullptr;
    IntMatrix basis_;
    BigInt norm_;
    friend IdealLattice ideal_mul(const IdealLattice&, const IdealLattice&);
};

/// Product ideal: HNF of all pairwise products of basis rows.
IdealLattice ideal_mul(const IdealLattice& a, const IdealLattice& b);
/// Sum (lattice join) of two ideals.
IdealLattice ideal_add(const IdealLattice& a, const IdealLattice& b);

/// Prime ideal (p, g(theta)) above the rational prime p, with residue
/// degree deg g, ramification index e, and the power cache p^0..p^4.
struct PrimeIdealData {
    unsigned long p;
    FpPoly g;                      // monic irreducible factor of f mod p
    unsigned residue_degree;       // deg g
    unsigned ramification_index;   // multiplicity of g in f mod p
    BigInt norm;                   // p^deg
    std::vector<IdealLattice> powers; // powers[j] = ideal^j, j = 0..4

    const IdealLattice& lattice() const { return powers[1]; }
    /// ideal^j; falls back to on-the-fly multiplication above the cache.
    IdealLattice power(unsigned j) const;
    std::string label() const; // e.g. "(2, x+1)"
};

bool ideal_contains(const PrimeIdealData& P, const AlgebraicInteger& x);

struct Valuation {
    unsigned value;
    bool at_least; // true when x sits in the cap-th power (so value == cap)
};

/// Largest v <= cap with x in P^v.  x = 0 saturates at cap.
Valuation valuation(const PrimeIdealData& P, const AlgebraicInteger& x, unsigned cap);

/// The N(P) residue classes mod P, realized as sum c_j theta^j with
/// 0 <= c_j < p for j < deg(P), in lexicographic coordinate order.
std::vector<AlgebraicInteger> residue_representatives(const PrimeIdealData& P,
                                                      const BigInt& enumeration_bound);

/// Monogenic number field Q[x]/(f), o = Z[theta].  Splitting results are
/// memoized per rational prime; all returned data is immutable, so reads
/// from many threads are safe.
class NumberField {
  public:
    /// f: monic integer polynomial, lowest degree first, degree >= 1.
    /// Throws FieldRejected when f is non-monic, constant, or provably
    /// reducible; fields whose irreducibility cannot be certified are
    /// accepted with irreducibility_certified() == false.
    explicit NumberField(std::vector<BigInt> f);

    unsigned degree() const { return k_; }
    const std::vector<BigInt>& defining_poly() const { return f_; }
    const BigInt& poly_discriminant() const { return disc_; }
    bool irreducibility_certified() const { return certified_; }
    std::string poly_string() const;

    // --- ring operations on power-basis coordinates ---
    AlgebraicInteger zero() const { return {std::vector<BigInt>(k_)}; }
    AlgebraicInteger one() const;
    AlgebraicInteger from_int(long v) const;
    AlgebraicInteger element(std::vector<BigInt> coords) const;
    AlgebraicInteger add(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
    AlgebraicInteger sub(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
    AlgebraicInteger neg(const AlgebraicInteger& a) const;
    AlgebraicInteger mul(const AlgebraicInteger& a, const AlgebraicInteger& b) const;
    AlgebraicInteger mul_int(const AlgebraicInteger& a, const BigInt& s) const;
    AlgebraicInteger pow(const AlgebraicInteger& a, unsigned e) const;

    /// The power-basis generator theta (= x mod f; for k = 1 this is -f_0).
    AlgebraicInteger theta() const;
    /// a * theta, by shift-and-reduce.
    AlgebraicInteger mul_theta(const AlgebraicInteger& a) const;

    /// Determinant of multiplication-by-a on the power basis.
    BigInt field_norm(const AlgebraicInteger& a) const;

    /// Exact division in o: returns x/y if y != 0 divides x in o.
    std::optional<AlgebraicInteger> div_exact(const AlgebraicInteger& x,
                                              const AlgebraicInteger& y) const;

    /// Prime ideals above p, sorted by lexicographic g.  Runs Dedekind's
    /// p-maximality criterion at primes dividing disc(f) and throws
    /// NotMaximalAtP when Z[theta] is not maximal there.
    const std::vector<PrimeIdealData>& split(unsigned long p) const;

    NumberField(const NumberField&) = delete;
    NumberField& operator=(const NumberField&) = delete;

  private:
    std::vector<BigInt> f_;
    unsigned k_;
    BigInt disc_;
    bool certified_ = false;

    mutable std::shared_mutex mutex_;
    mutable std::map<unsigned long, std::vector<PrimeIdealData>> split_cache_;

    std::vector<PrimeIdealData> split_uncached(unsigned long p) const;
    void check_irreducibility();
};

/// All prime ideals above rational primes p <= M, ordered by (p, g).
std::vector<const PrimeIdealData*> primes_up_to(const NumberField& F, unsigned long M);

} // namespace eisen

#endif
