#ifndef EISEN_MOMENTS_HPP
#define EISEN_MOMENTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "eisen/number_field.hpp"

namespace eisen {

enum class Flavor { plain, shifted };

const char* flavor_name(Flavor f);

/// Exact rational interval [lo, hi] carrying the truncation error of an
/// infinite product or sum.
struct EnclosedValue {
    BigRat lo, hi;
    BigRat width() const { return hi - lo; }
    BigRat midpoint() const { return (lo + hi) / 2; }
};

struct SystemEntry {
    const PrimeIdealData* prime; // null for synthetic test systems
    BigRat s;                    // local density in (0, 1)
};

/// Finite truncation of the local-density system: one exact rational s_P
/// per prime ideal with p <= cutoff, plus the data the tail bounds need.
/// The archimedean slot is representable but pinned to zero.
struct LocalDensitySystem {
    const NumberField* field = nullptr; // null for synthetic systems
    unsigned field_degree = 1;          // k, bounds the number of primes above p
    unsigned d = 2;
    Flavor flavor = Flavor::plain;
    unsigned long cutoff = 0; // M: entries cover exactly the primes with p <= M
    std::vector<SystemEntry> entries;
    unsigned tail_exponent = 2; // s_P <= N^-tail_exponent: d plain, d-1 shifted

    /// Rejects any nonzero archimedean density.
    void set_archimedean_density(const BigRat& s);
    BigRat archimedean_density() const { return BigRat(0); }
};

/// (N(P)-1)^2 / N(P)^(d+2) for plain, one power of N(P) less for shifted.
BigRat local_density(const PrimeIdealData& P, unsigned d, Flavor flavor);

LocalDensitySystem build_system(const NumberField& F, unsigned d, Flavor flavor,
                                unsigned long M);

/// Whether moment ops carry the truncation tail (bounded) or treat the
/// finite system as exact (none; used by the enumeration oracles).
enum class Tail { bounded, none };

/// density = 1 - prod (1 - s_P).  For the divergent shifted d = 2 case the
/// result is exactly 1 and `divergent` is set; no enclosure is produced.
struct DensityResult {
    bool divergent = false;
    EnclosedValue value;
};

DensityResult density(const LocalDensitySystem& sys, Tail tail = Tail::bounded);

/// The finite partial value 1 - prod_entries (1 - s_P), with no tail.
BigRat density_partial(const LocalDensitySystem& sys);

EnclosedValue mean(const LocalDensitySystem& sys, Tail tail = Tail::bounded);
EnclosedValue nth_moment(const LocalDensitySystem& sys, unsigned n,
                         Tail tail = Tail::bounded);
/// sigma^2 = mean - sum s^2 (lower endpoints combine exactly).
EnclosedValue variance(const LocalDensitySystem& sys, Tail tail = Tail::bounded);

/// mu_n / rho with outward rounding; rho.lo must be positive.
EnclosedValue restricted_moment(const LocalDensitySystem& sys, unsigned n,
                                const EnclosedValue& rho, Tail tail = Tail::bounded);

/// sigma^2_T = rho^-1 (mu^2 - sum s^2 + mu) - 2 mu_T mu / rho + mu_T^2,
/// evaluated in interval arithmetic.
EnclosedValue restricted_variance(const LocalDensitySystem& sys, const EnclosedValue& rho,
                                  const EnclosedValue& mu, const EnclosedValue& mu_T,
                                  Tail tail = Tail::bounded);

/// Partition shape tau of n: tau[j-1] parts of size j, with
/// c(tau) = n! / (prod (j!)^tau_j tau_j!) set partitions of that shape.
struct PartitionShape {
    std::vector<unsigned> tau;
    unsigned length; // l(tau) = number of parts
    BigInt count;    // c(tau)
};

/// All shapes with sum j*tau_j = n (1 <= n <= 20), deterministic order.
std::vector<PartitionShape> partition_shapes(unsigned n);

/// Everything cmd_analytic emits, assembled in one pass.
struct AnalyticReport {
    const NumberField* field;
    unsigned d;
    Flavor flavor;
    unsigned long cutoff;
    unsigned order; // highest moment computed (0 = density only)
    DensityResult density_result;
    std::optional<EnclosedValue> mean_value;
    std::optional<EnclosedValue> mean_restricted;
    std::vector<std::pair<unsigned, EnclosedValue>> higher_moments; // j = 2..order
    std::optional<EnclosedValue> variance_value;
    std::optional<EnclosedValue> variance_restricted;
};

/// order = 0 requests the density alone (always well-defined); order >= 1
/// adds moments and variances and throws TailDiverges for shifted d = 2.
AnalyticReport analyze(const NumberField& F, unsigned d, Flavor flavor, unsigned long M,
                       unsigned order);

} // namespace eisen

#endif
