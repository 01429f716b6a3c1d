#ifndef EISEN_EMPIRICAL_HPP
#define EISEN_EMPIRICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eisen/eisenstein.hpp"
#include "eisen/moments.hpp"

namespace eisen {

/// Coefficient box O(H,E)^(d+1): every power-basis coordinate of every
/// coefficient ranges over [-H, H).
struct BoxSpec {
    const NumberField* field;
    unsigned d;
    long H;

    unsigned coords_per_tuple() const { return field->degree() * (d + 1); }
    BigInt size() const; // (2H)^(k(d+1))
};

enum class ScanMode { exhaustive, montecarlo };

struct ScanOptions {
    BigInt budget = BigInt(200000000); // exhaustive tuple cap
    unsigned threads = 0;              // 0: hardware concurrency
    unsigned max_order = 4;            // accumulate sum w^j up to this j
    FactorConfig factor;
    BigInt residue_bound = BigInt(1 << 20);
};

/// Exact witness count of a tuple: the number of primes P for which f is
/// (shifted-)P-Eisenstein, found by scanning only the candidate primes.
struct WitnessCount {
    unsigned count = 0;
    std::vector<EisensteinWitness> witnesses;
};

WitnessCount witness_count(const CoefficientTuple& f, Flavor flavor,
                           const FactorConfig& cfg = {},
                           const BigInt& residue_bound = BigInt(1 << 20));

/// Raw scan output.  Counters are exact integers; every derived ratio is
/// an exact rational of the observed sample.
struct EmpiricalReport {
    ScanMode mode = ScanMode::exhaustive;
    const NumberField* field = nullptr;
    unsigned d = 2;
    Flavor flavor = Flavor::plain;
    long H = 1;
    unsigned max_order = 4;
    std::uint64_t seed = 0;          // montecarlo only
    std::uint64_t samples = 0;       // montecarlo only
    BigInt total;                    // tuples visited ((2H)^(k(d+1)) or samples)
    BigInt in_target;                // tuples with w >= 1
    std::vector<BigInt> power_sums;  // power_sums[j-1] = sum w^j, j = 1..2*max_order

    const BigInt& power_sum(unsigned j) const { return power_sums.at(j - 1); }

    BigRat density() const;
    BigRat moment(unsigned j) const;            // sum w^j / total
    BigRat restricted_moment(unsigned j) const; // sum w^j / in_target
    BigRat variance() const;                    // moment(2) - moment(1)^2
    BigRat restricted_variance() const;

    /// sample-stddev / sqrt(samples) for the j-th moment (Monte Carlo).
    double moment_se(unsigned j) const;
    double density_se() const;
    double restricted_moment_se(unsigned j) const;
    /// first-order (conservative) error for variance-type quantities
    double variance_se() const;
    double restricted_variance_se() const;
};

EmpiricalReport exhaustive_scan(const BoxSpec& box, Flavor flavor,
                                const ScanOptions& opt = {});

EmpiricalReport monte_carlo_scan(const BoxSpec& box, Flavor flavor, std::uint64_t samples,
                                 std::uint64_t seed, const ScanOptions& opt = {});

/// One row of the empirical report, for serialization and comparison.
struct EmpiricalQuantity {
    std::string name;
    BigRat value;
    std::optional<double> se; // absent for exhaustive scans
};

std::vector<EmpiricalQuantity> report_quantities(const EmpiricalReport& rep);

/// Per-quantity verdict: PASS iff |empirical - midpoint| <= tolerance +
/// half-width (+ 4 SE for Monte Carlo).
struct QuantityCheck {
    std::string name;
    EnclosedValue analytic;
    bool analytic_divergent = false;
    BigRat empirical;
    std::optional<double> se;
    BigRat delta;
    BigRat allowed;
    bool pass = false;
};

struct ComparisonVerdict {
    std::vector<QuantityCheck> checks;
    bool all_pass = true;
};

ComparisonVerdict compare(const AnalyticReport& analytic, const EmpiricalReport& empirical,
                          const BigRat& tolerance);

} // namespace eisen

#endif
