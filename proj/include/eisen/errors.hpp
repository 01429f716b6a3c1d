#ifndef EISEN_ERRORS_HPP
#define EISEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eisen {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A composite cofactor above the configured bound survived the rho budget.
struct FactorTooHard : Error {
    explicit FactorTooHard(const std::string& what) : Error(what) {}
};

/// Z[theta] is not p-maximal; the field is rejected for this prime.
struct NotMaximalAtP : Error {
    unsigned long prime;
    NotMaximalAtP(unsigned long p, const std::string& what) : Error(what), prime(p) {}
};

/// The defining polynomial was rejected (reducible, non-monic, degree < 1).
struct FieldRejected : Error {
    explicit FieldRejected(const std::string& what) : Error(what) {}
};

struct ResidueFieldTooLarge : Error {
    explicit ResidueFieldTooLarge(const std::string& what) : Error(what) {}
};

/// Requested series has a divergent tail (shifted flavor with d = 2).
struct TailDiverges : Error {
    explicit TailDiverges(const std::string& what) : Error(what) {}
};

/// Restricted quantities need a density enclosure bounded away from zero.
struct DensityZero : Error {
    explicit DensityZero(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct LeadingCoefficientZero : Error {
    explicit LeadingCoefficientZero(const std::string& what) : Error(what) {}
};

/// Generator matrix does not span a full-rank lattice.
struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what) : Error(what) {}
};

struct PolyParseError : Error {
    explicit PolyParseError(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace eisen

#endif
