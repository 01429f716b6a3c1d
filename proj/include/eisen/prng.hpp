#ifndef EISEN_PRNG_HPP
#define EISEN_PRNG_HPP

#include <cstdint>

namespace eisen {

// Counter-based SplitMix64 stream.  Output i depends only on (seed, i), so
// any partition of the index range across threads reproduces the exact
// sequence of a serial run.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t at(std::uint64_t counter) const {
        std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
};

/// Map a full-width draw onto [0, range) by 128-bit fixed-point scaling.
/// Bias is below 2^-50 for any range < 2^14 coordinates wide per draw.
inline std::uint64_t scale_to_range(std::uint64_t draw, std::uint64_t range) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(draw) * range) >> 64);
}

/// Sequential (stateful) view over the counter stream, for consumers that
/// just want a stream of words.
class SplitMix64Stream {
  public:
    explicit SplitMix64Stream(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t next() { return gen_.at(counter_++); }

  private:
    SplitMix64 gen_;
    std::uint64_t counter_ = 0;
};

} // namespace eisen

#endif
