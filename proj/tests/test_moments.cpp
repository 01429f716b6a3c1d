#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eisen/errors.hpp"
#include "eisen/moments.hpp"
#include "eisen/prng.hpp"

using namespace eisen;

namespace {

std::vector<BigInt> coeffs(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

const NumberField& rationals() {
    static NumberField F(coeffs({0, 1}));
    return F;
}
const NumberField& gaussian() {
    static NumberField F(coeffs({1, 0, 1}));
    return F;
}

// Synthetic system over given Bernoulli parameters; tail data mimics a
// plain degree-d system so the bounded-tail paths stay exercised.
LocalDensitySystem synthetic(const std::vector<BigRat>& s, unsigned d = 2,
                             unsigned long cutoff = 100) {
    LocalDensitySystem sys;
    sys.field = nullptr;
    sys.field_degree = 1;
    sys.d = d;
    sys.flavor = Flavor::plain;
    sys.cutoff = cutoff;
    sys.tail_exponent = d;
    for (const auto& q : s) sys.entries.push_back({nullptr, q});
    return sys;
}

// ---- independent oracle -------------------------------------------------
// Exhaustive expectation over the 2^m independent Bernoulli outcomes:
// E[ |successes|^n ] and conditional variants, in exact rationals.
struct BernoulliOracle {
    std::vector<BigRat> s;

    BigRat moment(unsigned n) const {
        BigRat acc = 0;
        const size_t m = s.size();
        for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
            BigRat prob = 1;
            unsigned count = 0;
            for (size_t i = 0; i < m; ++i) {
                if (mask >> i & 1) {
                    prob *= s[i];
                    ++count;
                } else {
                    prob *= 1 - s[i];
                }
            }
            BigRat term = prob;
            for (unsigned j = 0; j < n; ++j) term *= count;
            acc += term;
        }
        return acc;
    }

    BigRat prob_nonempty() const {
        BigRat none = 1;
        for (const auto& q : s) none *= 1 - q;
        return 1 - none;
    }

    BigRat conditional_moment(unsigned n) const { return moment(n) / prob_nonempty(); }

    BigRat conditional_variance() const {
        BigRat m1 = conditional_moment(1);
        return conditional_moment(2) - m1 * m1;
    }
};

std::vector<BigRat> random_probs(SplitMix64& rng, std::uint64_t& ctr, size_t count) {
    std::vector<BigRat> out;
    for (size_t i = 0; i < count; ++i) {
        unsigned den = 2 + static_cast<unsigned>(scale_to_range(rng.at(ctr++), 60));
        unsigned num = 1 + static_cast<unsigned>(scale_to_range(rng.at(ctr++), den - 1));
        out.push_back(make_rat(BigInt(num), BigInt(den)));
    }
    return out;
}

} // namespace

TEST_CASE("local_density substitutions") {
    const auto& p2 = rationals().split(2)[0];
    CHECK(local_density(p2, 2, Flavor::plain) == BigRat(1, 16));
    CHECK(local_density(p2, 2, Flavor::shifted) == BigRat(1, 8));

    const auto& p3i = gaussian().split(3)[0]; // norm 9
    CHECK(local_density(p3i, 3, Flavor::plain) == BigRat(64, 59049));
    // shifted = N * plain
    CHECK(local_density(p3i, 3, Flavor::shifted) ==
          BigRat(9) * local_density(p3i, 3, Flavor::plain));
}

TEST_CASE("build_system coverage and ordering") {
    auto sys = build_system(rationals(), 2, Flavor::plain, 3);
    REQUIRE(sys.entries.size() == 2);
    CHECK(sys.entries[0].s == BigRat(1, 16));
    CHECK(sys.entries[1].s == BigRat(4, 81));
    CHECK(sys.tail_exponent == 2);

    auto empty = build_system(rationals(), 2, Flavor::plain, 1);
    CHECK(empty.entries.empty());

    auto qi = build_system(gaussian(), 2, Flavor::plain, 3);
    REQUIRE(qi.entries.size() == 2);
    CHECK(qi.entries[0].prime->norm == 2);
    CHECK(qi.entries[1].prime->norm == 9);

    for (const auto& e : qi.entries) {
        CHECK(e.s > 0);
        CHECK(e.s < 1);
    }
}

TEST_CASE("archimedean slot is pinned to zero") {
    auto sys = build_system(rationals(), 2, Flavor::plain, 3);
    CHECK(sys.archimedean_density() == 0);
    CHECK_NOTHROW(sys.set_archimedean_density(BigRat(0)));
    CHECK_THROWS_AS(sys.set_archimedean_density(BigRat(1, 2)), std::invalid_argument);
}

TEST_CASE("density basics") {
    auto empty = build_system(rationals(), 2, Flavor::plain, 1);
    auto de = density(empty);
    CHECK(de.value.lo == 0);
    CHECK(de.value.hi > 0);

    auto m2 = build_system(rationals(), 2, Flavor::plain, 2);
    auto d2 = density(m2);
    CHECK(d2.value.lo == BigRat(1, 16));
    CHECK_FALSE(d2.divergent);
    CHECK(d2.value.hi >= d2.value.lo);

    CHECK(density_partial(m2) == BigRat(1, 16));
}

TEST_CASE("density and mean: lo monotone, width shrinking in M") {
    BigRat prev_dlo(-1), prev_dwidth(2);
    BigRat prev_mlo(-1), prev_mwidth(2);
    for (unsigned long M : {10ul, 100ul, 1000ul}) {
        auto sys = build_system(rationals(), 2, Flavor::plain, M);
        auto r = density(sys);
        CHECK(r.value.lo > prev_dlo);
        CHECK(r.value.width() < prev_dwidth);
        prev_dlo = r.value.lo;
        prev_dwidth = r.value.width();

        auto mu = mean(sys);
        CHECK(mu.lo > prev_mlo);
        CHECK(mu.width() < prev_mwidth);
        prev_mlo = mu.lo;
        prev_mwidth = mu.width();
    }
}

TEST_CASE("mean examples") {
    auto sys = build_system(rationals(), 2, Flavor::plain, 3);
    CHECK(mean(sys).lo == BigRat(1, 16) + BigRat(4, 81));

    auto empty = build_system(rationals(), 2, Flavor::plain, 1);
    auto me = mean(empty);
    CHECK(me.lo == 0);
    CHECK(me.hi > 0);
}

TEST_CASE("partition shapes: spec examples and Bell numbers") {
    auto s1 = partition_shapes(1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].count == 1);
    CHECK(s1[0].length == 1);

    auto s2 = partition_shapes(2);
    REQUIRE(s2.size() == 2);
    for (const auto& sh : s2) {
        CHECK(sh.count == 1);
        CHECK((sh.length == 1 || sh.length == 2));
    }

    // Bell numbers via the triangle recurrence, independent of c(tau)
    std::vector<BigInt> bell{BigInt(1)};
    std::vector<BigInt> row{BigInt(1)};
    for (unsigned n = 1; n <= 8; ++n) {
        std::vector<BigInt> next{row.back()};
        for (const BigInt& x : row) next.push_back(next.back() + x);
        row = std::move(next);
        bell.push_back(row.front());
    }
    for (unsigned n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& sh : partition_shapes(n)) total += sh.count;
        CHECK(total == bell[n]);
    }

    // c(tau) against direct enumeration of set partitions of {1..n}
    for (unsigned n = 1; n <= 8; ++n) {
        auto shapes = partition_shapes(n);
        std::vector<BigInt> observed(shapes.size(), BigInt(0));
        // enumerate set partitions via restricted growth strings
        std::vector<unsigned> rgs(n, 0);
        while (true) {
            unsigned blocks = 1;
            for (unsigned i = 0; i < n; ++i) blocks = std::max(blocks, rgs[i] + 1);
            std::vector<unsigned> size_of(blocks, 0);
            for (unsigned i = 0; i < n; ++i) ++size_of[rgs[i]];
            std::vector<unsigned> tau(n, 0);
            for (unsigned b = 0; b < blocks; ++b) ++tau[size_of[b] - 1];
            for (size_t k = 0; k < shapes.size(); ++k)
                if (shapes[k].tau == tau) {
                    observed[k] += 1;
                    break;
                }
            // next restricted growth string
            int i = static_cast<int>(n) - 1;
            while (i > 0) {
                unsigned maxpre = 0;
                for (int j = 0; j < i; ++j) maxpre = std::max(maxpre, rgs[j]);
                if (rgs[i] <= maxpre) {
                    ++rgs[i];
                    for (unsigned j = i + 1; j < n; ++j) rgs[j] = 0;
                    break;
                }
                --i;
            }
            if (i == 0) break;
        }
        for (size_t k = 0; k < shapes.size(); ++k) CHECK(observed[k] == shapes[k].count);
    }
}

TEST_CASE("moment formula equals the Bernoulli oracle (tail disabled)") {
    SplitMix64 rng(6174);
    std::uint64_t ctr = 0;
    for (int t = 0; t < 60; ++t) {
        size_t m = 1 + scale_to_range(rng.at(ctr++), 12);
        BernoulliOracle oracle{random_probs(rng, ctr, m)};
        auto sys = synthetic(oracle.s);
        for (unsigned n = 1; n <= 4; ++n) {
            auto mv = nth_moment(sys, n, Tail::none);
            CHECK(mv.lo == oracle.moment(n));
            CHECK(mv.hi == mv.lo);
        }
    }
}

TEST_CASE("spec moment examples via the oracle") {
    BernoulliOracle two{{BigRat(1, 2), BigRat(1, 3)}};
    auto sys2 = synthetic(two.s);
    CHECK(nth_moment(sys2, 1, Tail::none).lo == mean(sys2, Tail::none).lo);
    auto m2 = nth_moment(sys2, 2, Tail::none);
    CHECK(m2.lo == two.moment(2));
    CHECK(m2.lo == BigRat(7, 6)); // frozen from the oracle

    BernoulliOracle three{{BigRat(1, 2), BigRat(1, 3), BigRat(1, 5)}};
    auto sys3 = synthetic(three.s);
    CHECK(nth_moment(sys3, 3, Tail::none).lo == three.moment(3));
}

TEST_CASE("n=2 identity: mu_2 = mean^2 - sum s^2 + mean") {
    SplitMix64 rng(41);
    std::uint64_t ctr = 0;
    for (int t = 0; t < 40; ++t) {
        size_t m = 1 + scale_to_range(rng.at(ctr++), 10);
        auto probs = random_probs(rng, ctr, m);
        auto sys = synthetic(probs);
        BigRat mu = mean(sys, Tail::none).lo;
        BigRat sum_sq = 0;
        for (const auto& q : probs) sum_sq += q * q;
        CHECK(nth_moment(sys, 2, Tail::none).lo == mu * mu - sum_sq + mu);
    }
}

TEST_CASE("variance examples and identity") {
    auto single = synthetic({BigRat(3, 7)});
    CHECK(variance(single, Tail::none).lo == BigRat(3, 7) * (1 - BigRat(3, 7)));

    auto sys = synthetic({BigRat(1, 2), BigRat(1, 3)});
    CHECK(variance(sys, Tail::none).lo == BigRat(17, 36));

    auto empty = synthetic({});
    auto ve = variance(empty);
    CHECK(ve.lo == 0);
    CHECK(ve.hi > 0);
}

TEST_CASE("restricted moment: interval division") {
    auto sys = synthetic({BigRat(1, 16)});
    EnclosedValue exact{BigRat(1, 16), BigRat(1, 16)};
    auto r = restricted_moment(sys, 1, exact, Tail::none);
    CHECK(r.lo == 1);
    CHECK(r.hi == 1);

    EnclosedValue rho0{BigRat(0), BigRat(1, 10)};
    CHECK_THROWS_AS(restricted_moment(sys, 1, rho0, Tail::none), DensityZero);
}

TEST_CASE("restricted variance against the conditional oracle") {
    // single entry: conditioned on the only prime, the count is constant 1
    auto single = synthetic({BigRat(2, 5)});
    EnclosedValue s{BigRat(2, 5), BigRat(2, 5)};
    EnclosedValue one{BigRat(1), BigRat(1)};
    auto rv = restricted_variance(single, s, s, one, Tail::none);
    CHECK(rv.lo == 0);
    CHECK(rv.hi == 0);

    // spec pair example and random systems vs the exhaustive conditional oracle
    SplitMix64 rng(77);
    std::uint64_t ctr = 0;
    for (int t = 0; t < 40; ++t) {
        size_t m = 1 + scale_to_range(rng.at(ctr++), 8);
        BernoulliOracle oracle{random_probs(rng, ctr, m)};
        auto sys = synthetic(oracle.s);
        BigRat rho_exact = oracle.prob_nonempty();
        BigRat mu_exact = oracle.moment(1);
        BigRat mu_T = oracle.conditional_moment(1);
        EnclosedValue rho{rho_exact, rho_exact};
        EnclosedValue mu{mu_exact, mu_exact};
        EnclosedValue muT{mu_T, mu_T};
        auto got = restricted_variance(sys, rho, mu, muT, Tail::none);
        CHECK(got.lo == oracle.conditional_variance());
        CHECK(got.hi == got.lo);
    }

    BernoulliOracle pair{{BigRat(1, 2), BigRat(1, 3)}};
    CHECK(pair.prob_nonempty() == BigRat(2, 3));
    CHECK(pair.conditional_variance() == BigRat(3, 16)); // frozen from the oracle
}

TEST_CASE("shifted d=2 diverges; d=3 converges") {
    auto sys2 = build_system(rationals(), 2, Flavor::shifted, 100);
    CHECK(sys2.tail_exponent == 1);
    auto dr = density(sys2);
    CHECK(dr.divergent);
    CHECK(dr.value.lo == 1);
    CHECK(dr.value.hi == 1);
    CHECK_THROWS_AS(mean(sys2), TailDiverges);
    CHECK_THROWS_AS(nth_moment(sys2, 2), TailDiverges);
    CHECK_THROWS_AS(variance(sys2), TailDiverges);

    // partial products strictly increase toward 1
    BigRat prev(-1);
    for (unsigned long M : {10ul, 100ul, 1000ul}) {
        auto s = build_system(rationals(), 2, Flavor::shifted, M);
        BigRat part = density_partial(s);
        CHECK(part > prev);
        CHECK(part < 1);
        prev = part;
    }

    auto sys3 = build_system(rationals(), 3, Flavor::shifted, 50);
    CHECK_NOTHROW(mean(sys3));
    CHECK_FALSE(density(sys3).divergent);
}

TEST_CASE("enclosures tighten as the tail exponent grows with d") {
    // same cutoff, larger d: the tail bound must shrink
    BigRat prev_width(1);
    for (unsigned d : {2u, 3u, 4u}) {
        auto sys = build_system(rationals(), d, Flavor::plain, 50);
        auto width = mean(sys).width();
        CHECK(width < prev_width);
        prev_width = width;
    }
}

TEST_CASE("analyze bundles quantities and omits restricted on empty systems") {
    auto rep = analyze(rationals(), 2, Flavor::plain, 100, 3);
    CHECK_FALSE(rep.density_result.divergent);
    REQUIRE(rep.mean_value.has_value());
    REQUIRE(rep.mean_restricted.has_value());
    CHECK(rep.higher_moments.size() == 2);
    REQUIRE(rep.variance_value.has_value());
    // identity between the emitted values, all exact rationals
    BigRat sum_sq = 0;
    auto sys = build_system(rationals(), 2, Flavor::plain, 100);
    for (const auto& e : sys.entries) sum_sq += e.s * e.s;
    CHECK(rep.variance_value->lo == rep.mean_value->lo - sum_sq);

    auto rep1 = analyze(rationals(), 2, Flavor::plain, 1, 2);
    CHECK(rep1.mean_value.has_value());
    CHECK_FALSE(rep1.mean_restricted.has_value());

    CHECK_THROWS_AS(analyze(rationals(), 2, Flavor::shifted, 100, 1), TailDiverges);
    CHECK_NOTHROW(analyze(rationals(), 2, Flavor::shifted, 100, 0));
}
