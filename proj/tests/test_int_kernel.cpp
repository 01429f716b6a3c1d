#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "eisen/errors.hpp"
#include "eisen/fp_poly.hpp"
#include "eisen/int_matrix.hpp"
#include "eisen/primality.hpp"
#include "eisen/prng.hpp"

using namespace eisen;

TEST_CASE("is_prime on small examples") {
    CHECK(is_prime(BigInt(2)));
    CHECK_FALSE(is_prime(BigInt(561))); // Carmichael number, 3 | 561
    CHECK(is_prime(BigInt(2147483647)));
    CHECK_FALSE(is_prime(BigInt(0)));
    CHECK_FALSE(is_prime(BigInt(1)));
}

TEST_CASE("is_prime agrees with a sieve up to 10^6 on random samples") {
    auto primes = primes_below(1000000);
    std::set<std::uint32_t> prime_set(primes.begin(), primes.end());
    SplitMix64 rng(12345);
    for (int i = 0; i < 20000; ++i) {
        std::uint32_t n = static_cast<std::uint32_t>(scale_to_range(rng.at(i), 1000000)) + 1;
        CHECK(is_prime(BigInt(n)) == (prime_set.count(n) > 0));
    }
}

TEST_CASE("is_prime beyond 64 bits") {
    // 2^89 - 1 is a Mersenne prime; 2^87 - 1 = 3 * 29023...
    BigInt m89 = pow_ui(BigInt(2), 89) - 1;
    CHECK(is_prime(m89));
    BigInt m87 = pow_ui(BigInt(2), 87) - 1;
    CHECK_FALSE(is_prime(m87));
}

TEST_CASE("factor_integer basics") {
    auto f12 = factor_integer(BigInt(12));
    REQUIRE(f12.size() == 2);
    CHECK(f12[0] == std::pair{BigInt(2), 2u});
    CHECK(f12[1] == std::pair{BigInt(3), 1u});

    CHECK(factor_integer(BigInt(1)).empty());
    CHECK(factor_integer(BigInt(-1)).empty());

    auto f1000003 = factor_integer(BigInt(1000003));
    REQUIRE(f1000003.size() == 1);
    CHECK(f1000003[0] == std::pair{BigInt(1000003), 1u});

    CHECK_THROWS_AS(factor_integer(BigInt(0)), std::invalid_argument);
}

TEST_CASE("factor_integer reassembles the input") {
    SplitMix64 rng(99);
    for (int i = 0; i < 300; ++i) {
        BigInt n = BigInt(static_cast<unsigned long>(rng.at(i) >> 20)) + 2;
        BigInt prod = 1;
        for (const auto& [p, e] : factor_integer(n)) {
            CHECK(is_prime(p));
            prod *= pow_ui(p, e);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("factor_integer FactorTooHard on a hard semiprime") {
    // product of two ~100-bit primes: far beyond the 96-bit cofactor bound
    BigInt a, b;
    mpz_nextprime(a.get_mpz_t(), pow_ui(BigInt(2), 100).get_mpz_t());
    mpz_nextprime(b.get_mpz_t(), pow_ui(BigInt(2), 110).get_mpz_t());
    FactorConfig cfg;
    cfg.rho_iterations = 2000;
    cfg.rho_retries = 2;
    CHECK_THROWS_AS(factor_integer(a * b, cfg), FactorTooHard);
}

TEST_CASE("factor_poly_mod_p spec examples") {
    FpPoly x2p1_5(5, {1, 0, 1});
    auto r = factor_poly_mod_p(x2p1_5);
    REQUIRE(r.size() == 2);
    CHECK(r[0].first == FpPoly(5, {2, 1}));
    CHECK(r[0].second == 1);
    CHECK(r[1].first == FpPoly(5, {3, 1}));

    FpPoly x2p1_3(3, {1, 0, 1});
    auto r3 = factor_poly_mod_p(x2p1_3);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].first == FpPoly(3, {1, 0, 1}));
    CHECK(r3[0].second == 1);

    FpPoly x2_7(7, {0, 0, 1});
    auto r7 = factor_poly_mod_p(x2_7);
    REQUIRE(r7.size() == 1);
    CHECK(r7[0].first == FpPoly(7, {0, 1}));
    CHECK(r7[0].second == 2);
}

TEST_CASE("factor_poly_mod_p recombines and counts roots, randomized") {
    const std::uint64_t ps[] = {2, 3, 5, 7, 11, 31, 97};
    SplitMix64 rng(4242);
    std::uint64_t ctr = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        std::uint64_t p = ps[scale_to_range(rng.at(ctr++), 7)];
        size_t deg = 1 + scale_to_range(rng.at(ctr++), 8);
        std::vector<std::uint64_t> coeffs(deg + 1);
        for (auto& c : coeffs) c = scale_to_range(rng.at(ctr++), p);
        coeffs[deg] = 1 + scale_to_range(rng.at(ctr++), p - 1);
        FpPoly f(p, coeffs);

        auto factors = factor_poly_mod_p(f);
        FpPoly prod = FpPoly::constant(p, f.leading());
        size_t root_count = 0;
        for (const auto& [g, e] : factors) {
            CHECK(g.leading() == 1);
            for (unsigned i = 0; i < e; ++i) prod = prod * g;
            if (g.degree() == 1) root_count += e;
        }
        CHECK(prod == f);
        // number of roots (with multiplicity) matches exhaustive evaluation
        size_t eval_roots = 0;
        for (std::uint64_t x = 0; x < p; ++x)
            if (f.evaluate(x) == 0) {
                // multiplicity via repeated division by (x - root)
                FpPoly lin(p, {p - x, 1});
                FpPoly rest = f;
                while (true) {
                    auto [q, rem] = rest.divmod(lin);
                    if (!rem.is_zero()) break;
                    ++eval_roots;
                    rest = q;
                }
            }
        CHECK(root_count == eval_roots);
    }
}

TEST_CASE("factorization is deterministic run-to-run") {
    FpPoly f(31, {7, 3, 0, 11, 1, 9, 1});
    auto a = factor_poly_mod_p(f);
    auto b = factor_poly_mod_p(f);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == b[i].second);
    }
}

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

} // namespace

TEST_CASE("hnf spec examples") {
    CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));

    auto h = hnf(from_rows({{2, 0}, {0, 2}, {1, 1}}));
    CHECK(h == from_rows({{1, 1}, {0, 2}}));

    // zero lattice: all rows vanish
    auto z = hnf(from_rows({{0, 0}, {0, 0}}));
    CHECK(z.rows() == 0);
}

TEST_CASE("hnf is idempotent and preserves membership") {
    SplitMix64 rng(777);
    std::uint64_t ctr = 0;
    for (int iter = 0; iter < 200; ++iter) {
        size_t rows = 2 + scale_to_range(rng.at(ctr++), 3);
        size_t cols = 2 + scale_to_range(rng.at(ctr++), 2);
        IntMatrix m(rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                m.at(r, c) = static_cast<long>(scale_to_range(rng.at(ctr++), 11)) - 5;
        auto h = hnf(m);
        CHECK(hnf(h) == h);

        if (h.rows() == cols) {
            // random integer combinations of original rows stay inside
            for (int t = 0; t < 10; ++t) {
                std::vector<BigInt> v(cols);
                for (size_t r = 0; r < rows; ++r) {
                    long coeff = static_cast<long>(scale_to_range(rng.at(ctr++), 7)) - 3;
                    for (size_t c = 0; c < cols; ++c) v[c] += coeff * m.at(r, c);
                }
                CHECK(solve_in_lattice(h, v));
            }
        }
    }
}

TEST_CASE("solve_in_lattice spec examples") {
    auto twice = from_rows({{2, 0}, {0, 2}});
    CHECK(solve_in_lattice(twice, std::vector<BigInt>{4, 6}));
    CHECK_FALSE(solve_in_lattice(twice, std::vector<BigInt>{1, 0}));

    auto h = hnf(from_rows({{2, 0}, {1, 1}}));
    CHECK(solve_in_lattice(h, std::vector<BigInt>{3, 1}));
}

namespace {

// Independent membership oracle: solve x * h = v over Q by Gaussian
// elimination and check the solution is integral.
bool member_by_rational_solve(const IntMatrix& h, const std::vector<BigInt>& v) {
    const size_t n = h.rows();
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n + 1));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) m[c][r] = BigRat(h.at(r, c)); // transposed
    for (size_t c = 0; c < n; ++c) m[c][n] = BigRat(v[c]);
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && m[pr][col] == 0) ++pr;
        if (pr == n) return false;
        std::swap(m[pr], m[col]);
        BigRat piv = m[col][col];
        for (size_t c = col; c <= n; ++c) m[col][c] /= piv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            BigRat f = m[r][col];
            for (size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    for (size_t r = 0; r < n; ++r)
        if (m[r][n].get_den() != 1) return false;
    return true;
}

} // namespace

TEST_CASE("solve_in_lattice agrees with independent oracles") {
    SplitMix64 rng(31415);
    std::uint64_t ctr = 0;
    int lattices = 0;
    for (int iter = 0; lattices < 100 && iter < 1000; ++iter) {
        size_t n = 2 + scale_to_range(rng.at(ctr++), 2); // 2x2 or 3x3
        IntMatrix m(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                m.at(r, c) = static_cast<long>(scale_to_range(rng.at(ctr++), 11)) - 5;
        auto h = hnf(m);
        if (h.rows() != n) continue;
        ++lattices;

        // members by construction are recognized
        for (int t = 0; t < 5; ++t) {
            std::vector<BigInt> v(n);
            for (size_t r = 0; r < n; ++r) {
                long coeff = static_cast<long>(scale_to_range(rng.at(ctr++), 9)) - 4;
                for (size_t c = 0; c < n; ++c) v[c] += coeff * m.at(r, c);
            }
            CHECK(solve_in_lattice(h, v));
        }
        // random vectors agree with the rational-solve oracle
        for (int t = 0; t < 10; ++t) {
            std::vector<BigInt> v(n);
            for (auto& x : v) x = static_cast<long>(scale_to_range(rng.at(ctr++), 13)) - 6;
            CHECK(solve_in_lattice(h, v) == member_by_rational_solve(h, v));
        }
    }
    CHECK(lattices == 100);
}
