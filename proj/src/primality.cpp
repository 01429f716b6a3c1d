#include "eisen/primality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eisen/errors.hpp"
#include "eisen/prng.hpp"

namespace eisen {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Miller-Rabin witness test; returns true if n passes for base a.
bool mr_round_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all n < 2^64 (and far beyond, up to ~3.3e24).
constexpr std::uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : kMrBases)
        if (!mr_round_u64(n, a, d, s)) return false;
    return true;
}

bool mr_round_mpz(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    BigInt nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == nm1) return true;
    }
    return false;
}

bool is_prime_mpz(const BigInt& n) {
    for (std::uint64_t p : kMrBases) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    for (std::uint64_t a : kMrBases)
        if (!mr_round_mpz(n, BigInt(static_cast<unsigned long>(a)), d, s)) return false;
    // 64 extra rounds with seeded bases: error probability < 4^-64 = 2^-128.
    SplitMix64 rng(0x6a09e667f3bcc908ull ^ mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffffu));
    BigInt span = n - 3;
    for (unsigned round = 0; round < 64; ++round) {
        BigInt a = 2 + BigInt(static_cast<unsigned long>(rng.at(round)) % span);
        if (!mr_round_mpz(n, a, d, s)) return false;
    }
    return true;
}

std::uint64_t pollard_brent_u64(std::uint64_t n, std::uint64_t c, std::uint64_t budget) {
    // Brent's cycle-finding variant of Pollard rho with batched gcds.
    auto f = [&](std::uint64_t x) {
        return (mulmod_u64(x, x, n) + c) % n;
    };
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = y;
    std::uint64_t count = 0;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    while (d == 1 && count < budget) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && d == 1 && count < budget) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                std::uint64_t diff = x > y ? x - y : y - x;
                if (diff != 0) q = mulmod_u64(q, diff, n);
                ++count;
            }
            d = std::gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (d == n || d == 1) {
        // backtrack one step at a time
        d = 1;
        while (d == 1 && count < budget) {
            ys = f(ys);
            std::uint64_t diff = x > ys ? x - ys : ys - x;
            d = std::gcd(diff, n);
            ++count;
        }
    }
    return (d != 1 && d != n) ? d : 0;
}

BigInt pollard_brent_mpz(const BigInt& n, unsigned long c, std::uint64_t budget) {
    BigInt x = 2, y = 2, d = 1, q = 1, ys = y, diff;
    std::uint64_t count = 0, r = 1;
    const std::uint64_t m = 128;
    auto f = [&](BigInt& v) { v = (v * v + c) % n; };
    while (d == 1 && count < budget) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) f(y);
        std::uint64_t k = 0;
        while (k < r && d == 1 && count < budget) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                f(y);
                diff = x - y;
                if (diff != 0) q = (q * abs(diff)) % n;
                ++count;
            }
            d = gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (d == n || d == 1) {
        d = 1;
        while (d == 1 && count < budget) {
            f(ys);
            diff = abs(x - ys);
            d = gcd(diff, n);
            ++count;
        }
    }
    return (d != 1 && d != n) ? d : BigInt(0);
}

void factor_rec(const BigInt& n, const FactorConfig& cfg,
                std::vector<BigInt>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    BigInt factor = 0;
    if (n.fits_ulong_p()) {
        std::uint64_t v = n.get_ui();
        for (unsigned retry = 0; retry < cfg.rho_retries && factor == 0; ++retry) {
            std::uint64_t f = pollard_brent_u64(v, retry + 1, cfg.rho_iterations);
            if (f) factor = BigInt(static_cast<unsigned long>(f));
        }
    } else {
        for (unsigned retry = 0; retry < cfg.rho_retries && factor == 0; ++retry)
            factor = pollard_brent_mpz(n, retry + 1, cfg.rho_iterations);
    }
    if (factor == 0) {
        if (mpz_sizeinbase(n.get_mpz_t(), 2) > cfg.cofactor_bits)
            throw FactorTooHard("factor_integer: composite cofactor " + n.get_str() +
                                " survived the rho budget");
        throw FactorTooHard("factor_integer: rho retries exhausted on " + n.get_str());
    }
    factor_rec(factor, cfg, out);
    factor_rec(n / factor, cfg, out);
}

} // namespace

bool is_prime(const BigInt& n) {
    if (sgn(n) < 0) throw std::invalid_argument("is_prime: negative argument");
    if (mpz_fits_ulong_p(n.get_mpz_t()))
        return is_prime_u64(n.get_ui());
    return is_prime_mpz(n);
}

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n,
                                                        const FactorConfig& cfg) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero argument");
    BigInt m = abs(n);
    std::vector<BigInt> primes;
    // strip small primes first
    for (std::uint64_t p = 2; p <= cfg.trial_bound && m > 1; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.push_back(BigInt(static_cast<unsigned long>(p)));
            m /= static_cast<unsigned long>(p);
        }
    }
    if (m > 1) factor_rec(m, cfg, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<BigInt, unsigned>> result;
    for (const BigInt& p : primes) {
        if (!result.empty() && result.back().first == p)
            ++result.back().second;
        else
            result.emplace_back(p, 1);
    }
    return result;
}

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

} // namespace eisen
