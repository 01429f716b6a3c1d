#include "eisen/moments.hpp"

#include <algorithm>
#include <stdexcept>

#include "eisen/errors.hpp"

namespace eisen {

const char* flavor_name(Flavor f) { return f == Flavor::plain ? "plain" : "shifted"; }

namespace {

// Unreduced fraction with positive denominator.  The truncated Euler
// products and prime sums have denominators that are huge but cheap to
// carry; canonicalizing on every operation would dominate the runtime, so
// gcd reduction happens once, at the conversion back to BigRat.
struct Frac {
    BigInt num;
    BigInt den; // > 0

    static Frac zero() { return {BigInt(0), BigInt(1)}; }
    static Frac one() { return {BigInt(1), BigInt(1)}; }
    static Frac of(const BigRat& q) { return {q.get_num(), q.get_den()}; }
    static Frac ratio(BigInt n, BigInt d) {
        if (sgn(d) < 0) { n = -n; d = -d; }
        return {std::move(n), std::move(d)};
    }

    BigRat to_rat() const { return make_rat(num, den); }
};

Frac operator+(const Frac& a, const Frac& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Frac operator-(const Frac& a, const Frac& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
Frac div(const Frac& a, const Frac& b) {
    if (b.num == 0) throw std::invalid_argument("Frac: division by zero");
    return Frac::ratio(a.num * b.den, a.den * b.num);
}
Frac mul_int(const Frac& a, const BigInt& s) { return {a.num * s, a.den}; }

Frac pow_frac(const Frac& a, unsigned e) {
    Frac r = Frac::one();
    Frac base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Upper bound for the truncated part of sum s_P^j over p > M: at most k
// primes above each rational prime, each with s_P^j <= p^-(j t) where
// t = tail_exponent + 1, then the integral estimate
// sum_{n > M} n^-(jt) <= M^(1-jt) / (jt - 1).
Frac tail_power_sum_bound(const LocalDensitySystem& sys, unsigned j) {
    const unsigned long t = static_cast<unsigned long>(sys.tail_exponent) + 1;
    const unsigned long e = j * t;
    if (e < 2) throw TailDiverges("tail bound needs exponent >= 2");
    const unsigned long M = std::max<unsigned long>(sys.cutoff, 1);
    BigInt den = BigInt(static_cast<long>(e - 1)) * pow_ui(BigInt(static_cast<long>(M)), e - 1);
    return Frac::ratio(BigInt(sys.field_degree), std::move(den));
}

bool divergent_system(const LocalDensitySystem& sys) { return sys.tail_exponent <= 1; }

Frac power_sum(const LocalDensitySystem& sys, unsigned j) {
    Frac acc = Frac::zero();
    for (const auto& entry : sys.entries) {
        Frac s = Frac::of(entry.s);
        acc = acc + pow_frac(s, j);
    }
    return acc;
}

EnclosedValue make_enclosure(const Frac& lo, const Frac& hi) {
    return {lo.to_rat(), hi.to_rat()};
}

// Interval helpers for restricted_variance.
EnclosedValue iv_add(const EnclosedValue& a, const EnclosedValue& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
EnclosedValue iv_sub(const EnclosedValue& a, const EnclosedValue& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
EnclosedValue iv_mul(const EnclosedValue& a, const EnclosedValue& b) {
    BigRat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}
EnclosedValue iv_div_pos(const EnclosedValue& a, const EnclosedValue& b) {
    if (sgn(b.lo) <= 0) throw DensityZero("interval division needs a positive divisor");
    BigRat p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

} // namespace

void LocalDensitySystem::set_archimedean_density(const BigRat& s) {
    if (s != 0)
        throw std::invalid_argument(
            "archimedean condition sets are not supported; s_infinity is pinned to 0");
}

BigRat local_density(const PrimeIdealData& P, unsigned d, Flavor flavor) {
    if (d < 2) throw std::invalid_argument("local_density: need d >= 2");
    BigInt nm1 = P.norm - 1;
    BigInt den = pow_ui(P.norm, flavor == Flavor::plain ? d + 2 : d + 1);
    return make_rat(nm1 * nm1, den);
}

LocalDensitySystem build_system(const NumberField& F, unsigned d, Flavor flavor,
                                unsigned long M) {
    if (d < 2) throw std::invalid_argument("build_system: need d >= 2");
    if (M < 1) throw std::invalid_argument("build_system: need M >= 1");
    LocalDensitySystem sys;
    sys.field = &F;
    sys.field_degree = F.degree();
    sys.d = d;
    sys.flavor = flavor;
    sys.cutoff = M;
    sys.tail_exponent = flavor == Flavor::plain ? d : d - 1;
    for (const PrimeIdealData* P : primes_up_to(F, M))
        sys.entries.push_back({P, local_density(*P, d, flavor)});
    return sys;
}

BigRat density_partial(const LocalDensitySystem& sys) {
    Frac prod = Frac::one();
    for (const auto& entry : sys.entries) {
        BigRat one_minus = 1 - entry.s;
        prod = prod * Frac::of(one_minus);
    }
    return (Frac::one() - prod).to_rat();
}

DensityResult density(const LocalDensitySystem& sys, Tail tail) {
    if (divergent_system(sys)) {
        DensityResult r;
        r.divergent = true;
        r.value = {BigRat(1), BigRat(1)};
        return r;
    }
    Frac prod = Frac::one();
    for (const auto& entry : sys.entries) prod = prod * Frac::of(BigRat(1 - entry.s));
    Frac lo = Frac::one() - prod;
    Frac hi = lo;
    if (tail == Tail::bounded) {
        // 1 - prod * (1 - tailbound)
        Frac tb = tail_power_sum_bound(sys, 1);
        hi = Frac::one() - prod * (Frac::one() - tb);
    }
    return {false, make_enclosure(lo, hi)};
}

EnclosedValue mean(const LocalDensitySystem& sys, Tail tail) {
    if (divergent_system(sys))
        throw TailDiverges("mean diverges: shifted flavor with d = 2 has sum s_P = infinity");
    Frac lo = power_sum(sys, 1);
    Frac hi = tail == Tail::bounded ? lo + tail_power_sum_bound(sys, 1) : lo;
    return make_enclosure(lo, hi);
}

std::vector<PartitionShape> partition_shapes(unsigned n) {
    if (n < 1 || n > 20) throw std::invalid_argument("partition_shapes: need 1 <= n <= 20");
    std::vector<PartitionShape> out;
    std::vector<unsigned> tau(n, 0);
    BigInt nfact;
    mpz_fac_ui(nfact.get_mpz_t(), n);

    // enumerate part multiplicities tau_j, largest part first
    auto rec = [&](auto&& self, unsigned part, unsigned remaining) -> void {
        if (remaining == 0) {
            unsigned len = 0;
            BigInt denom = 1;
            for (unsigned j = 1; j <= n; ++j) {
                if (tau[j - 1] == 0) continue;
                len += tau[j - 1];
                BigInt jfact, tfact;
                mpz_fac_ui(jfact.get_mpz_t(), j);
                mpz_fac_ui(tfact.get_mpz_t(), tau[j - 1]);
                denom *= pow_ui(jfact, tau[j - 1]) * tfact;
            }
            BigInt count = nfact / denom; // exact: multinomial count
            out.push_back({tau, len, std::move(count)});
            return;
        }
        if (part == 0) return;
        for (unsigned m = 0; m * part <= remaining; ++m) {
            tau[part - 1] = m;
            self(self, part - 1, remaining - m * part);
            tau[part - 1] = 0;
        }
    };
    rec(rec, n, n);
    return out;
}

EnclosedValue nth_moment(const LocalDensitySystem& sys, unsigned n, Tail tail) {
    if (n < 1) throw std::invalid_argument("nth_moment: need n >= 1");
    if (divergent_system(sys))
        throw TailDiverges("moments diverge: shifted flavor with d = 2");

    // power sums p_j, then elementary symmetric e_m by Newton's identities;
    // the ordered-distinct-tuple sum over m primes equals m! e_m.
    const unsigned max_len = n;
    std::vector<Frac> ps(max_len + 1, Frac::zero());
    for (unsigned j = 1; j <= max_len; ++j) ps[j] = power_sum(sys, j);
    std::vector<Frac> e(max_len + 1, Frac::zero());
    e[0] = Frac::one();
    for (unsigned m = 1; m <= max_len; ++m) {
        Frac acc = Frac::zero();
        int sign = 1;
        for (unsigned i = 1; i <= m; ++i) {
            Frac term = e[m - i] * ps[i];
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        e[m] = div(acc, {BigInt(static_cast<long>(m)), BigInt(1)});
    }

    Frac lo = Frac::zero();
    Frac tail_total = Frac::zero();
    const Frac tail1 =
        tail == Tail::bounded ? tail_power_sum_bound(sys, 1) : Frac::zero();
    const Frac full_sum = ps[1] + tail1;
    for (const auto& shape : partition_shapes(n)) {
        BigInt lfact;
        mpz_fac_ui(lfact.get_mpz_t(), shape.length);
        BigInt coeff = shape.count * lfact;
        lo = lo + mul_int(e[shape.length], coeff);
        if (tail == Tail::bounded) {
            // per-shape tail: l! c(tau) * tail(sum s) * (sum s + tail)^(l-1)
            Frac t = mul_int(tail1 * pow_frac(full_sum, shape.length - 1), coeff);
            tail_total = tail_total + t;
        }
    }
    return make_enclosure(lo, lo + tail_total);
}

EnclosedValue variance(const LocalDensitySystem& sys, Tail tail) {
    if (divergent_system(sys)) throw TailDiverges("variance diverges: shifted d = 2");
    Frac s1 = power_sum(sys, 1);
    Frac s2 = power_sum(sys, 2);
    Frac lo = s1 - s2;
    Frac hi = tail == Tail::bounded ? lo + tail_power_sum_bound(sys, 1) : lo;
    return make_enclosure(lo, hi);
}

EnclosedValue restricted_moment(const LocalDensitySystem& sys, unsigned n,
                                const EnclosedValue& rho, Tail tail) {
    if (sgn(rho.lo) <= 0)
        throw DensityZero("restricted moment needs a density bounded away from zero");
    EnclosedValue mu_n = nth_moment(sys, n, tail);
    return iv_div_pos(mu_n, rho);
}

EnclosedValue restricted_variance(const LocalDensitySystem& sys, const EnclosedValue& rho,
                                  const EnclosedValue& mu, const EnclosedValue& mu_T,
                                  Tail tail) {
    if (sgn(rho.lo) <= 0)
        throw DensityZero("restricted variance needs a density bounded away from zero");
    if (divergent_system(sys)) throw TailDiverges("restricted variance diverges: shifted d = 2");
    Frac s2 = power_sum(sys, 2);
    Frac s2hi = tail == Tail::bounded ? s2 + tail_power_sum_bound(sys, 2) : s2;
    EnclosedValue sum_sq = make_enclosure(s2, s2hi);

    EnclosedValue mu_sq = iv_mul(mu, mu);
    EnclosedValue inner = iv_add(iv_sub(mu_sq, sum_sq), mu);
    EnclosedValue first = iv_div_pos(inner, rho);
    EnclosedValue cross =
        iv_mul({BigRat(2), BigRat(2)}, iv_mul(mu_T, iv_div_pos(mu, rho)));
    EnclosedValue last = iv_mul(mu_T, mu_T);
    return iv_add(iv_sub(first, cross), last);
}

AnalyticReport analyze(const NumberField& F, unsigned d, Flavor flavor, unsigned long M,
                       unsigned order) {
    AnalyticReport rep;
    rep.field = &F;
    rep.d = d;
    rep.flavor = flavor;
    rep.cutoff = M;
    rep.order = order;
    LocalDensitySystem sys = build_system(F, d, flavor, M);
    rep.density_result = density(sys);
    if (order == 0) return rep;

    rep.mean_value = mean(sys);
    for (unsigned j = 2; j <= order; ++j) rep.higher_moments.emplace_back(j, nth_moment(sys, j));
    rep.variance_value = variance(sys);
    // restricted quantities need the density bounded away from zero; an
    // empty system (M below the first prime) leaves them undefined
    const EnclosedValue& rho = rep.density_result.value;
    if (sgn(rho.lo) > 0) {
        rep.mean_restricted = restricted_moment(sys, 1, rho);
        rep.variance_restricted =
            restricted_variance(sys, rho, *rep.mean_value, *rep.mean_restricted);
    }
    return rep;
}

} // namespace eisen
