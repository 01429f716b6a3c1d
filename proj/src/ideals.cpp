#include <algorithm>
#include <cassert>
#include <mutex>

#include "eisen/errors.hpp"
#include "eisen/number_field.hpp"
#include "eisen/primality.hpp"

namespace eisen {

IdealLattice::IdealLattice(const NumberField& field, const IntMatrix& generator_rows)
    : field_(&field) {
    const unsigned k = field.degree();
    if (generator_rows.cols() != k)
        throw std::invalid_argument("IdealLattice: generator width must equal field degree");
    basis_ = hnf(generator_rows);
    if (basis_.rows() != k)
        throw RankDeficient("IdealLattice: generators span a rank-" +
                            std::to_string(basis_.rows()) + " lattice, need " +
                            std::to_string(k));
    norm_ = 1;
    for (unsigned i = 0; i < k; ++i) norm_ *= basis_.at(i, i);
    // theta-closure: theta * row must stay inside for every basis row
    for (unsigned i = 0; i < k; ++i) {
        AlgebraicInteger row{std::vector<BigInt>(basis_.row(i).begin(), basis_.row(i).end())};
        if (!solve_in_lattice(basis_, field.mul_theta(row).c))
            throw std::invalid_argument("IdealLattice: lattice is not an o-module");
    }
}

IdealLattice IdealLattice::unit(const NumberField& field) {
    return IdealLattice(field, IntMatrix::identity(field.degree()));
}

IdealLattice IdealLattice::principal(const NumberField& field, const AlgebraicInteger& x) {
    const unsigned k = field.degree();
    IntMatrix gen(k, k);
    AlgebraicInteger row = x;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) gen.at(i, j) = row.c[j];
        if (i + 1 < k) row = field.mul_theta(row);
    }
    return IdealLattice(field, gen);
}

bool IdealLattice::contains(const AlgebraicInteger& x) const {
    return solve_in_lattice(basis_, x.c);
}

IdealLattice ideal_mul(const IdealLattice& a, const IdealLattice& b) {
    const NumberField& F = a.field();
    if (&F != &b.field()) throw std::invalid_argument("ideal_mul: fields differ");
    const unsigned k = F.degree();
    IntMatrix gen(0, k);
    for (unsigned i = 0; i < k; ++i) {
        AlgebraicInteger ra{std::vector<BigInt>(a.basis().row(i).begin(), a.basis().row(i).end())};
        for (unsigned j = 0; j < k; ++j) {
            AlgebraicInteger rb{std::vector<BigInt>(b.basis().row(j).begin(), b.basis().row(j).end())};
            gen.append_row(F.mul(ra, rb).c);
        }
    }
    return IdealLattice(F, gen);
}

IdealLattice ideal_add(const IdealLattice& a, const IdealLattice& b) {
    const NumberField& F = a.field();
    if (&F != &b.field()) throw std::invalid_argument("ideal_add: fields differ");
    IntMatrix gen(0, F.degree());
    for (size_t i = 0; i < a.basis().rows(); ++i) gen.append_row(a.basis().row(i));
    for (size_t i = 0; i < b.basis().rows(); ++i) gen.append_row(b.basis().row(i));
    return IdealLattice(F, gen);
}

IdealLattice PrimeIdealData::power(unsigned j) const {
    if (j < powers.size()) return powers[j];
    IdealLattice acc = powers.back();
    for (unsigned i = static_cast<unsigned>(powers.size()) - 1; i < j; ++i)
        acc = ideal_mul(acc, powers[1]);
    return acc;
}

std::string PrimeIdealData::label() const {
    return "(" + std::to_string(p) + ", " + g.to_string() + ")";
}

bool ideal_contains(const PrimeIdealData& P, const AlgebraicInteger& x) {
    return P.lattice().contains(x);
}

Valuation valuation(const PrimeIdealData& P, const AlgebraicInteger& x, unsigned cap) {
    unsigned v = 0;
    while (v < cap) {
        const bool inside = (v + 1 < P.powers.size())
                                ? P.powers[v + 1].contains(x)
                                : P.power(v + 1).contains(x);
        if (!inside) return {v, false};
        ++v;
    }
    return {cap, true};
}

std::vector<AlgebraicInteger> residue_representatives(const PrimeIdealData& P,
                                                      const BigInt& enumeration_bound) {
    if (P.norm > enumeration_bound)
        throw ResidueFieldTooLarge("residue field of " + P.label() + " has " +
                                   P.norm.get_str() + " elements, bound is " +
                                   enumeration_bound.get_str());
    const unsigned deg = P.residue_degree;
    const unsigned k = P.lattice().field().degree();
    const unsigned long p = P.p;
    std::vector<AlgebraicInteger> out;
    if (P.norm.fits_ulong_p()) out.reserve(P.norm.get_ui());
    std::vector<unsigned long> digits(deg, 0);
    while (true) {
        AlgebraicInteger x{std::vector<BigInt>(k)};
        for (unsigned j = 0; j < deg; ++j) x.c[j] = BigInt(digits[j]);
        out.push_back(std::move(x));
        // lexicographic successor: last digit varies fastest
        unsigned j = deg;
        while (j > 0) {
            if (++digits[j - 1] < p) break;
            digits[j - 1] = 0;
            --j;
        }
        if (j == 0) break;
    }
    return out;
}

namespace {

std::vector<BigInt> lift_monic(const FpPoly& g) {
    std::vector<BigInt> out(g.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = BigInt(g.coeffs()[i]);
    return out;
}

std::vector<BigInt> int_poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Dedekind's criterion at p: with f = prod g_i^{e_i} mod p, set
// gbar = prod g_i, hbar = f/gbar mod p, and T = (g* h* - f)/p for monic
// lifts.  Z[theta] is p-maximal iff gcd(Tbar, gbar, hbar) = 1.
void dedekind_check(const NumberField& F, unsigned long p,
                    const std::vector<std::pair<FpPoly, unsigned>>& factors) {
    FpPoly gbar = FpPoly::constant(p, 1), hbar = FpPoly::constant(p, 1);
    std::vector<BigInt> glift{BigInt(1)}, hlift{BigInt(1)};
    for (const auto& [g, e] : factors) {
        gbar = gbar * g;
        glift = int_poly_mul(glift, lift_monic(g));
        for (unsigned i = 1; i < e; ++i) {
            hbar = hbar * g;
            hlift = int_poly_mul(hlift, lift_monic(g));
        }
    }
    std::vector<BigInt> gh = int_poly_mul(glift, hlift);
    const auto& f = F.defining_poly();
    std::vector<BigInt> t(std::max(gh.size(), f.size()));
    for (size_t i = 0; i < t.size(); ++i) {
        BigInt num = (i < gh.size() ? gh[i] : BigInt(0)) - (i < f.size() ? f[i] : BigInt(0));
        if (!mpz_divisible_ui_p(num.get_mpz_t(), p))
            throw std::logic_error("dedekind_check: lift mismatch");
        t[i] = num / static_cast<long>(p);
    }
    FpPoly tbar = FpPoly::from_integer_poly(p, t);
    FpPoly common = fp_gcd(fp_gcd(tbar, gbar), hbar);
    if (common.degree() > 0)
        throw NotMaximalAtP(p, "Z[theta] is not maximal at " + std::to_string(p) +
                                   " (Dedekind criterion fails for " + F.poly_string() + ")");
}

} // namespace

std::vector<PrimeIdealData> NumberField::split_uncached(unsigned long p) const {
    if (!is_prime(BigInt(p)))
        throw std::invalid_argument("split: " + std::to_string(p) + " is not prime");
    auto factors = factor_poly_mod_p(FpPoly::from_integer_poly(p, f_));
    if (mpz_divisible_ui_p(disc_.get_mpz_t(), p)) dedekind_check(*this, p, factors);

    std::vector<PrimeIdealData> out;
    for (const auto& [g, e] : factors) {
        const unsigned deg = static_cast<unsigned>(g.degree());
        BigInt norm = pow_ui(BigInt(p), deg);

        // lattice generated by p*theta^j and g(theta)*theta^j
        IntMatrix gen(0, k_);
        for (unsigned j = 0; j < k_; ++j) {
            std::vector<BigInt> row(k_);
            row[j] = static_cast<long>(p);
            gen.append_row(row);
        }
        AlgebraicInteger gtheta = zero(), monomial = one();
        for (size_t i = 0; i < g.coeffs().size(); ++i) {
            gtheta = add(gtheta, mul_int(monomial, BigInt(g.coeffs()[i])));
            if (i + 1 < g.coeffs().size()) monomial = mul_theta(monomial);
        }
        AlgebraicInteger acc = gtheta;
        for (unsigned j = 0; j < k_; ++j) {
            gen.append_row(acc.c);
            if (j + 1 < k_) acc = mul_theta(acc);
        }
        IdealLattice lat(*this, gen);
        if (lat.norm() != norm)
            throw std::logic_error("split: lattice norm " + lat.norm().get_str() +
                                   " != p^deg at p=" + std::to_string(p));
        std::vector<IdealLattice> powers;
        powers.push_back(IdealLattice::unit(*this));
        powers.push_back(std::move(lat));
        for (unsigned j = 2; j <= 4; ++j) powers.push_back(ideal_mul(powers[j - 1], powers[1]));
        out.push_back(PrimeIdealData{p, g, deg, e, std::move(norm), std::move(powers)});
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdealData& a, const PrimeIdealData& b) {
        return FpPoly::lex_less(a.g, b.g);
    });
    // sanity: sum of e_i * deg(g_i) must equal the field degree
    unsigned total = 0;
    for (const auto& P : out) total += P.ramification_index * P.residue_degree;
    if (total != k_) throw std::logic_error("split: sum e*deg != k");
    return out;
}

const std::vector<PrimeIdealData>& NumberField::split(unsigned long p) const {
    {
        std::shared_lock lock(mutex_);
        auto it = split_cache_.find(p);
        if (it != split_cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = split_cache_.find(p);
    if (it != split_cache_.end()) return it->second;
    auto [pos, inserted] = split_cache_.emplace(p, split_uncached(p));
    return pos->second;
}

std::vector<const PrimeIdealData*> primes_up_to(const NumberField& F, unsigned long M) {
    std::vector<const PrimeIdealData*> out;
    if (M > 0xFFFFFFFFull) throw std::invalid_argument("primes_up_to: cutoff too large");
    for (std::uint32_t p : primes_below(static_cast<std::uint32_t>(M)))
        for (const PrimeIdealData& P : F.split(p)) out.push_back(&P);
    return out;
}

} // namespace eisen
