#include "eisen/eisenstein.hpp"

#include <stdexcept>

#include "eisen/errors.hpp"

namespace eisen {

bool is_p_eisenstein(const CoefficientTuple& f, const PrimeIdealData& P) {
    const unsigned d = f.degree();
    if (ideal_contains(P, f.a[d])) return false;
    for (unsigned i = 0; i < d; ++i)
        if (!ideal_contains(P, f.a[i])) return false;
    return !P.powers[2].contains(f.a[0]);
}

CoefficientTuple shift_poly(const CoefficientTuple& f, const AlgebraicInteger& b) {
    const NumberField& F = *f.field;
    const unsigned d = f.degree();
    std::vector<AlgebraicInteger> bpow(d + 1, F.one());
    for (unsigned i = 1; i <= d; ++i) bpow[i] = F.mul(bpow[i - 1], b);

    CoefficientTuple out{f.field, std::vector<AlgebraicInteger>(d + 1, F.zero())};
    for (unsigned i = 0; i <= d; ++i) {
        AlgebraicInteger acc = F.zero();
        for (unsigned j = i; j <= d; ++j) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), j, i);
            acc = F.add(acc, F.mul_int(F.mul(f.a[j], bpow[j - i]), binom));
        }
        out.a[i] = std::move(acc);
    }
    return out;
}

std::optional<AlgebraicInteger> shifted_eisenstein_witness(const CoefficientTuple& f,
                                                           const PrimeIdealData& P,
                                                           const BigInt& residue_bound) {
    const NumberField& F = *f.field;
    const unsigned d = f.degree();
    if (ideal_contains(P, f.a[d])) return std::nullopt; // shifting keeps a_d

    if (d % P.p != 0) {
        // a'_{d-1} = a_{d-1} + d a_d b must land in P, forcing the residue
        // b = -a_{d-1} / (d a_d) in o/P = F_p[x]/(g).
        const auto p = P.p;
        FpPoly denom = (FpPoly::from_integer_poly(p, f.a[d].c).scaled(d % p)) % P.g;
        auto [g, inv] = fp_gcdext_u(denom, P.g);
        if (g.degree() != 0) throw std::logic_error("witness: non-invertible unit image");
        FpPoly num = FpPoly::from_integer_poly(p, F.neg(f.a[d - 1]).c) % P.g;
        FpPoly bimg = (num * inv) % P.g;
        AlgebraicInteger b = F.zero();
        for (size_t i = 0; i < bimg.coeffs().size(); ++i) b.c[i] = BigInt(bimg.coeffs()[i]);
        if (is_p_eisenstein(shift_poly(f, b), P)) return b;
        return std::nullopt;
    }
    for (const auto& b : residue_representatives(P, residue_bound))
        if (is_p_eisenstein(shift_poly(f, b), P)) return b;
    return std::nullopt;
}

AlgebraicInteger discriminant(const CoefficientTuple& f) {
    const NumberField& F = *f.field;
    const unsigned d = f.degree();
    if (d < 2) throw std::invalid_argument("discriminant: need degree >= 2");
    if (f.a[d].is_zero())
        throw LeadingCoefficientZero("discriminant: leading coefficient is zero");

    // Sylvester matrix of f (d-1 rows) and f' (d rows), entries in o.
    const unsigned n = 2 * d - 1;
    std::vector<std::vector<AlgebraicInteger>> s(n, std::vector<AlgebraicInteger>(n, F.zero()));
    for (unsigned r = 0; r < d - 1; ++r)
        for (unsigned j = 0; j <= d; ++j) s[r][r + j] = f.a[d - j];
    for (unsigned r = 0; r < d; ++r)
        for (unsigned j = 0; j < d; ++j)
            s[d - 1 + r][r + j] = F.mul_int(f.a[d - j], BigInt(d - j));

    // Bareiss fraction-free elimination; divisions are exact in o.
    int sign = 1;
    AlgebraicInteger prev = F.one();
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (s[k][k].is_zero()) {
            unsigned swap_row = k + 1;
            while (swap_row < n && s[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return F.zero();
            std::swap(s[k], s[swap_row]);
            sign = -sign;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j) {
                AlgebraicInteger t =
                    F.sub(F.mul(s[i][j], s[k][k]), F.mul(s[i][k], s[k][j]));
                auto q = F.div_exact(t, prev);
                if (!q) throw std::logic_error("discriminant: inexact Bareiss division");
                s[i][j] = std::move(*q);
            }
            s[i][k] = F.zero();
        }
        prev = s[k][k];
    }
    AlgebraicInteger res = s[n - 1][n - 1];
    if (sign < 0) res = F.neg(res);
    if ((static_cast<unsigned long>(d) * (d - 1) / 2) % 2 == 1) res = F.neg(res);
    auto disc = F.div_exact(res, f.a[d]);
    if (!disc) throw std::logic_error("discriminant: resultant not divisible by a_d");
    return *disc;
}

std::vector<const PrimeIdealData*> primes_dividing_element(const NumberField& F,
                                                           const AlgebraicInteger& x,
                                                           const FactorConfig& cfg) {
    std::vector<const PrimeIdealData*> out;
    BigInt n = F.field_norm(x);
    if (n == 0) throw std::invalid_argument("primes_dividing_element: zero element");
    if (abs(n) == 1) return out; // unit
    for (const auto& [p, e] : factor_integer(n, cfg)) {
        if (!p.fits_ulong_p())
            throw FactorTooHard("prime divisor " + p.get_str() + " exceeds the word size");
        for (const PrimeIdealData& P : F.split(p.get_ui()))
            if (ideal_contains(P, x)) out.push_back(&P);
    }
    return out;
}

std::vector<const PrimeIdealData*> candidate_primes_eisenstein(const CoefficientTuple& f,
                                                               const FactorConfig& cfg) {
    if (f.a[0].is_zero()) return {}; // 0 lies in every P^2: never Eisenstein
    return primes_dividing_element(*f.field, f.a[0], cfg);
}

std::vector<const PrimeIdealData*> candidate_primes_shifted(const CoefficientTuple& f,
                                                            const FactorConfig& cfg) {
    if (f.degree() < 2 || f.a[f.degree()].is_zero()) return {};
    AlgebraicInteger disc = discriminant(f);
    if (disc.is_zero()) return {}; // shifted Eisenstein implies squarefree
    return primes_dividing_element(*f.field, disc, cfg);
}

} // namespace eisen
