#include "eisen/number_field.hpp"

#include <algorithm>
#include <set>

#include "eisen/errors.hpp"
#include "eisen/primality.hpp"

namespace eisen {

std::string AlgebraicInteger::to_string(const std::string& var) const {
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        const bool neg = c[i] < 0;
        BigInt mag = abs(c[i]);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// Resultant of monic f and its derivative, as a Sylvester determinant.
BigInt poly_disc(const std::vector<BigInt>& f) {
    const size_t k = f.size() - 1;
    if (k == 1) return 1;
    std::vector<BigInt> df(k);
    for (size_t i = 1; i <= k; ++i) df[i - 1] = BigInt(static_cast<long>(i)) * f[i];
    const size_t n = 2 * k - 1;
    IntMatrix s(n, n);
    for (size_t r = 0; r < k - 1; ++r)
        for (size_t j = 0; j <= k; ++j) s.at(r, r + k - j) = f[j];
    for (size_t r = 0; r < k; ++r)
        for (size_t j = 0; j < k; ++j) s.at(k - 1 + r, r + k - 1 - j) = df[j];
    BigInt res = determinant(s);
    if ((k * (k - 1) / 2) % 2 == 1) res = -res;
    return res; // disc = (-1)^(k(k-1)/2) Res(f, f') for monic f
}

} // namespace

NumberField::NumberField(std::vector<BigInt> f) : f_(std::move(f)) {
    while (f_.size() > 1 && f_.back() == 0) f_.pop_back();
    if (f_.size() < 2) throw FieldRejected("defining polynomial must have degree >= 1");
    if (f_.back() != 1) throw FieldRejected("defining polynomial must be monic");
    k_ = static_cast<unsigned>(f_.size() - 1);
    disc_ = poly_disc(f_);
    if (disc_ == 0) throw FieldRejected("defining polynomial is not squarefree");
    check_irreducibility();
}

void NumberField::check_irreducibility() {
    if (k_ == 1) {
        certified_ = true;
        return;
    }
    // rational-root test: a monic integer polynomial's rational roots are
    // integer divisors of the constant term
    if (f_[0] == 0) throw FieldRejected("x divides the defining polynomial");
    std::vector<BigInt> divisors{1};
    for (const auto& [p, e] : factor_integer(f_[0])) {
        std::vector<BigInt> next;
        BigInt pe = 1;
        for (unsigned i = 0; i <= e; ++i, pe *= p)
            for (const auto& d : divisors) next.push_back(d * pe);
        divisors = std::move(next);
    }
    for (const auto& d : divisors) {
        for (int sign : {1, -1}) {
            BigInt x = sign * d, acc = 0;
            for (size_t i = f_.size(); i-- > 0;) acc = acc * x + f_[i];
            if (acc == 0)
                throw FieldRejected("defining polynomial has rational root " + x.get_str());
        }
    }
    if (k_ <= 3) { // no rational root and degree <= 3: irreducible
        certified_ = true;
        return;
    }
    // Degree sieve: possible proper-factor degrees must be consistent with
    // the factor degrees mod every good prime.
    std::set<unsigned> possible;
    for (unsigned i = 1; i < k_; ++i) possible.insert(i);
    for (std::uint32_t p : primes_below(100)) {
        if (mpz_divisible_ui_p(disc_.get_mpz_t(), p)) continue;
        auto factors = factor_poly_mod_p(FpPoly::from_integer_poly(p, f_));
        if (factors.size() == 1 && factors[0].second == 1) {
            certified_ = true; // irreducible mod p
            return;
        }
        std::vector<unsigned> degs;
        for (const auto& [g, e] : factors)
            for (unsigned i = 0; i < e; ++i) degs.push_back(static_cast<unsigned>(g.degree()));
        std::set<unsigned> sums{0};
        for (unsigned deg : degs) {
            std::set<unsigned> next = sums;
            for (unsigned s : sums) next.insert(s + deg);
            sums = std::move(next);
        }
        std::set<unsigned> keep;
        for (unsigned cand : possible)
            if (sums.count(cand)) keep.insert(cand);
        possible = std::move(keep);
        if (possible.empty()) {
            certified_ = true;
            return;
        }
    }
    certified_ = false; // inconclusive: accepted with a warning flag
}

std::string NumberField::poly_string() const {
    std::string out;
    for (size_t i = f_.size(); i-- > 0;) {
        if (f_[i] == 0) continue;
        const bool neg = f_[i] < 0;
        BigInt mag = abs(f_[i]);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

AlgebraicInteger NumberField::one() const {
    auto v = zero();
    v.c[0] = 1;
    return v;
}

AlgebraicInteger NumberField::from_int(long x) const {
    auto v = zero();
    v.c[0] = x;
    return v;
}

AlgebraicInteger NumberField::element(std::vector<BigInt> coords) const {
    if (coords.size() != k_) throw std::invalid_argument("element: wrong coordinate count");
    return {std::move(coords)};
}

AlgebraicInteger NumberField::add(const AlgebraicInteger& a, const AlgebraicInteger& b) const {
    AlgebraicInteger r = a;
    for (unsigned i = 0; i < k_; ++i) r.c[i] += b.c[i];
    return r;
}

AlgebraicInteger NumberField::sub(const AlgebraicInteger& a, const AlgebraicInteger& b) const {
    AlgebraicInteger r = a;
    for (unsigned i = 0; i < k_; ++i) r.c[i] -= b.c[i];
    return r;
}

AlgebraicInteger NumberField::neg(const AlgebraicInteger& a) const {
    AlgebraicInteger r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

AlgebraicInteger NumberField::mul_int(const AlgebraicInteger& a, const BigInt& s) const {
    AlgebraicInteger r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

AlgebraicInteger NumberField::mul(const AlgebraicInteger& a, const AlgebraicInteger& b) const {
    std::vector<BigInt> prod(2 * k_ - 1);
    for (unsigned i = 0; i < k_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] += a.c[i] * b.c[j];
    }
    // reduce modulo the monic defining polynomial
    for (size_t i = prod.size(); i-- > k_;) {
        if (prod[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i - k_ + j] -= prod[i] * f_[j];
        prod[i] = 0;
    }
    prod.resize(k_);
    return {std::move(prod)};
}

AlgebraicInteger NumberField::pow(const AlgebraicInteger& a, unsigned e) const {
    AlgebraicInteger r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

AlgebraicInteger NumberField::theta() const {
    auto v = zero();
    if (k_ == 1)
        v.c[0] = -f_[0];
    else
        v.c[1] = 1;
    return v;
}

AlgebraicInteger NumberField::mul_theta(const AlgebraicInteger& a) const {
    if (k_ == 1) return mul_int(a, -f_[0]);
    std::vector<BigInt> next(k_ + 1);
    for (unsigned j = 0; j < k_; ++j) next[j + 1] = a.c[j];
    if (next[k_] != 0)
        for (unsigned j = 0; j < k_; ++j) next[j] -= next[k_] * f_[j];
    next.resize(k_);
    return {std::move(next)};
}

BigInt NumberField::field_norm(const AlgebraicInteger& a) const {
    IntMatrix m(k_, k_);
    AlgebraicInteger row = a;
    for (unsigned i = 0; i < k_; ++i) {
        for (unsigned j = 0; j < k_; ++j) m.at(i, j) = row.c[j];
        if (i + 1 < k_) row = mul_theta(row);
    }
    return determinant(m);
}

std::optional<AlgebraicInteger> NumberField::div_exact(const AlgebraicInteger& x,
                                                       const AlgebraicInteger& y) const {
    if (y.is_zero()) throw std::invalid_argument("div_exact: division by zero");
    // Solve z * M_y = x over Q by Gaussian elimination, then check
    // integrality.  M_y row i holds the coordinates of y * theta^i.
    const unsigned k = k_;
    std::vector<std::vector<BigRat>> m(k, std::vector<BigRat>(k + 1));
    AlgebraicInteger row = y;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) m[j][i] = BigRat(row.c[j]); // transposed
        if (i + 1 < k) row = mul_theta(row);
    }
    for (unsigned j = 0; j < k; ++j) m[j][k] = BigRat(x.c[j]);

    for (unsigned col = 0, prow = 0; col < k && prow < k; ++col, ++prow) {
        unsigned pr = prow;
        while (pr < k && m[pr][col] == 0) ++pr;
        if (pr == k) return std::nullopt; // cannot happen for y != 0 in a field
        std::swap(m[pr], m[prow]);
        BigRat inv = m[prow][col];
        for (unsigned c = col; c <= k; ++c) m[prow][c] /= inv;
        for (unsigned r = 0; r < k; ++r) {
            if (r == prow || m[r][col] == 0) continue;
            BigRat f = m[r][col];
            for (unsigned c = col; c <= k; ++c) m[r][c] -= f * m[prow][c];
        }
    }
    AlgebraicInteger z = zero();
    for (unsigned i = 0; i < k; ++i) {
        if (m[i][k].get_den() != 1) return std::nullopt;
        z.c[i] = m[i][k].get_num();
    }
    return z;
}

} // namespace eisen
