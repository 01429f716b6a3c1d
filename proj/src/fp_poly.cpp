#include "eisen/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "eisen/prng.hpp"

namespace eisen {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t powmod_scalar(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_scalar(std::uint64_t a, std::uint64_t p) {
    return powmod_scalar(a, p - 2, p);
}

} // namespace

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::from_integer_poly(std::uint64_t p, std::span<const BigInt> coeffs) {
    std::vector<std::uint64_t> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        c[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), p); // fdiv: nonnegative remainder
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = addmod(coeff(i), o.coeff(i), p_);
    FpPoly r(p_);
    r.c_ = std::move(c);
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<std::uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = submod(coeff(i), o.coeff(i), p_);
    FpPoly r(p_);
    r.c_ = std::move(c);
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<std::uint64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = addmod(c[i + j], mulmod(c_[i], o.c_[j], p_), p_);
    }
    FpPoly r(p_);
    r.c_ = std::move(c);
    r.trim();
    return r;
}

FpPoly FpPoly::scaled(std::uint64_t s) const {
    s %= p_;
    std::vector<std::uint64_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = mulmod(c_[i], s, p_);
    FpPoly r(p_);
    r.c_ = std::move(c);
    r.trim();
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(invmod_scalar(leading(), p_));
}

FpPoly FpPoly::derivative() const {
    if (c_.size() < 2) return FpPoly(p_);
    std::vector<std::uint64_t> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = mulmod(c_[i], i % p_, p_);
    FpPoly r(p_);
    r.c_ = std::move(c);
    r.trim();
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("FpPoly: division by zero");
    if (degree() < divisor.degree()) return {FpPoly(p_), *this};
    std::vector<std::uint64_t> rem = c_;
    const size_t dn = divisor.c_.size();
    std::vector<std::uint64_t> quo(c_.size() - dn + 1, 0);
    const std::uint64_t lead_inv = invmod_scalar(divisor.leading(), p_);
    for (size_t qi = quo.size(); qi-- > 0;) {
        std::uint64_t factor = mulmod(rem[qi + dn - 1], lead_inv, p_);
        quo[qi] = factor;
        if (factor != 0)
            for (size_t j = 0; j < dn; ++j)
                rem[qi + j] = submod(rem[qi + j], mulmod(factor, divisor.c_[j], p_), p_);
    }
    FpPoly q(p_), r(p_);
    q.c_ = std::move(quo);
    q.trim();
    r.c_ = std::move(rem);
    r.trim();
    return {q, r};
}

std::uint64_t FpPoly::evaluate(std::uint64_t x) const {
    x %= p_;
    std::uint64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;)
        acc = addmod(mulmod(acc, x, p_), c_[i], p_);
    return acc;
}

bool FpPoly::lex_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        std::uint64_t c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& m) {
    FpPoly result = FpPoly::constant(base.modulus(), 1);
    FpPoly b = base % m;
    if (e == 0) return result % m;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

std::pair<FpPoly, FpPoly> fp_gcdext_u(const FpPoly& a, const FpPoly& b) {
    const std::uint64_t p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly u0 = FpPoly::constant(p, 1), u1 = FpPoly(p);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        FpPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {r0, u0};
    std::uint64_t lead = r0.leading();
    std::uint64_t inv = invmod_scalar(lead, p);
    return {r0.scaled(inv), u0.scaled(inv)};
}

namespace {

// Squarefree decomposition (Yun over F_p, with p-th-root recursion for the
// part where the derivative vanishes).  Returns (squarefree factor,
// multiplicity) pairs; factors need not be irreducible yet.
void squarefree_parts(const FpPoly& f, unsigned multiplier,
                      std::vector<std::pair<FpPoly, unsigned>>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() <= 0) return;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); over F_p the p-th root just deflates exponents.
        std::vector<std::uint64_t> g;
        for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += p)
            g.push_back(f.coeff(i));
        squarefree_parts(FpPoly(p, std::move(g)), multiplier * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = fp_gcd(f, d);
    FpPoly w = f.divmod(c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = fp_gcd(w, c);
        FpPoly z = w.divmod(y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), multiplier * i);
        c = c.divmod(y).first;
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) squarefree_parts(c, multiplier, out);
}

// Split a squarefree product of degree-d irreducibles (Cantor-Zassenhaus).
void equal_degree_split(const FpPoly& f, long d, SplitMix64Stream& rng,
                        std::vector<FpPoly>& out) {
    const std::uint64_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const long n = f.degree();
    FpPoly splitter(p);
    while (true) {
        // random polynomial of degree < n
        std::vector<std::uint64_t> rc(static_cast<size_t>(n));
        for (auto& c : rc) c = scale_to_range(rng.next(), p);
        FpPoly h(p, std::move(rc));
        if (h.degree() < 1) continue;
        if (p == 2) {
            // trace map: h + h^2 + h^4 + ... + h^(2^(d-1))
            FpPoly t(p), hp = h;
            for (long i = 0; i < d; ++i) {
                t = (t + hp) % f;
                hp = (hp * hp) % f;
            }
            splitter = fp_gcd(t, f);
        } else {
            BigInt e = (pow_ui(BigInt(static_cast<unsigned long>(p)),
                               static_cast<unsigned long>(d)) - 1) / 2;
            FpPoly t = fp_powmod(h, e, f) - FpPoly::constant(p, 1);
            splitter = fp_gcd(t, f);
        }
        if (splitter.degree() > 0 && splitter.degree() < n) break;
    }
    equal_degree_split(splitter, d, rng, out);
    equal_degree_split(f.divmod(splitter).first, d, rng, out);
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> factor_poly_mod_p(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_poly_mod_p: zero polynomial");
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, unsigned>> result;
    if (f.degree() < 1) return result;

    std::vector<std::pair<FpPoly, unsigned>> sqfree;
    squarefree_parts(f.monic(), 1, sqfree);

    // Seed from (p, coefficients) so rebuilding the same field re-derives
    // identical factor order before the final sort.
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ p;
    for (std::uint64_t c : f.coeffs()) h = (h * 0x100000001b3ull) ^ c;
    SplitMix64Stream rng(h);

    for (auto& [part, mult] : sqfree) {
        // distinct-degree on the squarefree part
        FpPoly rest = part;
        FpPoly xq = FpPoly::x(p) % rest; // x^(p^i) mod rest, incrementally
        long d = 0;
        while (rest.degree() > 0) {
            ++d;
            if (rest.degree() < 2 * d) {
                // whatever is left is a single irreducible
                result.emplace_back(rest.monic(), mult);
                break;
            }
            xq = fp_powmod(xq, BigInt(static_cast<unsigned long>(p)), rest);
            FpPoly g = fp_gcd(xq - FpPoly::x(p), rest);
            if (g.degree() > 0) {
                std::vector<FpPoly> irred;
                equal_degree_split(g, d, rng, irred);
                for (auto& q : irred) result.emplace_back(std::move(q), mult);
                rest = rest.divmod(g).first;
                xq = xq % rest;
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return FpPoly::lex_less(a.first, b.first);
        return a.second < b.second;
    });
    return result;
}

} // namespace eisen
