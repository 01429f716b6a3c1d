#include "eisen/bigint.hpp"

#include <stdexcept>
#include <utility>

namespace eisen {

BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q;
    mpz_swap(q.get_num_mpz_t(), num.get_mpz_t());
    mpz_swap(q.get_den_mpz_t(), den.get_mpz_t());
    q.canonicalize();
    return q;
}

BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string decimal_string(const BigRat& q, int digits, Rounding mode) {
    if (digits < 0) digits = 0;
    const bool negative = sgn(q) < 0;
    BigInt num = abs(q.get_num());
    const BigInt& den = q.get_den();

    BigInt scale = pow_ui(BigInt(10), static_cast<unsigned long>(digits));
    num *= scale;
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    bool bump = false;
    if (rem != 0) {
        switch (mode) {
            case Rounding::Down: bump = negative; break;
            case Rounding::Up: bump = !negative; break;
            case Rounding::Nearest: bump = 2 * rem >= den; break;
        }
    }
    if (bump) quot += 1;

    std::string body = quot.get_str();
    if (digits > 0) {
        if (static_cast<int>(body.size()) <= digits)
            body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<size_t>(digits), ".");
    }
    if (negative && quot != 0) body.insert(0, "-");
    return body;
}

} // namespace eisen
