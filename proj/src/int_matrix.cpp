#include "eisen/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace eisen {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::append_row(std::span<const BigInt> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    e_.insert(e_.end(), v.begin(), v.end());
    ++rows_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ") << "[";
        for (size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
        os << "]" << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

IntMatrix hnf(const IntMatrix& m) {
    IntMatrix w = m;
    const size_t rows = w.rows(), cols = w.cols();
    size_t pivot_row = 0;
    std::vector<size_t> pivot_col_of_row;

    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // clear the column below pivot_row with extended-gcd row combinations
        for (size_t r = pivot_row + 1; r < rows; ++r) {
            if (w.at(r, col) == 0) continue;
            BigInt a = w.at(pivot_row, col), b = w.at(r, col), g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                       a.get_mpz_t(), b.get_mpz_t());
            BigInt a_g = a / g, b_g = b / g;
            for (size_t c = 0; c < cols; ++c) {
                BigInt top = w.at(pivot_row, c), bot = w.at(r, c);
                w.at(pivot_row, c) = u * top + v * bot;
                w.at(r, c) = a_g * bot - b_g * top;
            }
        }
        if (w.at(pivot_row, col) == 0) continue; // no pivot in this column
        if (w.at(pivot_row, col) < 0)
            for (size_t c = 0; c < cols; ++c) w.at(pivot_row, c) = -w.at(pivot_row, c);
        pivot_col_of_row.push_back(col);
        ++pivot_row;
    }

    // Reduce entries above each pivot into [0, pivot).  Ascending pivot
    // order keeps earlier columns reduced: row i is zero left of its pivot.
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
        const size_t col = pivot_col_of_row[i];
        const BigInt& pivot = w.at(i, col);
        for (size_t r = 0; r < i; ++r) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(r, col).get_mpz_t(), pivot.get_mpz_t());
            if (q == 0) continue;
            for (size_t c = 0; c < cols; ++c) w.at(r, c) -= q * w.at(i, c);
        }
    }

    IntMatrix out(0, cols);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) out.append_row(w.row(r));
    return out;
}

bool solve_in_lattice(const IntMatrix& basis, std::span<const BigInt> v) {
    const size_t n = basis.rows();
    if (basis.cols() != n || v.size() != n)
        throw std::invalid_argument("solve_in_lattice: need a square basis matching v");
    std::vector<BigInt> rem(v.begin(), v.end());
    for (size_t i = 0; i < n; ++i) {
        const BigInt& pivot = basis.at(i, i);
        if (pivot == 0) throw std::invalid_argument("solve_in_lattice: zero diagonal");
        if (!mpz_divisible_p(rem[i].get_mpz_t(), pivot.get_mpz_t())) return false;
        BigInt c = rem[i] / pivot;
        if (c == 0) continue;
        for (size_t j = i; j < n; ++j) rem[j] -= c * basis.at(i, j);
    }
    return true;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && w.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (size_t c = 0; c < n; ++c)
                mpz_swap(w.at(k, c).get_mpz_t(), w.at(swap_row, c).get_mpz_t());
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

} // namespace eisen
