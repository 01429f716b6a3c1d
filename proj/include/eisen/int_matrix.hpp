#ifndef EISEN_INT_MATRIX_HPP
#define EISEN_INT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eisen/bigint.hpp"

namespace eisen {

/// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BigInt& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const BigInt& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    std::span<const BigInt> row(size_t r) const { return {&e_[r * cols_], cols_}; }

    void append_row(std::span<const BigInt> v);

    bool operator==(const IntMatrix& o) const = default;
    std::string to_string() const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> e_;
};

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// row echelon, pivots positive, entries above each pivot reduced into
/// [0, pivot).  Zero rows are dropped, so the result has rank(m) rows.
/// The integer row span is preserved.
IntMatrix hnf(const IntMatrix& m);

/// Membership of v in the row lattice of a square upper-triangular basis
/// with positive diagonal (back-substitution with exact divisibility).
bool solve_in_lattice(const IntMatrix& basis, std::span<const BigInt> v);

/// Determinant by fraction-free (Bareiss) elimination; m must be square.
BigInt determinant(const IntMatrix& m);

} // namespace eisen

#endif
