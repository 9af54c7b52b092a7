#pragma once

#include <vector>

#include "fourstate/rational.hpp"

namespace fourstate {

// Dense matrix over the rationals. All matrices in this pipeline are small
// (at most 36x36), so there is no sparse path.
class QMatrix {
public:
    QMatrix(int rows, int cols);
    QMatrix(int rows, int cols, std::vector<Rational> entries);

    static QMatrix identity(int n);
    static QMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    bool operator==(const QMatrix& rhs) const;

    bool is_zero() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

// Exact solve of M X = rhs by Gauss-Jordan elimination.
// Throws NonSquare / DimensionMismatch / SingularMatrix.
QMatrix solve_linear(const QMatrix& M, const QMatrix& rhs);

// Exact determinant by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. Throws NonSquare.
Rational determinant(const QMatrix& M);

// Exact rank over Q.
int rank(const QMatrix& M);

} // namespace fourstate
