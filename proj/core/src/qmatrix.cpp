#include "fourstate/qmatrix.hpp"

namespace fourstate {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

QMatrix::QMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw DimensionMismatch("entry count does not match rows*cols");
}

QMatrix QMatrix::identity(int n) {
    QMatrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) throw DimensionMismatch("no columns");
    int m = static_cast<int>(cols[0].size());
    QMatrix A(m, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != m) throw DimensionMismatch("ragged columns");
        for (int i = 0; i < m; ++i) A(i, static_cast<int>(j)) = cols[j][i];
    }
    return A;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape");
    QMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (fourstate::is_zero(a)) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shape");
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

bool QMatrix::operator==(const QMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool QMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!fourstate::is_zero(e)) return false;
    return true;
}

QMatrix solve_linear(const QMatrix& M, const QMatrix& rhs) {
    if (M.rows() != M.cols()) throw NonSquare();
    if (rhs.rows() != M.rows()) throw DimensionMismatch("rhs row count");
    const int n = M.rows();
    const int k = rhs.cols();

    // Augmented Gauss-Jordan; first nonzero pivot in column order.
    QMatrix A(n, n + k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) A(i, j) = M(i, j);
        for (int j = 0; j < k; ++j) A(i, n + j) = rhs(i, j);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!is_zero(A(i, col))) { piv = i; break; }
        if (piv < 0) throw SingularMatrix();
        if (piv != col)
            for (int j = 0; j < n + k; ++j) std::swap(A(piv, j), A(col, j));
        Rational inv = 1 / A(col, col);
        for (int j = col; j < n + k; ++j) A(col, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || is_zero(A(i, col))) continue;
            Rational f = A(i, col);
            for (int j = col; j < n + k; ++j) A(i, j) -= f * A(col, j);
        }
    }
    QMatrix X(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) X(i, j) = A(i, n + j);
    return X;
}

Rational determinant(const QMatrix& M) {
    if (M.rows() != M.cols()) throw NonSquare();
    const int n = M.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row, then run integer Bareiss elimination.
    std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n));
    BigInt scale_product(1);
    for (int i = 0; i < n; ++i) {
        BigInt l(1);
        for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).get_den().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rational s = M(i, j) * Rational(l);
            A[i][j] = s.get_num(); // denominator is 1 after scaling
        }
        scale_product *= l;
    }

    int sign = 1;
    BigInt prev(1);
    for (int col = 0; col < n - 1; ++col) {
        if (sgn(A[col][col]) == 0) {
            int piv = -1;
            for (int i = col + 1; i < n; ++i)
                if (sgn(A[i][col]) != 0) { piv = i; break; }
            if (piv < 0) return Rational(0);
            std::swap(A[col], A[piv]);
            sign = -sign;
        }
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                BigInt t = A[col][col] * A[i][j] - A[i][col] * A[col][j];
                mpz_divexact(A[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            A[i][col] = 0;
        }
        prev = A[col][col];
    }
    Rational det(A[n - 1][n - 1], scale_product);
    det.canonicalize();
    if (sign < 0) det = -det;
    return det;
}

int rank(const QMatrix& M) {
    QMatrix A = M;
    const int n = A.rows();
    const int m = A.cols();
    int r = 0;
    for (int col = 0; col < m && r < n; ++col) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (!is_zero(A(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m; ++j) std::swap(A(piv, j), A(r, j));
        for (int i = r + 1; i < n; ++i) {
            if (is_zero(A(i, col))) continue;
            Rational f = A(i, col) / A(r, col);
            for (int j = col; j < m; ++j) A(i, j) -= f * A(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace fourstate
