#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "skewcert/field.hpp"
#include "skewcert/rng.hpp"

namespace skewcert {

/// Dense row-major matrix over F_p. Entries are always reduced mod p.
class Matrix {
public:
    Matrix(PrimeField field, int rows, int cols);

    static Matrix identity(PrimeField field, int n);
    /// Each inner list is one row; signed entries are reduced mod p.
    static Matrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows);
    static Matrix random(PrimeField field, int rows, int cols, RandomStream& rng);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    Scalar at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    void swap_rows(int i, int j);
    void scale_row(int i, Scalar c);
    /// row_i -= c * row_j
    void add_scaled_row(int i, int j, Scalar c);

    /// this * other; throws DimensionMismatch on shape or modulus mismatch.
    Matrix multiplied(const Matrix& other) const;
    Matrix transposed() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form and rank. Deterministic and idempotent.
std::pair<Matrix, int> rref(Matrix m);

int rank(const Matrix& m);

/// Determinant of a square matrix, 0 when singular.
Scalar det(const Matrix& m);

/// Determinant of the square submatrix using all rows and the given columns.
Scalar minor_det(const Matrix& m, const std::vector<int>& cols);

/// Stack b below a (same field, same column count).
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace skewcert
