#include "skewcert/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewcert/errors.hpp"

namespace skewcert {

Matrix::Matrix(PrimeField field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    a_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

Matrix Matrix::identity(PrimeField field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(field, v);
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix m(field, nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc)
            throw std::invalid_argument("ragged row list");
        for (int j = 0; j < nc; ++j) m.at(i, j) = field.from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::random(PrimeField field, int rows, int cols, RandomStream& rng) {
    Matrix m(field, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = field.random(rng);
    return m;
}

void Matrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void Matrix::scale_row(int i, Scalar c) {
    for (int k = 0; k < cols_; ++k) at(i, k) = field_.mul(at(i, k), c);
}

void Matrix::add_scaled_row(int i, int j, Scalar c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k) at(i, k) = field_.sub(at(i, k), field_.mul(c, at(j, k)));
}

Matrix Matrix::multiplied(const Matrix& other) const {
    if (field_ != other.field_) throw DimensionMismatch("matrix product over different fields");
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, other.at(k, j)));
        }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::pair<Matrix, int> rref(Matrix m) {
    const PrimeField f = m.field();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        m.swap_rows(r, pivot);
        m.scale_row(r, f.inv(m.at(r, c)));
        for (int i = 0; i < m.rows(); ++i)
            if (i != r) m.add_scaled_row(i, r, m.at(i, c));
        ++r;
    }
    return {std::move(m), r};
}

int rank(const Matrix& m) { return rref(m).second; }

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const PrimeField f = m.field();
    Matrix a = m;
    Scalar d = 1;
    for (int c = 0; c < a.cols(); ++c) {
        int pivot = -1;
        for (int i = c; i < a.rows(); ++i)
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            a.swap_rows(c, pivot);
            d = f.neg(d);
        }
        d = f.mul(d, a.at(c, c));
        const Scalar inv = f.inv(a.at(c, c));
        for (int i = c + 1; i < a.rows(); ++i)
            a.add_scaled_row(i, c, f.mul(a.at(i, c), inv));
    }
    return d;
}

Scalar minor_det(const Matrix& m, const std::vector<int>& cols) {
    const int d = static_cast<int>(cols.size());
    if (m.rows() != d) throw DimensionMismatch("minor is not square");
    Matrix sub(m.field(), d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) sub.at(i, j) = m.at(i, cols[j]);
    return det(sub);
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw DimensionMismatch("vstack over different fields");
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

}  // namespace skewcert
