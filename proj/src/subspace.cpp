#include "skewcert/subspace.hpp"

#include <stdexcept>
#include <string>

#include "skewcert/errors.hpp"

namespace skewcert {

Subspace Subspace::zero(PrimeField field, int ambient_dim) {
    return Subspace(ambient_dim, Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(PrimeField field, int ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(field, ambient_dim));
}

Subspace subspace_from_rows(const Matrix& rows, int ambient_dim) {
    if (rows.cols() != ambient_dim)
        throw DimensionMismatch("row length " + std::to_string(rows.cols()) +
                                " does not match ambient dimension " + std::to_string(ambient_dim));
    auto [red, rk] = rref(rows);
    Matrix basis(rows.field(), rk, ambient_dim);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < ambient_dim; ++j) basis.at(i, j) = red.at(i, j);
    return Subspace(ambient_dim, std::move(basis));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw DimensionMismatch("subspace sum across different ambient spaces");
    return subspace_from_rows(vstack(a.basis(), b.basis()), a.ambient_dim());
}

int intersection_dim(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw DimensionMismatch("intersection across different ambient spaces");
    const int sum_dim = rank(vstack(a.basis(), b.basis()));
    return a.dim() + b.dim() - sum_dim;
}

bool contains(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw DimensionMismatch("containment across different ambient spaces");
    return rank(vstack(a.basis(), b.basis())) == a.dim();
}

Subspace intersection_basis(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw DimensionMismatch("intersection across different ambient spaces");
    const int n = a.ambient_dim();
    // Zassenhaus: row-reduce [A | A; B | 0]; rows whose left half vanished
    // have right halves spanning the meet.
    Matrix block(a.field(), a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);

    auto [red, rk] = rref(std::move(block));
    Matrix meet_rows(a.field(), 0, n);
    std::vector<std::vector<long long>> collected;
    for (int i = 0; i < rk; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) left_zero = red.at(i, j) == 0;
        if (!left_zero) continue;
        std::vector<long long> row(n);
        for (int j = 0; j < n; ++j) row[j] = static_cast<long long>(red.at(i, n + j));
        collected.push_back(std::move(row));
    }
    Subspace meet = collected.empty()
                        ? Subspace::zero(a.field(), n)
                        : subspace_from_rows(Matrix::from_rows(a.field(), collected), n);

    // Cross-check against the independent sum-dimension route.
    if (meet.dim() != intersection_dim(a, b) || !contains(a, meet) || !contains(b, meet))
        throw std::logic_error("intersection_basis failed its dimension/containment cross-check");
    return meet;
}

Subspace apply_map(const Matrix& map, const Subspace& s) {
    if (map.cols() != s.ambient_dim())
        throw DimensionMismatch("map domain does not match subspace ambient");
    return subspace_from_rows(s.basis().multiplied(map.transposed()), map.rows());
}

Subspace embed(const Subspace& s, int new_ambient_dim) { return embed_at(s, new_ambient_dim, 0); }

Subspace embed_at(const Subspace& s, int new_ambient_dim, int offset) {
    if (offset < 0 || offset + s.ambient_dim() > new_ambient_dim)
        throw DimensionMismatch("embedding window outside new ambient space");
    Matrix rows(s.field(), s.dim(), new_ambient_dim);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.ambient_dim(); ++j) rows.at(i, offset + j) = s.basis().at(i, j);
    return subspace_from_rows(rows, new_ambient_dim);
}

Subspace random_subspace(PrimeField field, int ambient_dim, int dim, RandomStream& rng,
                         int retry_budget) {
    if (dim < 0 || dim > ambient_dim)
        throw DimensionMismatch("requested dimension exceeds ambient");
    if (dim == 0) return Subspace::zero(field, ambient_dim);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Subspace s = subspace_from_rows(Matrix::random(field, dim, ambient_dim, rng), ambient_dim);
        if (s.dim() == dim) return s;
    }
    throw SamplingExhausted("random_subspace: no full-rank draw within retry budget (p too small?)",
                            "rank of random basis draw");
}

}  // namespace skewcert
