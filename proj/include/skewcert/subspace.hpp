#pragma once

#include "skewcert/matrix.hpp"

namespace skewcert {

/// Linear subspace of F_p^n, stored as its reduced-row-echelon basis with no
/// zero rows. RREF is the canonical form: two Subspace values compare equal
/// exactly when they are the same subspace of the same ambient space.
class Subspace {
public:
    static Subspace zero(PrimeField field, int ambient_dim);
    static Subspace full(PrimeField field, int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const PrimeField& field() const { return basis_.field(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace subspace_from_rows(const Matrix& rows, int ambient_dim);

private:
    Subspace(int ambient_dim, Matrix basis) : ambient_(ambient_dim), basis_(std::move(basis)) {}

    int ambient_;
    Matrix basis_;  // RREF, rank == rows
};

/// Canonical subspace spanned by the rows of `rows` (zero rows dropped).
/// Throws DimensionMismatch when rows.cols() != ambient_dim.
Subspace subspace_from_rows(const Matrix& rows, int ambient_dim);

/// Span of the union of the two bases.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// dim a + dim b - dim(a+b). Zero iff the subspaces are disjoint (meet {0}).
int intersection_dim(const Subspace& a, const Subspace& b);

/// Canonical basis of the meet, via the Zassenhaus block construction. The
/// result is cross-checked against the dimension identity and verified
/// contained in both inputs; each route is the other's oracle.
Subspace intersection_basis(const Subspace& a, const Subspace& b);

/// b subseteq a?
bool contains(const Subspace& a, const Subspace& b);

/// Image of s under the linear map given by matrix map (rows = codomain dim,
/// cols = s.ambient_dim()).
Subspace apply_map(const Matrix& map, const Subspace& s);

/// Same subspace inside a larger ambient space (new trailing coordinates 0).
Subspace embed(const Subspace& s, int new_ambient_dim);

/// Same subspace with all coordinates shifted up by `offset` inside an
/// ambient of dimension new_ambient_dim.
Subspace embed_at(const Subspace& s, int new_ambient_dim, int offset);

/// Uniformly seeded subspace of exactly the requested dimension. Draws are
/// re-sampled while rank-deficient; throws SamplingExhausted after
/// retry_budget failed draws (only plausible for tiny p).
Subspace random_subspace(PrimeField field, int ambient_dim, int dim, RandomStream& rng,
                         int retry_budget = 32);

}  // namespace skewcert
