#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "skewcert/subspace.hpp"

namespace skewcert {

/// Homogeneous element of the exterior algebra Lambda^d(F_p^n), n <= 64.
///
/// Coordinates are sparse: each strictly increasing d-tuple of axis indices is
/// packed into a 64-bit mask (bit i set <=> axis i participates), mapped to its
/// nonzero coefficient. The sign convention is fixed everywhere: the
/// coefficient of a wedge on the union mask carries the parity of the
/// permutation that sorts the concatenated index sequences, computed by
/// popcount. A grade larger than the ambient dimension is the zero vector.
class ExteriorVector {
public:
    using CoordMap = std::map<std::uint64_t, Scalar>;

    static ExteriorVector zero(PrimeField field, int ambient_dim, int grade);
    /// Grade-0 unit (the empty wedge).
    static ExteriorVector unit(PrimeField field, int ambient_dim);
    /// Grade-1 vector with the given coordinate row.
    static ExteriorVector from_vector(PrimeField field, const std::vector<Scalar>& coords);
    /// Build directly from a mask -> coefficient map (entries reduced, zeros dropped).
    static ExteriorVector from_coords(PrimeField field, int ambient_dim, int grade, CoordMap coords);

    int ambient_dim() const { return ambient_; }
    int grade() const { return grade_; }
    const PrimeField& field() const { return field_; }
    const CoordMap& coords() const { return coords_; }

    /// Coefficient at a mask (0 when absent).
    Scalar coeff(std::uint64_t mask) const;

    friend bool operator==(const ExteriorVector& a, const ExteriorVector& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.grade_ == b.grade_ &&
               a.coords_ == b.coords_;
    }
    friend bool operator!=(const ExteriorVector& a, const ExteriorVector& b) { return !(a == b); }

private:
    ExteriorVector(PrimeField field, int ambient_dim, int grade)
        : field_(field), ambient_(ambient_dim), grade_(grade) {}

    PrimeField field_;
    int ambient_;
    int grade_;
    CoordMap coords_;
};

/// Pluecker coordinates of a subspace: the coefficient at column set T is the
/// d x d minor of the basis matrix on columns T. Nonzero for every valid
/// Subspace; the zero-dimensional subspace gives the grade-0 unit.
ExteriorVector wedge_of_subspace(const Subspace& s);

/// Graded wedge product. Bilinear, associative, and graded-antisymmetric;
/// returns the zero vector of grade gx+gy when that exceeds the ambient.
ExteriorVector wedge(const ExteriorVector& x, const ExteriorVector& y);

bool is_zero(const ExteriorVector& x);

/// The single coordinate of a top-grade vector (grade == ambient dimension);
/// equals the determinant of the stacked rows for a wedge of n independent
/// vectors. Throws GradeMismatch otherwise.
Scalar top_scalar(const ExteriorVector& x);

/// Sum of two vectors of equal grade and ambient.
ExteriorVector add(const ExteriorVector& x, const ExteriorVector& y);

ExteriorVector scale(const ExteriorVector& x, Scalar c);

/// Parity sign of interleaving mask a before mask b (disjoint masks):
/// +1 or p-1 as a field scalar.
Scalar shuffle_sign(const PrimeField& field, std::uint64_t a, std::uint64_t b);

}  // namespace skewcert
