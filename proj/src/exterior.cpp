#include "skewcert/exterior.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "skewcert/errors.hpp"

namespace skewcert {

namespace {

void require_packable(int ambient_dim) {
    if (ambient_dim < 0 || ambient_dim > 64)
        throw DimensionMismatch("exterior ambient dimension must be in [0, 64], got " +
                                std::to_string(ambient_dim));
}

/// All size-d subsets of `pool`, visited in lexicographic order.
template <typename F>
void for_each_combination(const std::vector<int>& pool, int d, F&& visit) {
    const int n = static_cast<int>(pool.size());
    if (d > n) return;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Scalar shuffle_sign(const PrimeField& field, std::uint64_t a, std::uint64_t b) {
    // Inversions between the sorted sequences of a and b: for each index t in
    // b, count the indices of a strictly above t.
    int inversions = 0;
    std::uint64_t rest = b;
    while (rest != 0) {
        const int t = std::countr_zero(rest);
        rest &= rest - 1;
        if (t < 63) inversions += std::popcount(a >> (t + 1));
    }
    return (inversions & 1) ? field.neg(1) : 1;
}

ExteriorVector ExteriorVector::zero(PrimeField field, int ambient_dim, int grade) {
    require_packable(ambient_dim);
    return ExteriorVector(field, ambient_dim, grade);
}

ExteriorVector ExteriorVector::unit(PrimeField field, int ambient_dim) {
    require_packable(ambient_dim);
    ExteriorVector v(field, ambient_dim, 0);
    v.coords_[0] = 1;
    return v;
}

ExteriorVector ExteriorVector::from_vector(PrimeField field, const std::vector<Scalar>& coords) {
    require_packable(static_cast<int>(coords.size()));
    ExteriorVector v(field, static_cast<int>(coords.size()), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Scalar c = coords[i] % field.p();
        if (c != 0) v.coords_[1ull << i] = c;
    }
    return v;
}

ExteriorVector ExteriorVector::from_coords(PrimeField field, int ambient_dim, int grade,
                                           CoordMap coords) {
    require_packable(ambient_dim);
    ExteriorVector v(field, ambient_dim, grade);
    for (auto& [mask, c] : coords) {
        if (std::popcount(mask) != grade)
            throw GradeMismatch("coordinate mask popcount does not match grade");
        if (ambient_dim < 64 && (mask >> ambient_dim) != 0)
            throw DimensionMismatch("coordinate mask escapes the ambient space");
        const Scalar r = c % field.p();
        if (r != 0) v.coords_[mask] = r;
    }
    return v;
}

Scalar ExteriorVector::coeff(std::uint64_t mask) const {
    const auto it = coords_.find(mask);
    return it == coords_.end() ? 0 : it->second;
}

ExteriorVector wedge_of_subspace(const Subspace& s) {
    require_packable(s.ambient_dim());
    const int d = s.dim();
    if (d == 0) return ExteriorVector::unit(s.field(), s.ambient_dim());

    // Minors over columns outside the basis support vanish; enumerate only
    // supported columns.
    std::vector<int> support;
    for (int c = 0; c < s.ambient_dim(); ++c) {
        bool nonzero = false;
        for (int r = 0; r < d && !nonzero; ++r) nonzero = s.basis().at(r, c) != 0;
        if (nonzero) support.push_back(c);
    }

    ExteriorVector::CoordMap coords;
    for_each_combination(support, d, [&](const std::vector<int>& idx) {
        std::vector<int> cols(idx.size());
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            cols[i] = support[idx[i]];
            mask |= 1ull << cols[i];
        }
        const Scalar m = minor_det(s.basis(), cols);
        if (m != 0) coords[mask] = m;
    });
    return ExteriorVector::from_coords(s.field(), s.ambient_dim(), d, std::move(coords));
}

ExteriorVector wedge(const ExteriorVector& x, const ExteriorVector& y) {
    if (x.ambient_dim() != y.ambient_dim() || x.field() != y.field())
        throw DimensionMismatch("wedge of vectors from different spaces");
    const PrimeField& f = x.field();
    ExteriorVector::CoordMap coords;
    for (const auto& [ma, ca] : x.coords()) {
        for (const auto& [mb, cb] : y.coords()) {
            if ((ma & mb) != 0) continue;
            const Scalar term = f.mul(f.mul(ca, cb), shuffle_sign(f, ma, mb));
            const std::uint64_t mask = ma | mb;
            auto [it, fresh] = coords.emplace(mask, term);
            if (!fresh) {
                it->second = f.add(it->second, term);
                if (it->second == 0) coords.erase(it);
            }
        }
    }
    return ExteriorVector::from_coords(f, x.ambient_dim(), x.grade() + y.grade(), std::move(coords));
}

bool is_zero(const ExteriorVector& x) { return x.coords().empty(); }

Scalar top_scalar(const ExteriorVector& x) {
    if (x.grade() != x.ambient_dim())
        throw GradeMismatch("top_scalar requires grade == ambient dimension (grade " +
                            std::to_string(x.grade()) + ", ambient " +
                            std::to_string(x.ambient_dim()) + ")");
    const std::uint64_t full =
        x.ambient_dim() == 64 ? ~0ull : (1ull << x.ambient_dim()) - 1;
    return x.coeff(full);
}

ExteriorVector add(const ExteriorVector& x, const ExteriorVector& y) {
    if (x.ambient_dim() != y.ambient_dim() || x.field() != y.field())
        throw DimensionMismatch("sum of vectors from different spaces");
    if (x.grade() != y.grade()) throw GradeMismatch("sum of vectors of different grades");
    ExteriorVector::CoordMap coords = x.coords();
    const PrimeField& f = x.field();
    for (const auto& [mask, c] : y.coords()) {
        auto [it, fresh] = coords.emplace(mask, c);
        if (!fresh) {
            it->second = f.add(it->second, c);
            if (it->second == 0) coords.erase(it);
        }
    }
    return ExteriorVector::from_coords(f, x.ambient_dim(), x.grade(), std::move(coords));
}

ExteriorVector scale(const ExteriorVector& x, Scalar c) {
    ExteriorVector::CoordMap coords;
    const PrimeField& f = x.field();
    for (const auto& [mask, v] : x.coords()) {
        const Scalar t = f.mul(v, c);
        if (t != 0) coords[mask] = t;
    }
    return ExteriorVector::from_coords(f, x.ambient_dim(), x.grade(), std::move(coords));
}

}  // namespace skewcert
