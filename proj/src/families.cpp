#include "skewcert/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "skewcert/errors.hpp"

namespace skewcert {

namespace {

void validate_shape(const std::vector<int>& ell, std::size_t row_width) {
    if (ell.size() < 2)
        throw std::invalid_argument("a family needs k >= 2 columns");
    for (int l : ell)
        if (l < 0) throw std::invalid_argument("negative ell entry");
    if (row_width != ell.size())
        throw std::invalid_argument("row width does not match k");
}

int cell_size(const SetGrid& g, int i, int j) { return static_cast<int>(g.cell(i, j).size()); }
int cell_size(const SubspaceGrid& g, int i, int j) { return g.cell(i, j).dim(); }

int meet(const SetGrid& g, int i, int j, int i2, int j2) {
    return set_meet_size(g.cell(i, j), g.cell(i2, j2));
}
int meet(const SubspaceGrid& g, int i, int j, int i2, int j2) {
    return intersection_dim(g.cell(i, j), g.cell(i2, j2));
}

template <typename Grid>
ConditionReport dim_bounds_impl(const Grid& g) {
    ConditionReport rep;
    rep.condition = "dim-bounds";
    for (int i = 0; i < g.m(); ++i)
        for (int j = 0; j < g.k(); ++j)
            if (cell_size(g, i, j) > g.ell()[j]) rep.violations.push_back({i + 1, j + 1});
    rep.holds = rep.violations.empty();
    return rep;
}

template <typename Grid>
ConditionReport row_meets_at_most_impl(const Grid& g, int t, std::string id) {
    ConditionReport rep;
    rep.condition = std::move(id);
    for (int i = 0; i < g.m(); ++i)
        for (int j = 0; j < g.k(); ++j)
            for (int j2 = j + 1; j2 < g.k(); ++j2)
                if (meet(g, i, j, i, j2) > t) rep.violations.push_back({i + 1, j + 1, j2 + 1});
    rep.holds = rep.violations.empty();
    return rep;
}

template <typename Grid>
ConditionReport skew_cross_impl(const Grid& g, int t, std::string id) {
    ConditionReport rep;
    rep.condition = std::move(id);
    for (int i = 0; i < g.m(); ++i) {
        for (int i2 = i + 1; i2 < g.m(); ++i2) {
            bool found = false;
            for (int j = 0; j < g.k() && !found; ++j)
                for (int j2 = j + 1; j2 < g.k() && !found; ++j2)
                    if (meet(g, i, j, i2, j2) > t) {
                        rep.skew_witnesses.push_back({i + 1, i2 + 1, j + 1, j2 + 1});
                        found = true;
                    }
            if (!found) rep.violations.push_back({i + 1, i2 + 1});
        }
    }
    rep.holds = rep.violations.empty();
    return rep;
}

}  // namespace

int set_meet_size(const SetCell& a, const SetCell& b) {
    // Cells are sorted.
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

SetGrid::SetGrid(std::vector<int> ell, int ground_size, std::vector<std::vector<SetCell>> rows)
    : ell_(std::move(ell)), ground_(ground_size), rows_(std::move(rows)) {
    if (ground_ < 0) throw std::invalid_argument("negative ground size");
    for (auto& row : rows_) {
        validate_shape(ell_, row.size());
        for (auto& cell : row) {
            std::sort(cell.begin(), cell.end());
            if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
                throw std::invalid_argument("set cell has repeated elements");
            for (int x : cell)
                if (x < 1 || x > ground_)
                    throw std::invalid_argument("set element " + std::to_string(x) +
                                                " outside [1, " + std::to_string(ground_) + "]");
        }
    }
    if (rows_.empty()) validate_shape(ell_, ell_.size());
}

SubspaceGrid::SubspaceGrid(std::vector<int> ell, PrimeField field, int ambient_dim,
                           std::vector<std::vector<Subspace>> rows)
    : ell_(std::move(ell)), field_(field), ambient_(ambient_dim), rows_(std::move(rows)) {
    if (ambient_ < 0) throw std::invalid_argument("negative ambient dimension");
    for (auto& row : rows_) {
        validate_shape(ell_, row.size());
        for (auto& cell : row) {
            if (cell.ambient_dim() != ambient_ || cell.field() != field_)
                throw DimensionMismatch("grid cell lives in the wrong space");
        }
    }
    if (rows_.empty()) validate_shape(ell_, ell_.size());
}

ConditionReport check_dim_bounds(const SetGrid& g) { return dim_bounds_impl(g); }
ConditionReport check_dim_bounds(const SubspaceGrid& g) { return dim_bounds_impl(g); }

ConditionReport check_pairwise_disjoint(const SetGrid& g) {
    return row_meets_at_most_impl(g, 0, "pairwise-disjoint");
}
ConditionReport check_pairwise_disjoint(const SubspaceGrid& g) {
    return row_meets_at_most_impl(g, 0, "pairwise-disjoint");
}

ConditionReport check_direct_sum(const SubspaceGrid& g) {
    ConditionReport rep;
    rep.condition = "direct-sum";
    for (int i = 0; i < g.m(); ++i) {
        Subspace sum = Subspace::zero(g.field(), g.ambient_dim());
        int total = 0;
        for (int j = 0; j < g.k(); ++j) {
            sum = subspace_sum(sum, g.cell(i, j));
            total += g.cell(i, j).dim();
        }
        if (sum.dim() != total) rep.violations.push_back({i + 1});
    }
    rep.holds = rep.violations.empty();
    return rep;
}

ConditionReport check_skew_cross(const SetGrid& g) { return skew_cross_impl(g, 0, "skew-cross"); }
ConditionReport check_skew_cross(const SubspaceGrid& g) {
    return skew_cross_impl(g, 0, "skew-cross");
}

void validate_threshold(const std::vector<int>& ell, int t) {
    if (t < 0) throw InvalidThreshold("threshold t must be nonnegative");
    for (int l : ell)
        if (l < t)
            throw InvalidThreshold("threshold t = " + std::to_string(t) +
                                   " exceeds some ell_r = " + std::to_string(l));
}

ConditionReport check_threshold_row(const SetGrid& g, int t) {
    validate_threshold(g.ell(), t);
    return row_meets_at_most_impl(g, t, "threshold-row");
}
ConditionReport check_threshold_row(const SubspaceGrid& g, int t) {
    validate_threshold(g.ell(), t);
    return row_meets_at_most_impl(g, t, "threshold-row");
}

ConditionReport check_threshold_skew(const SetGrid& g, int t) {
    validate_threshold(g.ell(), t);
    return skew_cross_impl(g, t, "threshold-skew");
}
ConditionReport check_threshold_skew(const SubspaceGrid& g, int t) {
    validate_threshold(g.ell(), t);
    return skew_cross_impl(g, t, "threshold-skew");
}

SubspaceGrid lift_sets(const SetGrid& g, PrimeField field) {
    std::vector<std::vector<Subspace>> rows;
    rows.reserve(g.m());
    for (int i = 0; i < g.m(); ++i) {
        std::vector<Subspace> row;
        row.reserve(g.k());
        for (int j = 0; j < g.k(); ++j) {
            const SetCell& cell = g.cell(i, j);
            Matrix basis(field, static_cast<int>(cell.size()), g.ground_size());
            for (std::size_t r = 0; r < cell.size(); ++r) basis.at(static_cast<int>(r), cell[r] - 1) = 1;
            row.push_back(subspace_from_rows(basis, g.ground_size()));
        }
        rows.push_back(std::move(row));
    }
    return SubspaceGrid(g.ell(), field, g.ground_size(), std::move(rows));
}

}  // namespace skewcert
