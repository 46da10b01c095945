#pragma once

#include <array>
#include <string>
#include <vector>

#include "skewcert/subspace.hpp"

namespace skewcert {

/// One set cell: sorted, duplicate-free elements of [1..ground_size].
using SetCell = std::vector<int>;

/// m x k grid of finite sets with per-column size targets ell_1..ell_k.
/// Rows are ordered; the cross conditions below are order-sensitive.
class SetGrid {
public:
    SetGrid(std::vector<int> ell, int ground_size, std::vector<std::vector<SetCell>> rows);

    int m() const { return static_cast<int>(rows_.size()); }
    int k() const { return static_cast<int>(ell_.size()); }
    const std::vector<int>& ell() const { return ell_; }
    int ground_size() const { return ground_; }
    const SetCell& cell(int i, int j) const { return rows_[i][j]; }
    const std::vector<std::vector<SetCell>>& rows() const { return rows_; }

    friend bool operator==(const SetGrid& a, const SetGrid& b) {
        return a.ell_ == b.ell_ && a.ground_ == b.ground_ && a.rows_ == b.rows_;
    }

private:
    std::vector<int> ell_;
    int ground_;
    std::vector<std::vector<SetCell>> rows_;
};

/// m x k grid of subspaces of a common F_p^ambient.
class SubspaceGrid {
public:
    SubspaceGrid(std::vector<int> ell, PrimeField field, int ambient_dim,
                 std::vector<std::vector<Subspace>> rows);

    int m() const { return static_cast<int>(rows_.size()); }
    int k() const { return static_cast<int>(ell_.size()); }
    const std::vector<int>& ell() const { return ell_; }
    int ambient_dim() const { return ambient_; }
    const PrimeField& field() const { return field_; }
    const Subspace& cell(int i, int j) const { return rows_[i][j]; }
    const std::vector<std::vector<Subspace>>& rows() const { return rows_; }

    friend bool operator==(const SubspaceGrid& a, const SubspaceGrid& b) {
        return a.ell_ == b.ell_ && a.ambient_ == b.ambient_ && a.field_ == b.field_ &&
               a.rows_ == b.rows_;
    }

private:
    std::vector<int> ell_;
    PrimeField field_;
    int ambient_;
    std::vector<std::vector<Subspace>> rows_;
};

/// Outcome of one condition check. All indices are 1-based, matching the
/// display convention of the theorem statements. For the existential cross
/// checks, skew_witnesses records the first (j, j') found per ordered row
/// pair (i, i'); violations lists the row pairs with no such columns.
struct ConditionReport {
    std::string condition;
    bool holds = true;
    std::vector<std::vector<int>> violations;
    std::vector<std::array<int, 4>> skew_witnesses;
};

/// Condition (i): every cell no larger than its column target.
ConditionReport check_dim_bounds(const SetGrid& g);
ConditionReport check_dim_bounds(const SubspaceGrid& g);

/// Condition (ii), weak form: within each row, cells pairwise disjoint
/// (empty intersection / meet {0}).
ConditionReport check_pairwise_disjoint(const SetGrid& g);
ConditionReport check_pairwise_disjoint(const SubspaceGrid& g);

/// Condition (ii), strengthened form: each row's sum has dimension equal to
/// the sum of its cell dimensions. Implies pairwise disjointness.
ConditionReport check_direct_sum(const SubspaceGrid& g);

/// Condition (iii): for every i < i' some j < j' has a nontrivial meet.
ConditionReport check_skew_cross(const SetGrid& g);
ConditionReport check_skew_cross(const SubspaceGrid& g);

/// Threshold variants: within-row meets at most t / cross meets above t.
/// Throw InvalidThreshold unless 0 <= t <= min(ell).
ConditionReport check_threshold_row(const SetGrid& g, int t);
ConditionReport check_threshold_row(const SubspaceGrid& g, int t);
ConditionReport check_threshold_skew(const SetGrid& g, int t);
ConditionReport check_threshold_skew(const SubspaceGrid& g, int t);

/// Coordinate lift: each set A becomes span{e_x : x in A} in F_p^ground.
/// Preserves sizes as dimensions and set intersections as meets, so every
/// checker reports identically before and after.
SubspaceGrid lift_sets(const SetGrid& g, PrimeField field);

void validate_threshold(const std::vector<int>& ell, int t);

/// |a intersect b| for sorted cells.
int set_meet_size(const SetCell& a, const SetCell& b);

}  // namespace skewcert
