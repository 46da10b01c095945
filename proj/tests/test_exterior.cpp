#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "skewcert/errors.hpp"
#include "skewcert/exterior.hpp"
#include "test_util.hpp"

using namespace skewcert;

namespace {

Subspace span(const PrimeField& f, std::initializer_list<std::initializer_list<long long>> rows,
              int ambient) {
    return subspace_from_rows(Matrix::from_rows(f, rows), ambient);
}

ExteriorVector basis_vector(const PrimeField& f, int n, int axis) {
    std::vector<Scalar> coords(n, 0);
    coords[axis] = 1;
    return ExteriorVector::from_vector(f, coords);
}

/// Wedge of a matrix's rows taken one by one, in order.
ExteriorVector wedge_rows(const Matrix& m) {
    ExteriorVector acc = ExteriorVector::unit(m.field(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<Scalar> row(m.cols());
        for (int c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
        acc = wedge(acc, ExteriorVector::from_vector(m.field(), row));
    }
    return acc;
}

/// Brute-force Pluecker coordinates through the permutation-sum determinant.
ExteriorVector::CoordMap plucker_brute(const Subspace& s) {
    ExteriorVector::CoordMap out;
    const int n = s.ambient_dim();
    const int d = s.dim();
    std::vector<int> cols(d);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == d) {
            Matrix sub(s.field(), d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) sub.at(i, j) = s.basis().at(i, cols[j]);
            const Scalar m = testutil::det_permsum(sub);
            if (m != 0) {
                std::uint64_t mask = 0;
                for (int c : cols) mask |= 1ull << c;
                out[mask] = m;
            }
            return;
        }
        for (int c = start; c <= n - (d - pos); ++c) {
            cols[pos] = c;
            rec(pos + 1, c + 1);
        }
    };
    if (d == 0) {
        out[0] = 1;
        return out;
    }
    rec(0, 0);
    return out;
}

}  // namespace

TEST_CASE("wedge_of_subspace lists Pluecker coordinates") {
    const PrimeField f(5);

    const ExteriorVector xy = wedge_of_subspace(span(f, {{1, 0, 0}, {0, 1, 0}}, 3));
    CHECK(xy.grade() == 2);
    CHECK(xy.coords().size() == 1);
    CHECK(xy.coeff(0b011) == 1);

    const ExteriorVector unit = wedge_of_subspace(Subspace::zero(f, 3));
    CHECK(unit.grade() == 0);
    CHECK(unit.coeff(0) == 1);

    const Subspace s = span(f, {{1, 1, 0}, {0, 1, 1}}, 3);
    const ExteriorVector w = wedge_of_subspace(s);
    CHECK(w.coeff(0b011) == 1);
    CHECK(w.coeff(0b101) == 1);
    CHECK(w.coeff(0b110) == 1);
    CHECK(w.coords() == plucker_brute(s));
}

TEST_CASE("wedge_of_subspace matches the minor oracle on random subspaces") {
    const PrimeField f(1009);
    RandomStream rng(17);
    for (int round = 0; round < 40; ++round) {
        const int n = 2 + static_cast<int>(rng.uniform_below(5));
        const int d = static_cast<int>(rng.uniform_below(n + 1));
        const Subspace s = random_subspace(f, n, d, rng);
        CHECK(wedge_of_subspace(s).coords() == plucker_brute(s));
    }
}

TEST_CASE("wedge of axis vectors and antisymmetry in F^2") {
    const PrimeField f(1009);
    const ExteriorVector e1 = basis_vector(f, 2, 0);
    const ExteriorVector e2 = basis_vector(f, 2, 1);

    const ExteriorVector fwd = wedge(e1, e2);
    CHECK(fwd.coords().size() == 1);
    CHECK(fwd.coeff(0b11) == 1);

    const ExteriorVector bwd = wedge(e2, e1);
    CHECK(bwd.coeff(0b11) == f.p() - 1);

    const ExteriorVector prod =
        wedge(wedge_of_subspace(span(f, {{1, 0}}, 2)), wedge_of_subspace(span(f, {{1, 1}}, 2)));
    CHECK(prod.coeff(0b11) == 1);  // det [[1,0],[1,1]]
    CHECK(top_scalar(prod) == testutil::det_permsum(Matrix::from_rows(f, {{1, 0}, {1, 1}})));
}

TEST_CASE("is_zero and grade overflow") {
    const PrimeField f(5);
    CHECK(is_zero(ExteriorVector::zero(f, 3, 2)));
    CHECK_FALSE(is_zero(basis_vector(f, 3, 0)));

    const Subspace a = span(f, {{1, 0}, {0, 1}}, 2);
    const Subspace b = span(f, {{1, 1}}, 2);
    const ExteriorVector overflow = wedge(wedge_of_subspace(a), wedge_of_subspace(b));
    CHECK(overflow.grade() == 3);
    CHECK(is_zero(overflow));
}

TEST_CASE("top_scalar of top-grade vectors") {
    const PrimeField f(7);
    CHECK(top_scalar(wedge_of_subspace(Subspace::full(f, 3))) == 1);
    CHECK(top_scalar(ExteriorVector::zero(f, 3, 3)) == 0);
    CHECK_THROWS_AS(top_scalar(basis_vector(f, 3, 0)), GradeMismatch);
}

TEST_CASE("annihilation-meet duality on random pairs") {
    const PrimeField f(1009);
    RandomStream rng(19);
    for (int round = 0; round < 150; ++round) {
        const int n = 2 + static_cast<int>(rng.uniform_below(7));
        const int da = 1 + static_cast<int>(rng.uniform_below(std::min(4, n)));
        const int db = 1 + static_cast<int>(rng.uniform_below(std::min(4, n)));
        Subspace a = random_subspace(f, n, da, rng);
        Subspace b = random_subspace(f, n, db, rng);
        if (round % 2 == 0 && da + db <= n) {
            // Plant a shared line so both branches of the equivalence fire.
            const Subspace common = random_subspace(f, n, 1, rng);
            a = subspace_sum(a, common);
            b = subspace_sum(b, common);
        }
        const bool annihilates = is_zero(wedge(wedge_of_subspace(a), wedge_of_subspace(b)));
        CHECK(annihilates == (intersection_dim(a, b) > 0));
    }
}

TEST_CASE("split-group wedge equals the stacked determinant") {
    const PrimeField f(1009);
    RandomStream rng(23);
    for (int round = 0; round < 40; ++round) {
        const int n = 2 + static_cast<int>(rng.uniform_below(5));
        const Matrix m = testutil::random_invertible(f, n, rng);
        const int split = 1 + static_cast<int>(rng.uniform_below(n - 1));

        Matrix top(f, split, n), bottom(f, n - split, n);
        for (int i = 0; i < split; ++i)
            for (int j = 0; j < n; ++j) top.at(i, j) = m.at(i, j);
        for (int i = split; i < n; ++i)
            for (int j = 0; j < n; ++j) bottom.at(i - split, j) = m.at(i, j);

        CHECK(top_scalar(wedge(wedge_rows(top), wedge_rows(bottom))) == testutil::det_permsum(m));
    }
}

TEST_CASE("graded antisymmetry, associativity and bilinearity") {
    const PrimeField f(1009);
    RandomStream rng(47);
    for (int round = 0; round < 40; ++round) {
        const int n = 3 + static_cast<int>(rng.uniform_below(4));
        const int ga = static_cast<int>(rng.uniform_below(3));
        const int gb = static_cast<int>(rng.uniform_below(3));
        const ExteriorVector x = wedge_of_subspace(random_subspace(f, n, ga, rng));
        const ExteriorVector y = wedge_of_subspace(random_subspace(f, n, gb, rng));
        const ExteriorVector z = wedge_of_subspace(random_subspace(f, n, 1, rng));

        // x ^ y = (-1)^{ga gb} y ^ x
        const ExteriorVector lhs = wedge(x, y);
        ExteriorVector rhs = wedge(y, x);
        if ((ga * gb) % 2 == 1) rhs = scale(rhs, f.neg(1));
        CHECK(lhs == rhs);

        CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));

        // (x + x') ^ z = x ^ z + x' ^ z at equal grade
        const ExteriorVector x2 = wedge_of_subspace(random_subspace(f, n, ga, rng));
        CHECK(wedge(add(x, x2), z) == add(wedge(x, z), wedge(x2, z)));
    }
}

TEST_CASE("shuffle sign counts interleavings") {
    const PrimeField f(7);
    CHECK(shuffle_sign(f, 0b001, 0b010) == 1);       // 1 before 2
    CHECK(shuffle_sign(f, 0b010, 0b001) == f.p() - 1);  // 2 before 1: one inversion
    CHECK(shuffle_sign(f, 0b101, 0b010) == f.p() - 1);  // (1,3)(2): 3>2 one inversion
}

TEST_CASE("the 64-coordinate cap is enforced") {
    const PrimeField f(5);
    CHECK_THROWS_AS(ExteriorVector::unit(f, 65), DimensionMismatch);
    CHECK_NOTHROW(ExteriorVector::unit(f, 64));
}
