#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewcert/field.hpp"

using namespace skewcert;

TEST_CASE("primality is verified at construction") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(1009));
    CHECK_NOTHROW(PrimeField(2305843009213693951ull));  // 2^61 - 1
    CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1000), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1ull << 40), std::invalid_argument);
}

TEST_CASE("is_prime agrees with trial division on small values") {
    auto trial = [](std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 3000; ++n) CHECK(is_prime(n) == trial(n));
}

TEST_CASE("field arithmetic identities") {
    const PrimeField f(1009);
    RandomStream rng(11);
    for (int round = 0; round < 300; ++round) {
        const Scalar a = f.random(rng);
        const Scalar b = f.random(rng);
        CHECK(f.add(a, b) < f.p());
        CHECK(f.sub(f.add(a, b), b) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (b != 0) {
            CHECK(f.mul(f.mul(a, b), f.inv(b)) == a);
            CHECK(f.mul(b, f.inv(b)) == 1);
        }
        // Fermat: a^p = a.
        CHECK(f.pow(a, f.p()) == a);
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("pow matches repeated multiplication") {
    const PrimeField f(97);
    RandomStream rng(5);
    for (int round = 0; round < 50; ++round) {
        const Scalar a = f.random(rng);
        const std::uint64_t e = rng.uniform_below(40);
        Scalar expect = 1;
        for (std::uint64_t i = 0; i < e; ++i) expect = f.mul(expect, a);
        CHECK(f.pow(a, e) == expect);
    }
}

TEST_CASE("from_int reduces negatives") {
    const PrimeField f(7);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.from_int(-7) == 0);
    CHECK(f.from_int(15) == 1);
    CHECK(f.from_int(0) == 0);
}

TEST_CASE("random streams are reproducible and in range") {
    RandomStream a(42), b(42), c(43);
    bool identical = true, all_same_as_c = true;
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t x = a.uniform_below(1009);
        const std::uint64_t y = b.uniform_below(1009);
        const std::uint64_t z = c.uniform_below(1009);
        CHECK(x < 1009);
        identical = identical && x == y;
        all_same_as_c = all_same_as_c && x == z;
    }
    CHECK(identical);
    CHECK_FALSE(all_same_as_c);
}
