#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace skewcert {

/// Deterministic random stream. mt19937_64 is fully pinned by the standard,
/// and the rejection sampler below avoids std::uniform_int_distribution (whose
/// algorithm is implementation-defined), so identical seeds give identical
/// streams on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Unbiased draw from [0, n). n must be positive.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
        std::uint64_t x = gen_();
        while (rem != 0 && x >= max - rem + 1) x = gen_();
        return x % n;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace skewcert
