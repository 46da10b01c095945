#pragma once

#include <cstdint>

#include "skewcert/rng.hpp"

namespace skewcert {

/// Element of F_p, always reduced to [0, p).
using Scalar = std::uint64_t;

/// Arithmetic context for the prime field F_p. Primality is verified at
/// construction (deterministic Miller-Rabin), so a constructed PrimeField is
/// always a genuine field. Immutable and cheap to copy.
class PrimeField {
public:
    /// Throws std::invalid_argument if p is not prime or exceeds 2^62.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const {
        return static_cast<Scalar>((static_cast<__uint128_t>(a) * b) % p_);
    }
    Scalar pow(Scalar base, std::uint64_t exp) const;
    /// Multiplicative inverse; throws std::domain_error on 0.
    Scalar inv(Scalar a) const;

    /// Reduce an arbitrary signed integer into [0, p).
    Scalar from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Scalar>(r);
    }

    Scalar random(RandomStream& rng) const { return rng.uniform_below(p_); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

private:
    std::uint64_t p_;
};

/// Deterministic 64-bit primality test (Miller-Rabin over a fixed base set
/// proven complete below 3.3e24).
bool is_prime(std::uint64_t n);

/// Default modulus. Large enough that the rejection-sampled genericity draws
/// in the certificate pipeline almost never need a retry at desk scale, small
/// enough that all arithmetic stays in native words.
inline constexpr std::uint64_t kDefaultPrime = 1009;

}  // namespace skewcert
