#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>

namespace derivlab {

using Int = boost::multiprecision::cpp_int;

/// Deterministic seeded generator. All draws go through hand-rolled
/// rejection sampling so that identical seeds reproduce identical streams
/// on every platform (std distributions make no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw in [0, n). n must be nonzero.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) return 0;
        // rejection to remove modulo bias
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % n;
    }

    /// Uniform draw in [0, n) for arbitrary-precision bounds.
    Int bounded_int(const Int& n) {
        if (n <= 1) return 0;
        const std::size_t bits = boost::multiprecision::msb(n) + 1;
        const std::size_t words = (bits + 63) / 64;
        Int r;
        do {
            r = 0;
            for (std::size_t w = 0; w < words; ++w) {
                r <<= 64;
                r += Int(gen_());
            }
            r >>= (words * 64 - bits);
        } while (r >= n);
        return r;
    }

    /// Uniform draw in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace derivlab
