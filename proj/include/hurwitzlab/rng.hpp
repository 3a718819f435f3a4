#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace hwl {

namespace detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace detail

/// xoshiro256** seeded from a (seed, stream) pair. Streams indexed by sample
/// block give reproducible draws that do not depend on worker scheduling.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = seed;
        detail::splitmix64_next(sm);
        sm ^= 0xA0761D6478BD642FULL * (stream + 1);
        for (auto& word : s_) word = detail::splitmix64_next(sm);
    }

    std::uint64_t next_u64() {
        std::uint64_t result = detail::rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = detail::rotl(s_[3], 45);
        return result;
    }

    /// Uniform on (0, 1].
    double uniform01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal via Box-Muller, pair-cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(angle);
        has_cached_ = true;
        return r * std::cos(angle);
    }

    /// Complex Gaussian with independent N(0, 1/2) real and imaginary parts,
    /// so E|z|^2 = 1.
    std::complex<double> complex_gaussian() {
        constexpr double half_sqrt2 = 0.70710678118654752440;
        double re = normal() * half_sqrt2;
        double im = normal() * half_sqrt2;
        return {re, im};
    }

private:
    std::uint64_t s_[4]{};
    bool has_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace hwl
