#pragma once

// Counter-based splittable PRNG. Every randomized API in the library takes
// an explicit 64-bit seed; trial i of a batch draws from derive(i), so
// batches are reproducible element-wise regardless of evaluation order.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace bhlab {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace detail

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(detail::mix64(detail::mix64(seed + detail::kGolden) ^
                             detail::mix64(stream * detail::kGolden + 1))) {}

    /// Independent substream; (seed, i) and (seed, j) never collide in practice.
    Rng derive(std::uint64_t stream) const {
        Rng r(0);
        r.key_ = detail::mix64(key_ ^ detail::mix64(stream * detail::kGolden + detail::kGolden));
        return r;
    }

    std::uint64_t next_u64() { return detail::mix64(key_ + (++counter_) * detail::kGolden); }

    /// Uniform in (0, 1].
    double uniform01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    double rademacher() { return (next_u64() & 1) ? 1.0 : -1.0; }

    /// Steinhaus variable: uniform on the complex unit circle.
    std::complex<double> steinhaus() {
        const double a = 2.0 * std::numbers::pi * uniform01();
        return {std::cos(a), std::sin(a)};
    }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    std::complex<double> gaussian_complex() {
        const double inv_sqrt2 = 0.70710678118654752440;
        return {gaussian() * inv_sqrt2, gaussian() * inv_sqrt2};
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace bhlab
