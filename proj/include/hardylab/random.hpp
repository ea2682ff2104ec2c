#pragma once

#include <cstdint>

#include "hardylab/core.hpp"
#include "hardylab/norms.hpp"

namespace hardylab {

// SplitMix64: tiny, platform-independent generator so that seeded runs
// reproduce bit-for-bit everywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n); the modulo bias is negligible for the
    // small ranges used here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform on the closed unit disk, by rejection from the square.
    Complex unit_disk() {
        for (;;) {
            double x = 2.0 * uniform() - 1.0;
            double y = 2.0 * uniform() - 1.0;
            if (x * x + y * y <= 1.0) return Complex{x, y};
        }
    }
};

// Independent per-trial stream: one scramble of base + trial*gamma.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return SplitMix64(base + index * 0x9e3779b97f4a7c15ull).next();
}

// Coefficients i.i.d. uniform on the unit disk.
inline AnalyticPoly random_poly(std::size_t degree, SplitMix64& rng) {
    std::vector<Complex> c(degree + 1);
    for (auto& v : c) v = rng.unit_disk();
    return AnalyticPoly{std::move(c)};
}

// Same, then scaled so the grid maximum of |f| is 1 (the standard
// normalization for property trials).
inline AnalyticPoly random_poly_normalized(std::size_t degree, SplitMix64& rng,
                                           int oversample = 16) {
    AnalyticPoly f = random_poly(degree, rng);
    double m = hinf_norm(f, oversample).value;
    if (m > 0.0) f = Complex{1.0 / m, 0.0} * f;
    return f;
}

} // namespace hardylab
