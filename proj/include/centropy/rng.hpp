#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace centropy::rng {

// splitmix64; used to turn structured keys into well-mixed engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a substream id from a root seed and a key tuple. Every unit of
// parallel work gets its stream from the fields that identify the work, never
// from the execution schedule, so thread count cannot change any result.
inline std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> fields) {
    std::uint64_t state = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
    for (std::uint64_t f : fields) state = splitmix64(state ^ splitmix64(f));
    return state;
}

inline std::mt19937_64 make_engine(std::uint64_t stream) { return std::mt19937_64(splitmix64(stream)); }

// Unbiased draw in [0, n); fixed algorithm so results do not depend on the
// standard library's uniform_int_distribution.
inline std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = eng();
        if (r >= threshold) return r % n;
    }
}

// Fisher-Yates over an index vector.
inline void shuffle_indices(std::vector<std::uint32_t>& idx, std::mt19937_64& eng) {
    for (std::size_t i = idx.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(bounded(eng, i));
        std::swap(idx[i - 1], idx[j]);
    }
}

// Standard normal via Box-Muller (the second variate is discarded so that
// draws are a pure function of engine position).
inline double standard_normal(std::mt19937_64& eng) {
    for (;;) {
        // top 53 bits -> uniform in (0,1]
        double u1 = ((eng() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = (eng() >> 11) * 0x1.0p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        double v = r * std::cos(2.0 * M_PI * u2);
        if (std::isfinite(v)) return v;
    }
}

// Poisson draw, Knuth's product method; adequate for the moderate rates the
// synthetic generators produce.
inline long poisson(std::mt19937_64& eng, double rate) {
    if (rate <= 0.0) return 0;
    const double limit = std::exp(-rate);
    long k = 0;
    double prod = 1.0;
    do {
        prod *= (eng() >> 11) * 0x1.0p-53;
        ++k;
    } while (prod > limit);
    return k - 1;
}

}  // namespace centropy::rng
