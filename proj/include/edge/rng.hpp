#pragma once

// Deterministic random helpers. std::mt19937_64 output is bit-exact per the
// standard; the distributions here are hand-rolled because the standard
// library's are implementation-defined and would break cross-platform
// reproducibility of seeded runs.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace edge::rng {

using Engine = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

// Uniform integer in [0, n) via rejection (no modulo bias).
inline std::uint64_t below(Engine& eng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % n;
}

// Standard normal via Box-Muller; consumes exactly two draws per call.
inline double gaussian(Engine& eng) {
    double u1 = uniform01(eng);
    const double u2 = uniform01(eng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

// Fisher-Yates.
template <typename T>
void shuffle(std::vector<T>& values, Engine& eng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(below(eng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace edge::rng
