#pragma once

#include <cstdint>
#include <random>

namespace relkin::rng {

/// The one generator used for every randomized audit; named in reports so
/// runs are reproducible from the seed alone.
using Engine = std::mt19937_64;

inline constexpr const char* kEngineName = "mt19937_64";

/// Uniform in [0, 1) from the top 53 bits of the engine output. Hand-rolled
/// so draws are identical across standard libraries.
inline double unit(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(Engine& eng, double lo, double hi) {
    return lo + (hi - lo) * unit(eng);
}

}  // namespace relkin::rng
