#pragma once

#include <cstdint>
#include <random>

#include "focuskit/common.hpp"

namespace focuskit {

// splitmix64 finalizer; used to derive independent substreams from one seed.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Engine for restart/work-item `index` of the stream identified by `seed`.
/// Substreams are independent of evaluation order, so parallel restarts
/// merge deterministically.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(seed ^ mix64(index)));
}

/// Uniform double in [0,1) with platform-independent bit use
/// (std::uniform_real_distribution is implementation-defined).
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform01(gen);
}

inline Vec uniform_vec(std::mt19937_64& gen, int dim, double lo, double hi) {
    Vec x(dim);
    for (int i = 0; i < dim; ++i) x[i] = uniform(gen, lo, hi);
    return x;
}

}  // namespace focuskit
