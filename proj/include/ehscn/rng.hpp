#pragma once

#include <cstdint>
#include <random>

namespace ehscn {

/// Random stream used throughout the simulator. One stream per trial;
/// streams are derived from a master seed so that parallel execution is
/// bit-compatible with serial execution.
using RngStream = std::mt19937_64;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Seed of the stream for trial `index` under master seed `master`.
/// Counter-based: no state is shared between trials, so trials can run
/// in any order or in parallel without affecting results.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    // two mixing rounds decorrelate master/index even for small inputs
    return detail::splitmix64(detail::splitmix64(master) ^ (index + 1));
}

/// Seed of sweep point `index` under master seed `master`. Index 0 maps to
/// the master seed itself so a singleton sweep equals a direct estimate.
inline std::uint64_t point_seed(std::uint64_t master, std::uint64_t index) {
    if (index == 0)
        return master;
    return detail::splitmix64(master + 0x9e3779b97f4a7c15ULL * index);
}

inline RngStream make_stream(std::uint64_t seed) {
    return RngStream(seed);
}

} // namespace ehscn
