// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace qassert {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Engine seed for work item `index` of a run seeded with `seed`. For a fixed
/// run seed the map index -> engine seed is a bijection (and likewise
/// seed -> engine seed for a fixed index), so distinct items never share a
/// stream.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) + index);
}

/// Independent random stream for work item `index` of a run seeded with
/// `seed`. Shots and Monte Carlo resamples each draw from their own
/// substream, which makes merged results independent of evaluation order.
inline Rng substream(std::uint64_t seed, std::uint64_t index) { return Rng(substream_seed(seed, index)); }

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qassert
