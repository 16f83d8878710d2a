#pragma once

#include <cstdint>
#include <random>

namespace labelsem {

// splitmix64 finalizer (Steele, Lea & Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Seed for the run at (reliability index, replicate index) under a master
// seed. Chained splitmix64 steps; the scheme is part of the output contract,
// so it is fixed here rather than delegated to the RNG engine.
inline std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t reliability_index,
                                std::uint64_t replicate_index) {
    std::uint64_t s = splitmix64(master_seed);
    s = splitmix64(s + reliability_index + 1);
    s = splitmix64(s + replicate_index + 1);
    return s;
}

// Uniform double in [0,1) from the top 53 bits. Hand-rolled instead of
// std::uniform_real_distribution so the stream does not depend on the
// standard library implementation.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0,n) by 128-bit multiply-shift; the bias is below
// n / 2^64, negligible at the population and sample sizes used here.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(rng()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
}

}  // namespace labelsem
