#ifndef GCCHA_RNG_HPP
#define GCCHA_RNG_HPP

#include <cstdint>
#include <random>

namespace gccha {

/// splitmix64 step; the standard finalizer used to decorrelate seed streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent substream seed for (seed, index). Estimation windows and
/// synthesis realizations each draw from their own substream so that
/// parallel scheduling cannot change results.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = seed ^ (0x9e3779b97f4a7c15ULL + index * 0xda942042e4dd58b5ULL);
    std::uint64_t b = splitmix64(s);
    return a ^ b;
}

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(derive_stream_seed(seed, index));
}

}  // namespace gccha

#endif
