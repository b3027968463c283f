#pragma once

#include <cstdint>
#include <random>

namespace permtop {

using Rng = std::mt19937_64;

// splitmix64 finalizer; decorrelates nearby (seed, stream) pairs.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent generator for substream `stream` of a master seed. The
/// mapping is fixed, so results that depend only on (seed, stream) do not
/// depend on how streams are distributed over threads.
inline Rng make_stream(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{
        static_cast<std::uint32_t>(mix64(seed)),
        static_cast<std::uint32_t>(mix64(seed) >> 32),
        static_cast<std::uint32_t>(mix64(stream ^ 0x5851f42d4c957f2dULL)),
        static_cast<std::uint32_t>(mix64(stream ^ 0x5851f42d4c957f2dULL) >> 32)};
    return Rng(seq);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-and-reject).
inline std::uint64_t bounded(Rng& rng, std::uint64_t bound)
{
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

} // namespace permtop
