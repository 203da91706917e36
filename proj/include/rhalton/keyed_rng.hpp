#pragma once

#include <cstdint>
#include <limits>

namespace rhalton {

// Keyed pseudorandom bit generator used for every random draw in the library.
//
// The algorithm is part of the output contract: changing anything here changes
// the bits of every scrambled point and MC baseline.
//
//   mix(z)    = SplitMix64 finalizer:
//               z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
//               z ^= z >> 27; z *= 0x94d049bb133111eb;
//               z ^= z >> 31
//   state0    = mix(mix(mix(k0 + G) ^ mix(k1 + 2G)) ^ mix(k2 + 3G)),
//               G = 0x9e3779b97f4a7c15, arithmetic mod 2^64
//   next()    : state += G; return mix(state)
//
// so the generator is SplitMix64 started at a hash of the three key words.
// Scrambling keys it with (column seed, base, digit index); the MC baseline
// keys it with (seed, replicate, tag).
class KeyedGenerator {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    constexpr KeyedGenerator(std::uint64_t k0, std::uint64_t k1, std::uint64_t k2)
        : state_(mix(mix(mix(k0 + kGolden) ^ mix(k1 + 2 * kGolden)) ^ mix(k2 + 3 * kGolden)))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()()
    {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform integer in [0, n) for n >= 1. Draws below 2^64 mod n are
    // rejected so every residue is equally likely.
    constexpr std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = (*this)();
            if (r >= threshold)
                return r % n;
        }
    }

    // Uniform double on the open interval (0, 1): (top 53 bits + 1/2) / 2^53.
    constexpr double open01()
    {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace rhalton
