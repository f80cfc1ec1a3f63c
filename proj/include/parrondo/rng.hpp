#pragma once

#include <array>
#include <cstdint>

namespace parrondo {

/**
 * SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom mixer).
 * State advances by the golden-ratio increment per output, so jumping ahead
 * k steps is state += k * 0x9E3779B97F4A7C15.
 */
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/**
 * xoshiro256++ 1.0 (Blackman & Vigna), state expanded from the seed with
 * SplitMix64. Output sequences are identical on every platform; the C++
 * <random> distributions are deliberately avoided for that reason.
 */
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& word : s_) word = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> s_{};
};

/// Seed for independent stream k: the (k+1)-th output of the SplitMix64
/// sequence started at `seed` (computed in O(1) via the jump-ahead rule).
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 sm{seed + stream * 0x9E3779B97F4A7C15ULL};
    return sm.next();
}

}  // namespace parrondo
