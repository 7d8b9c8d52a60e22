#pragma once

// Deterministic randomness: xoshiro256** streams seeded through SplitMix64.
// Substreams are derived from (seed, index) so sweeps can hand independent,
// reproducible generators to each instance regardless of execution order.

#include <cstdint>
#include <stdexcept>

namespace srm {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ull;
    }

    // Substream i of a master seed: SplitMix64 is re-keyed with the stream
    // index before state expansion. Documented so streams can be reproduced
    // outside this codebase.
    static Xoshiro256StarStar substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 sm{seed};
        const std::uint64_t mixed = sm.next() ^ ((index + 1) * 0x9E3779B97F4A7C15ull);
        return Xoshiro256StarStar(mixed);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased uniform draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below: bound must be positive");
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // One random bit, buffered 64 at a time.
    bool bit() {
        if (bits_left_ == 0) {
            bit_buffer_ = next();
            bits_left_ = 64;
        }
        const bool b = bit_buffer_ & 1;
        bit_buffer_ >>= 1;
        --bits_left_;
        return b;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    std::uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
};

}  // namespace srm
