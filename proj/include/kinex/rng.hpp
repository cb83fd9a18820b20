#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

// Seedable, platform-independent random streams. All randomness in the
// library flows through these generators so that a master seed fixes every
// output bit; std::normal_distribution and friends are avoided on purpose
// (their sequences are implementation-defined).

namespace kinex {

// SplitMix64 (Vigna). Used to expand seeds and to derive substream seeds.
struct SplitMix64 {
    uint64_t state;

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Substream seed for realization k of a master seed: SplitMix64 output k+1.
inline uint64_t substream_seed(uint64_t master, uint64_t k) {
    SplitMix64 sm{master};
    uint64_t s = 0;
    for (uint64_t i = 0; i <= k; ++i) s = sm.next();
    return s;
}

// xoshiro256++ (Blackman & Vigna), state seeded through SplitMix64.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // 53-bit uniform in [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // 53-bit uniform in (0, 1], safe as a log() argument
    double uniform01_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Standard normal deviates via the trigonometric Box-Muller transform.
class NormalSampler {
public:
    explicit NormalSampler(uint64_t seed) : gen_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = gen_.uniform01_open();
        const double u2 = gen_.uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    void fill(std::span<double> out) {
        for (auto& v : out) v = next();
    }

    Xoshiro256pp& engine() { return gen_; }

private:
    Xoshiro256pp gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace kinex
