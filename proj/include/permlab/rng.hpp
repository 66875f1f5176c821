#pragma once

#include <cstdint>
#include <cmath>
#include <string>
#include <string_view>

namespace permlab {

// Deterministic 64-bit generator (xoshiro256**). All randomized code in the
// library draws from this type so that a (seed, substream) pair reproduces
// byte-identical results on every platform; std:: distributions are avoided
// because their output is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        // splitmix64 expansion of the seed into the xoshiro state
        uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    // Named substream: an independent generator derived from (state, name, index).
    Rng substream(std::string_view name, uint64_t index = 0) const {
        uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](uint64_t v) {
            h ^= v;
            h *= 0x100000001b3ULL;
        };
        for (char c : name) mix(static_cast<unsigned char>(c));
        mix(index);
        mix(s_[0]);
        mix(s_[2]);
        return Rng(h);
    }

    uint64_t next_u64() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in {0, ..., bound-1}, exact (rejection on the top range).
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    bool fair_coin() { return (next_u64() & 1ULL) != 0; }

    // Geometric with P(k) = 2^{-k-1}, k >= 0: count leading fair-coin successes.
    int geometric_half() {
        int k = 0;
        for (;;) {
            uint64_t bits = next_u64();
            for (int b = 0; b < 64; ++b) {
                if ((bits >> b) & 1ULL) return k;
                ++k;
            }
        }
    }

    // Standard normal via Box-Muller (deterministic given the stream).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace permlab
