#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace genaug {

// Deterministic random stream (xoshiro256++). All stochastic behaviour in the
// library flows through this type so results are reproducible across
// platforms and independent of the standard library's distribution
// implementations.
class Rng {
public:
    Rng() : Rng(0u) {}

    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    // Builds a stream from a list of key words. Streams built from distinct
    // keys are statistically independent; the mapping is order-sensitive.
    static Rng from_key(std::initializer_list<uint64_t> words) {
        uint64_t acc = 0x243f6a8885a308d3ull;
        for (uint64_t w : words) {
            uint64_t t = w;
            acc ^= splitmix64(t);
            acc = splitmix64(acc);
        }
        return Rng(acc);
    }

    uint64_t next_u64() {
        uint64_t* s = state_;
        const uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        const uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(bounded(range));
    }

    // Standard normal via Box-Muller; consumes exactly two uniforms per call.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Derives an independent child stream; advances this stream by one draw.
    Rng fork() { return Rng::from_key({next_u64(), 0x9e3779b97f4a7c15ull}); }

private:
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased bounded draw (Lemire's method).
    uint64_t bounded(uint64_t range) {
        if (range == 0) return next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * range;
        auto lo = static_cast<uint64_t>(m);
        if (lo < range) {
            const uint64_t threshold = (0 - range) % range;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * range;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    uint64_t state_[4];
};

// FNV-1a, used to fold strings (e.g. filenames) into stream keys.
inline uint64_t hash64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace genaug
