#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace qco {

// Counter-based 64-bit generator (SplitMix64). Streams are derived by
// hashing (seed, stream_index, purpose_tag), so sub-streams are independent
// of the draw order in other streams and outputs are bit-reproducible
// across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix_key(seed)) {}

    // Purpose tags keep unrelated draws from colliding on the same stream.
    enum Tag : std::uint64_t {
        kMember = 0x6d656d6265720000ULL,
        kNormStart = 0x6e6f726d00000000ULL,
        kWitness = 0x7769746e65737300ULL,
        kSearch = 0x7365617263680000ULL,
    };

    static Rng stream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag) {
        Rng r(0);
        r.state_ = mix_key(mix_key(mix_key(seed) ^ index) ^ tag);
        return r;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    std::uint64_t uniform_int(std::uint64_t n) {
        // rejection keeps the draw exactly uniform
        std::uint64_t threshold = (~n + 1) % n;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    // standard normal via Box-Muller (pair cached)
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // uniform point on the unit sphere
    std::array<double, 3> unit_axis() {
        for (;;) {
            double x = normal(), y = normal(), z = normal();
            double n = std::sqrt(x * x + y * y + z * z);
            if (n > 1e-12) return {x / n, y / n, z / n};
        }
    }

  private:
    static std::uint64_t mix_key(std::uint64_t z) {
        z = (z + 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace qco
