#pragma once

// Deterministic RNG used everywhere randomness is needed.
//
// All streams derive from one master seed via a fixed splitting rule:
//   fork(label)  -> splitmix64(state ^ fnv1a64(label))
//   fork(index)  -> splitmix64(state ^ (0x9e3779b97f4a7c15 * (index + 1)))
// The generator itself is splitmix64, so identical (seed, call sequence)
// produces identical bits on every platform. std::normal_distribution is
// implementation-defined and deliberately not used.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace bbt {

inline std::uint64_t splitmix64_step(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // decorrelate trivially related seeds (0, 1, 2, ...)
        splitmix64_step(state_);
    }

    std::uint64_t next_u64() { return splitmix64_step(state_); }

    Rng fork(std::string_view label) const {
        return Rng(state_ ^ fnv1a64(label));
    }

    Rng fork(std::uint64_t index) const {
        return Rng(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    }

    // uniform on (0,1]; 53 bits, never returns 0 so log() is safe
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Box-Muller; the spare value is cached so the stream stays a pure
    // function of the call count
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace bbt
