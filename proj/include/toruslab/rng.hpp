#pragma once

#include <cstdint>
#include <string_view>

// Deterministic random streams. All randomness in the library flows from a
// single master seed through named streams, so adding a new consumer never
// perturbs the draws of an existing one. The generator is xoshiro256++ seeded
// via splitmix64; uniform doubles are built directly from the high 53 bits,
// which keeps every stream bit-identical across platforms and standard
// libraries.

namespace toruslab {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace detail

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = detail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0,1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo,hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

/// Seed for the named stream of a master seed. Streams are independent by
/// construction: the name is hashed into the splitmix trajectory.
inline std::uint64_t stream_seed(std::uint64_t master, std::string_view stream) {
    std::uint64_t s = master ^ detail::fnv1a64(stream);
    return detail::splitmix64(s);
}

/// Seed for the i-th element of a named stream (one sub-seed per task).
inline std::uint64_t stream_seed(std::uint64_t master, std::string_view stream, std::uint64_t index) {
    std::uint64_t s = stream_seed(master, stream) + 0x9E3779B97F4A7C15ULL * (index + 1);
    return detail::splitmix64(s);
}

}  // namespace toruslab
