#pragma once

#include <cstdint>

namespace btg {

// Generator scheme identifier, pinned into all serialized outputs.
inline constexpr const char* kGeneratorVersion = "splitmix64-streams/1";

// SplitMix64 finalizer (Stafford mix13). Used both as the generator's
// output function and as the stream-key derivation hash.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Counter-based 64-bit generator (SplitMix64). All randomness in the
// project flows through this type; results are identical on every
// platform because only integer ops are involved.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }

    // 53-bit mantissa uniform in [0,1).
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Unbiased uniform integer in [0,n). n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t x, r;
        do {
            x = next();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }

private:
    std::uint64_t state_;
};

// Named substreams. Every consumer of randomness derives its own stream
// from (seed, tag, a, b); streams with distinct keys are independent.
enum class Stream : std::uint64_t {
    points = 1,
    prefs = 2,
    staged = 3,
    trial = 4,
    moons = 5,
    sources = 6,
    instance = 7,
};

// Stream-derivation rule (version "splitmix64-streams/1"):
//   k0 = mix64(seed + golden * tag)
//   k1 = mix64(k0 ^ mix64(a + golden))
//   k2 = mix64(k1 ^ mix64(b + 2 * golden))
// and k2 seeds a SplitMix64.
inline std::uint64_t derive_key(std::uint64_t seed, Stream tag,
                                std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t k = mix64(seed + kGolden * static_cast<std::uint64_t>(tag));
    k = mix64(k ^ mix64(a + kGolden));
    k = mix64(k ^ mix64(b + 2 * kGolden));
    return k;
}

inline Rng make_stream(std::uint64_t seed, Stream tag,
                       std::uint64_t a = 0, std::uint64_t b = 0) {
    return Rng(derive_key(seed, tag, a, b));
}

}  // namespace btg
