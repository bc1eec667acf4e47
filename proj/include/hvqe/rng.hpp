// Reproducible randomness. All sampling in this project goes through Rng,
// which wraps the 64-bit Mersenne Twister (std::mt19937_64, a fixed algorithm
// specified by the C++ standard) and maps its output to doubles directly.
// Standard-library distributions are avoided on purpose: their output is
// implementation-defined, and seeded runs must be bit-identical across
// machines.

#pragma once

#include <cstdint>
#include <random>

namespace hvqe {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Rademacher draw: +1 or -1 with equal probability.
    double sign() { return (engine_() >> 63) ? 1.0 : -1.0; }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer; decorrelates seeds derived from a base seed and a
// stream index (restart number, evaluation counter, ...).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base ^ stream;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace hvqe
