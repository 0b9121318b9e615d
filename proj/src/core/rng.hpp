#pragma once

#include <cstdint>
#include <random>

namespace qtx {

// Derives independent, reproducible seeds for named streams (per episode,
// per worker, ...) from a base seed. splitmix64 over the combined words.
uint64_t mix_seed(uint64_t a, uint64_t b);
uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c);

// mt19937_64 engine with explicit uniform/normal transforms. The transforms
// are spelled out here so sampled sequences depend only on the engine output,
// not on standard-library distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; consumes exactly two engine draws.
    double normal();

private:
    std::mt19937_64 engine_;
};

}  // namespace qtx
