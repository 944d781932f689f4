#pragma once

#include <cstdint>
#include <random>

namespace fixspace {

/// One step of SplitMix64; advances state.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seedable, splittable generator: a 64-bit Mersenne Twister whose seed for
/// stream i is derived from (seed, i) by SplitMix64, so parallel workers get
/// independent deterministic streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound >= 1, without modulo bias.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace fixspace
