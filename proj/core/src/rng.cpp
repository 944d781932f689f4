#include "fixspace/rng.hpp"

#include <iterator>
#include <stdexcept>

namespace fixspace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    std::uint32_t words[8];
    for (int i = 0; i < 8; i += 2) {
        const std::uint64_t x = splitmix64(state);
        words[i] = static_cast<std::uint32_t>(x);
        words[i + 1] = static_cast<std::uint32_t>(x >> 32);
    }
    std::seed_seq seq(std::begin(words), std::end(words));
    engine_.seed(seq);
}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (index + 1));
    return Rng(splitmix64(state));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

}  // namespace fixspace
