#pragma once

#include <cstdint>
#include <random>

namespace neatflow {

// All randomness flows through this wrapper, with the uniform draws done by
// explicit arithmetic on mt19937_64 output. std::mt19937_64 is fully
// specified by the standard while the <random> distributions are not, so a
// (seed, call sequence) pair reproduces bit-identically everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform index in [0, n); n must be positive
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 gen_;
};

// SplitMix64 finalizer; used to derive well-separated seeds from small ones.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t k) {
    return mix_seed(mix_seed(base + tag) + k);
}

} // namespace neatflow
