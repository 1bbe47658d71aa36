#pragma once

#include <cstdint>
#include <random>

namespace tspq {

// splitmix64: tiny seeded stream used where cross-tool replay matters
// (instance selection); also the seed expander for everything else.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Derive an independent sub-seed for a named stream. Decorrelates the
// per-component generators that hang off one user-facing seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 sm(master ^ (0xA0761D6478BD642FULL * (stream + 1)));
    sm.next();
    return sm.next();
}

// mt19937_64 with explicit output mappings. The raw engine output is
// pinned by the standard, so avoiding std::*_distribution keeps results
// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // [0,1) with 53 random bits
    double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // [0, bound); modulo reduction (bias is negligible for the small
    // bounds used here and keeps the mapping trivially replayable)
    std::uint64_t uniform_int(std::uint64_t bound) { return gen_() % bound; }

    std::size_t index(std::size_t bound) {
        return static_cast<std::size_t>(uniform_int(bound));
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace tspq
