#pragma once

#include <cstdint>
#include <random>

namespace permcx {

/// Deterministic RNG for seeded generators. mt19937_64 output is pinned by
/// the standard; std distributions are not, so sampling is done by rejection
/// here to keep byte-identical runs across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform draw from [0, n).
    int uniform(int n) {
        if (n <= 1) return 0;
        const std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do { v = eng_(); } while (v >= bound);
        return static_cast<int>(v % n);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace permcx
