#pragma once

#include <cstdint>

#include "burniat/rational.hpp"

namespace burniat {

// Seed recorded for reproducible CI runs.
inline constexpr std::uint64_t kDefaultSeed = 0xB0121A7ULL;

// Numerators and denominators of random rationals are drawn from this range,
// zero excluded.
inline constexpr long long kRandomCoeffBound = 97;

// splitmix64: tiny, deterministic, identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long long next_in(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    long long next_nonzero(long long bound) {
        long long v = 0;
        while (v == 0) v = next_in(-bound, bound);
        return v;
    }

    // numerator and denominator in [-97, 97] \ {0}
    Rat next_rational() {
        return make_rat(Int(next_nonzero(kRandomCoeffBound)), Int(next_nonzero(kRandomCoeffBound)));
    }

    Rat next_positive_rational() {
        return make_rat(Int(next_in(1, kRandomCoeffBound)), Int(next_in(1, kRandomCoeffBound)));
    }

private:
    std::uint64_t state_;
};

} // namespace burniat
