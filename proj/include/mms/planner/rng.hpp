#pragma once

#include <cstdint>
#include <random>

#include "mms/numeric/rational.hpp"

namespace mms {

// Deterministic random source.  The mt19937_64 sequence is pinned by the
// standard; the derived draws below avoid std::uniform_*_distribution, whose
// outputs differ between standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // unbiased integer in [lo, hi], hi >= lo
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(next());
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<int64_t>(v % span);
    }

    // uniform over the (den+1)-point grid spanning [lo, hi]
    Rational uniform_rational(const Rational& lo, const Rational& hi, int64_t den = 1 << 20) {
        int64_t k = uniform_int(0, den);
        return lo + Rational(k, den) * (hi - lo);
    }

    // Stable per-work-item seed, independent of thread scheduling
    // (splitmix64 finalizer over a golden-ratio index stride).
    static uint64_t derive(uint64_t base, uint64_t index) {
        uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace mms
