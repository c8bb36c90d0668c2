#pragma once

/*
 * Deterministic pseudo-random source for the sampled verification suites.
 * std::uniform_int_distribution is implementation-defined, so the stream
 * is generated here directly to keep sampled checks reproducible across
 * compilers.
 */

#include <cstdint>

namespace grs {

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /* Uniform in [lo, hi] inclusive; bias is irrelevant at these ranges. */
    int64_t next_in(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(next() % span);
    }

private:
    uint64_t state_;
};

} // namespace grs
