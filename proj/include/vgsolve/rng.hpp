#ifndef VGSOLVE_RNG_HPP
#define VGSOLVE_RNG_HPP

#include <cstdint>

namespace vg {

// SplitMix64. Self-contained so that seeded runs reproduce bit-exact output
// on every platform (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi], rejection sampled (no modulo bias).
    int64_t uniform(int64_t lo, int64_t hi) {
        uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = range * (UINT64_MAX / range);
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return lo + static_cast<int64_t>(r % range);
    }

    // Derive an independent stream, e.g. one per trial index.
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        return r.next();
    }

private:
    uint64_t state_;
};

} // namespace vg

#endif
