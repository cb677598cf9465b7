#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace bufcol {

/// splitmix64 finaliser. Pinned as the project's seed-mixing function so that
/// per-repetition seeds are identical across platforms and worker counts.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Repetition i of a simulation uses two independent seeds drawn from the
/// master seed's splitmix64 stream: position 2i for the arrival order and
/// position 2i+1 for the colouring choices.
inline std::uint64_t derive_order_seed(std::uint64_t master_seed, std::uint64_t rep) {
    return splitmix64(master_seed + 2 * rep * 0x9e3779b97f4a7c15ULL);
}

inline std::uint64_t derive_colour_seed(std::uint64_t master_seed, std::uint64_t rep) {
    return splitmix64(master_seed + (2 * rep + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Deterministic 64-bit random stream. The engine is pinned to std::mt19937_64
/// (its output sequence is fixed by the standard) and integers below a bound
/// are produced by rejection sampling, so identical seeds give identical runs
/// on any platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased integer in [0, r). Consumes no stream values when r == 1.
    std::uint64_t uniform_below(std::uint64_t r) {
        if (r == 0) throw std::invalid_argument("uniform_below: bound must be positive");
        if (r == 1) return 0;
        const std::uint64_t threshold = (0 - r) % r;  // 2^64 mod r
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % r;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace bufcol
