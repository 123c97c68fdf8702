#ifndef GRASSMORPH_RNG_HPP
#define GRASSMORPH_RNG_HPP

#include <cstdint>
#include <string_view>

namespace grassmorph {

/// Splittable counter-based PRNG (splitmix64 core). Every "generic" choice
/// in the library draws from an explicit Rng so runs are reproducible from
/// a single seed; independent streams are derived with fork().
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long next_int(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next_u64() % span);
    }

    /// Nonzero integer in [-bound, bound].
    long long next_nonzero(long long bound) {
        for (;;) {
            long long v = next_int(-bound, bound);
            if (v != 0) return v;
        }
    }

    /// Derive an independent stream keyed by a label; the parent advances.
    Rng fork(std::string_view label) {
        std::uint64_t h = next_u64();
        for (char ch : label) h = (h ^ static_cast<std::uint64_t>(ch)) * 0x100000001b3ULL;
        return Rng(h);
    }

private:
    std::uint64_t state_;
};

} // namespace grassmorph

#endif
