#pragma once

#include <cstdint>
#include <random>

namespace scratchpad {

// Seeded random source with a platform-independent bounded-int draw.
// std::uniform_int_distribution is implementation-defined, so generators must
// not use it: corpora have to be byte-identical for one seed everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [lo, hi], inclusive. Rejection-sampled, no modulo bias.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    bool chance(double p) {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < p;
    }

    template <typename Container>
    const typename Container::value_type& pick(const Container& c) {
        return c[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(c.size()) - 1))];
    }

    // Independent child stream; deterministic function of (seed, index).
    Rng child(std::uint64_t index) const { return Rng(splitmix64(seed_ + 0x9e3779b97f4a7c15ULL * (index + 1))); }

    std::uint64_t seed() const { return seed_; }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace scratchpad
