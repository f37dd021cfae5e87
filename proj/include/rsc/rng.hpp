#pragma once

#include <cstdint>
#include <span>

namespace rsc {

// Finalizer from the splitmix64 generator. Bijective on 64-bit words and
// statistically strong enough to serve both as a hash mixer and, driven by a
// counter, as the random stream for experiments.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Order-sensitive chaining: each word is folded in through the nonlinear
// mixer, so (a, b) and (b, a) land on different values.
constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t x) noexcept {
    return mix64(h ^ (x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)));
}

inline std::uint64_t hash_words(std::uint64_t seed, std::span<const std::uint64_t> words) noexcept {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t w : words) h = hash_combine(h, w);
    return h;
}

// Map a hash to [0, 1) using the top 53 bits, so the comparison against an
// inclusion probability is exact in double precision.
constexpr double unit_from_bits(std::uint64_t h) noexcept {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Counter-based generator: state advances by a Weyl increment and each output
// is mix64 of the state. Reproducible across platforms, cheap to seed, and
// two generators with different seeds give independent-looking streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : state_(mix64(seed ^ 0xa0761d6478bd642full)) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

    // Uniform integer in [0, bound). Multiply-shift with a rejection step to
    // remove the modulo bias entirely.
    std::uint64_t below(std::uint64_t bound) noexcept {
        using u128 = unsigned __int128;
        std::uint64_t x = next();
        u128 m = static_cast<u128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<u128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform in [lo, hi] inclusive.
    long long between(long long lo, long long hi) noexcept {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    double unit() noexcept { return unit_from_bits(next()); }

private:
    std::uint64_t state_;
};

} // namespace rsc
