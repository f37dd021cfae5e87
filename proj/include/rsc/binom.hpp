#pragma once

#include <cstdint>
#include <stdexcept>

namespace rsc {

// Saturation value for subset counts. Anything at or above this is "too many
// to enumerate" for every budget we accept, so exact overflow handling past
// it would be wasted effort.
inline constexpr std::uint64_t kCountSaturated = 1ull << 62;

// C(n, k) saturating at kCountSaturated. Exact below that.
inline std::uint64_t binom_saturating(long long n, long long k) noexcept {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    using u128 = unsigned __int128;
    u128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
        if (r >= kCountSaturated) return kCountSaturated;
    }
    return static_cast<std::uint64_t>(r);
}

// C(n, k) as long long, throwing on saturation. Use for quantities that feed
// exact arithmetic rather than budget checks.
inline long long binom(long long n, long long k) {
    std::uint64_t v = binom_saturating(n, k);
    if (v >= kCountSaturated) throw std::overflow_error("binom: value exceeds 2^62");
    return static_cast<long long>(v);
}

} // namespace rsc
