#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace supmod {

// Unbiased uniform integer in [lo, hi] drawn from a mt19937_64 stream.
// Hand-rolled rejection sampling: std::uniform_int_distribution is not
// pinned down by the standard, and seeded runs must reproduce bit-exactly
// everywhere.
inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<long long>(x % span);
}

}  // namespace supmod
