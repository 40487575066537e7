#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "supmod/matrix.hpp"
#include "supmod/prng.hpp"

namespace testutil {

inline supmod::Matrix random_matrix(std::mt19937_64& rng, int m, int n, long long lo,
                                    long long hi) {
    std::vector<supmod::Rational> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    for (int k = 0; k < m * n; ++k)
        entries.emplace_back(supmod::uniform_int(rng, lo, hi));
    return supmod::Matrix(m, n, std::move(entries));
}

inline supmod::PermPattern random_pattern(std::mt19937_64& rng, int m, int n) {
    std::vector<int> ranks(static_cast<std::size_t>(m) * n);
    std::iota(ranks.begin(), ranks.end(), 1);
    for (std::size_t k = ranks.size(); k > 1; --k)
        std::swap(ranks[k - 1],
                  ranks[static_cast<std::size_t>(supmod::uniform_int(rng, 0, static_cast<long long>(k) - 1))]);
    return supmod::PermPattern(m, n, std::move(ranks));
}

// The worked 3x3 example: matrix, pattern, rearranged matrix.
inline supmod::Matrix example_matrix() {
    return supmod::parse_matrix("1 1 3\n10 3 7\n8 10 6\n");
}

inline supmod::PermPattern example_pattern() {
    return supmod::parse_pattern("8 7 1\n4 5 3\n2 6 9\n");
}

inline supmod::Matrix example_rearranged() {
    return supmod::parse_matrix("10 8 1\n3 6 3\n1 7 10\n");
}

}  // namespace testutil
