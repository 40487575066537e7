#include "supmod/goodness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace supmod {

namespace {

void check_window_indices(const PermPattern& sigma, int i, int j) {
    if (i < 0 || i + 1 >= sigma.rows() || j < 0 || j + 1 >= sigma.cols())
        throw DimensionError("window (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") out of range for " +
                             std::to_string(sigma.rows()) + "x" +
                             std::to_string(sigma.cols()) + " pattern");
}

}  // namespace

WindowRoles window_roles(const PermPattern& sigma, int i, int j) {
    check_window_indices(sigma, i, j);
    return WindowRoles{sigma.rank(i, j), sigma.rank(i, j + 1), sigma.rank(i + 1, j),
                       sigma.rank(i + 1, j + 1)};
}

bool is_good_on(const PermPattern& sigma, int i, int j) {
    auto [r, p, q, s] = window_roles(sigma, i, j);
    int mx = std::max(std::max(r, p), std::max(q, s));
    int mn = std::min(std::min(r, p), std::min(q, s));
    return (mx == r || mx == s) && (mn == p || mn == q);
}

bool is_good_everywhere(const PermPattern& sigma) {
    for (int i = 0; i + 1 < sigma.rows(); ++i)
        for (int j = 0; j + 1 < sigma.cols(); ++j)
            if (!is_good_on(sigma, i, j)) return false;
    return true;
}

std::optional<PermPattern> universal_pattern(int m, int n) {
    if (m < 1 || n < 1) throw DimensionError("dimensions must be at least 1");
    if (m > n)
        throw DimensionError("universal_pattern requires m <= n; transpose the input");

    if (m == 1) {
        std::vector<int> ranks(static_cast<std::size_t>(n));
        std::iota(ranks.begin(), ranks.end(), 1);
        return PermPattern(1, n, std::move(ranks));
    }
    if (m == 2) {
        // Top row n..1, bottom row n+1..2n.
        std::vector<int> ranks;
        ranks.reserve(static_cast<std::size_t>(2 * n));
        for (int k = n; k >= 1; --k) ranks.push_back(k);
        for (int k = n + 1; k <= 2 * n; ++k) ranks.push_back(k);
        return PermPattern(2, n, std::move(ranks));
    }
    if (m == 3 && n == 3) {
        return PermPattern(3, 3, {8, 7, 1, 4, 5, 3, 2, 6, 9});
    }
    return std::nullopt;
}

std::pair<PermPattern, PermPattern> cover_pair_3x4() {
    PermPattern sigma(3, 4, {9, 8, 7, 3, 2, 6, 5, 4, 1, 10, 11, 12});
    PermPattern tau(3, 4, {12, 3, 2, 1, 11, 7, 8, 9, 4, 5, 6, 10});
    return {std::move(sigma), std::move(tau)};
}

Matrix violating_witness(const PermPattern& sigma, int i, int j) {
    if (is_good_on(sigma, i, j))
        throw ValidationError("pattern is good on window (" + std::to_string(i + 1) +
                              "," + std::to_string(j + 1) + "); no witness exists");

    auto [r, p, q, s] = window_roles(sigma, i, j);
    int mx = std::max(std::max(r, p), std::max(q, s));
    int mn = std::min(std::min(r, p), std::min(q, s));

    // Badness means the window min landed on the main diagonal or the max
    // on the antidiagonal. The min case takes precedence when both hold.
    // The singled-out rank gets the isolated value; everything below it
    // becomes 1 and everything above it 2, which is the minimal
    // nondecreasing completion.
    const int total = sigma.size();
    std::vector<Rational> values(static_cast<std::size_t>(total));
    if (mn == r || mn == s) {
        // a_min = 1, the rest of the window = 2.
        for (int k = 1; k <= total; ++k)
            values[static_cast<std::size_t>(k) - 1] = Rational(k <= mn ? 1 : 2);
    } else {
        // Max sits at p or q: a_max = 2, the rest of the window = 1.
        for (int k = 1; k <= total; ++k)
            values[static_cast<std::size_t>(k) - 1] = Rational(k < mx ? 1 : 2);
    }
    return Matrix(sigma.rows(), sigma.cols(), std::move(values));
}

namespace {

// Search state for the good-pattern census. Cells are linear indices.
struct CensusSearch {
    int m, n;
    std::vector<int> rank_at;  // mn..1 as placed; 0 = empty
    std::uint64_t count = 0;
    std::size_t emit_limit = 0;
    bool collecting = true;
    std::vector<std::vector<int>> found;  // row-major rank grids

    int cell(int i, int j) const { return i * n + j; }

    bool placement_ok(int c) const {
        int ci = c / n, cj = c % n;
        for (int i = std::max(0, ci - 1); i <= std::min(m - 2, ci); ++i) {
            for (int j = std::max(0, cj - 1); j <= std::min(n - 2, cj); ++j) {
                const int d1 = cell(i, j), x1 = cell(i, j + 1);
                const int x2 = cell(i + 1, j), d2 = cell(i + 1, j + 1);
                int filled = (rank_at[d1] != 0) + (rank_at[x1] != 0) +
                             (rank_at[x2] != 0) + (rank_at[d2] != 0);
                // After placing into c the window holds filled+1 ranks.
                if (filled == 0) {
                    // c becomes the window max; it must be a diagonal corner.
                    if (c != d1 && c != d2) return false;
                } else if (filled == 2) {
                    // One cell will stay empty and receive the window min;
                    // that cell must be on the antidiagonal.
                    int empty = -1;
                    for (int cand : {d1, x1, x2, d2})
                        if (cand != c && rank_at[cand] == 0) empty = cand;
                    if (empty == d1 || empty == d2) return false;
                } else if (filled == 3) {
                    // c receives the window min itself.
                    if (c != x1 && c != x2) return false;
                }
            }
        }
        return true;
    }

    void place(int rank, int remaining) {
        if (remaining == 0) {
            ++count;
            if (collecting) {
                if (found.size() < emit_limit) {
                    std::vector<int> grid(rank_at.begin(), rank_at.end());
                    found.push_back(std::move(grid));
                } else {
                    collecting = false;
                    found.clear();
                }
            }
            return;
        }
        for (int c = 0; c < m * n; ++c) {
            if (rank_at[c] != 0) continue;
            if (!placement_ok(c)) continue;
            rank_at[c] = rank;
            place(rank - 1, remaining - 1);
            rank_at[c] = 0;
        }
    }
};

std::uint64_t factorial_u64(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

GoodCensus enumerate_good(int m, int n, std::size_t emit_limit, int cell_guard) {
    if (m < 1 || n < 1) throw DimensionError("dimensions must be at least 1");
    if (m * n > cell_guard)
        throw ResourceError("census of " + std::to_string(m) + "x" + std::to_string(n) +
                            " exceeds the cell guard of " + std::to_string(cell_guard) +
                            "; raise the guard to force the search");

    GoodCensus census;
    census.rows = m;
    census.cols = n;

    if (m == 1 || n == 1) {
        // No windows, so every pattern qualifies.
        census.count = factorial_u64(m * n);
        if (census.count <= emit_limit) {
            std::vector<int> ranks(static_cast<std::size_t>(m * n));
            std::iota(ranks.begin(), ranks.end(), 1);
            do {
                census.patterns.emplace_back(m, n, ranks);
            } while (std::next_permutation(ranks.begin(), ranks.end()));
        }
        return census;
    }

    CensusSearch search;
    search.m = m;
    search.n = n;
    search.rank_at.assign(static_cast<std::size_t>(m * n), 0);
    search.emit_limit = emit_limit;
    search.place(m * n, m * n);

    census.count = search.count;
    if (search.collecting && search.count <= emit_limit) {
        std::sort(search.found.begin(), search.found.end());
        for (auto& grid : search.found) census.patterns.emplace_back(m, n, std::move(grid));
    }
    return census;
}

std::uint64_t good_orbit_count(const GoodCensus& census) {
    if (census.rows * census.cols <= 1) return census.count;
    const std::uint64_t group = (census.rows == census.cols) ? 4 : 2;
    if (census.count % group != 0)
        throw std::logic_error("census count not divisible by symmetry group order");
    return census.count / group;
}

std::string to_text(const GoodCensus& census) {
    std::string out = std::to_string(census.rows) + " " + std::to_string(census.cols) +
                      " " + std::to_string(census.count) + "\n";
    for (const PermPattern& p : census.patterns) {
        out += "\n";
        out += to_text(p);
    }
    return out;
}

}  // namespace supmod
