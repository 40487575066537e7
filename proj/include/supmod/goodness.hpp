#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "supmod/matrix.hpp"

namespace supmod {

// The four ranks of the adjacent window at (i,j):
//   r = sigma(i,j)    p = sigma(i,j+1)
//   q = sigma(i+1,j)  s = sigma(i+1,j+1)
struct WindowRoles {
    int r, p, q, s;
};

WindowRoles window_roles(const PermPattern& sigma, int i, int j);

// A pattern is good on window (i,j) when the largest of the four window
// ranks sits on the main diagonal (r or s) and the smallest on the
// antidiagonal (p or q). Good-on-(i,j) is exactly the condition under
// which every rearranged matrix satisfies the window inequality there.
bool is_good_on(const PermPattern& sigma, int i, int j);

// Good on every adjacent window; equivalent to universality of the
// pattern (every rearranged matrix comes out supmodular).
bool is_good_everywhere(const PermPattern& sigma);

// A universal pattern for the given shape, when one exists: row-major for
// a single row, the reversed-top-row pattern for two rows, one fixed 3x3
// pattern. No other shape with m <= n admits a universal pattern, so
// nullopt is returned for all of them. Requires m <= n; transpose first
// otherwise.
std::optional<PermPattern> universal_pattern(int m, int n);

// The fixed pair {sigma, tau} of 3x4 patterns that together cover every
// 3x4 matrix: one of the two rearrangements is always supmodular.
std::pair<PermPattern, PermPattern> cover_pair_3x4();

// For a window (i,j) on which sigma is NOT good, constructs a matrix over
// {1,2} whose rearrangement violates the window inequality at (i,j) with
// deficit exactly 1. The entries are the minimal nondecreasing sequence
// compatible with the construction, laid out in row-major order. Throws
// ValidationError when the window is good.
Matrix violating_witness(const PermPattern& sigma, int i, int j);

// Exhaustive census of the patterns of a given shape that are good on
// every window.
struct GoodCensus {
    int rows = 0;
    int cols = 0;
    std::uint64_t count = 0;
    // Populated only when count <= the emit limit, in lexicographic order
    // of the row-major rank sequence.
    std::vector<PermPattern> patterns;
};

// Backtracking census: ranks are placed from mn down to 1, and a branch
// dies as soon as a window's first filled cell is off the main diagonal
// or its last empty cell is on it (placement order makes the first fill
// the window max and the last fill the window min). cell_guard bounds
// m*n; raise it explicitly for larger searches.
GoodCensus enumerate_good(int m, int n, std::size_t emit_limit = 16,
                          int cell_guard = 16);

// Number of orbits of the good-everywhere patterns under 180-degree
// rotation and, on square shapes, transposition. No nontrivial symmetry
// fixes a pattern (ranks are distinct), so every orbit has full group
// size and the census count divides evenly.
std::uint64_t good_orbit_count(const GoodCensus& census);

// Census serialization: header line "m n count", then any emitted
// patterns separated by blank lines.
std::string to_text(const GoodCensus& census);

}  // namespace supmod
