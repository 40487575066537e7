#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supmod/matrix.hpp"

namespace supmod {

enum class Permutability { permutable, not_permutable, unknown };

struct PermuteOutcome {
    Permutability status = Permutability::unknown;
    std::optional<PermPattern> pattern;  // present iff status == permutable
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};

    // "permutable" / "not-permutable" / "unknown", optional pattern block,
    // then "nodes=<k> ms=<t>".
    std::string to_text() const;
};

// Decides whether the entries of a can be rearranged into a supmodular
// matrix. Backtracking over value placements, largest value first, with
// equal entries treated as one symbol (placed in canonical cell order) so
// ties do not multiply the search space. A branch is cut when a completed
// adjacent window violates the inequality or a window with one empty cell
// cannot be finished by any remaining value. Exceeding the node budget
// yields status unknown, never a wrong answer. A permutable verdict is
// re-verified against the full definition before being returned.
PermuteOutcome decide_permutable(const Matrix& a,
                                 std::uint64_t node_budget = 10'000'000);

// Independent oracle: walks every distinct arrangement of the entry
// multiset and returns the lexicographically smallest pattern whose
// rearrangement is supmodular (by the full definition), or nullopt.
// Guarded to small grids.
std::optional<PermPattern> brute_force_permutable(const Matrix& a, int cell_guard = 9);

// Always-successful 3x4 (or 4x3) rearrangement: picks one of the two
// cover patterns by comparing a8+a5 against a7+a6 in the sorted entries,
// ties going to the first pattern. The choice is verified supmodular
// before returning.
PermPattern permute_3x4(const Matrix& a);

// Nonempty set of patterns of one shape, a candidate for covering every
// matrix of that shape.
class CoverSet {
public:
    explicit CoverSet(std::vector<PermPattern> patterns);

    const std::vector<PermPattern>& patterns() const noexcept { return patterns_; }
    int rows() const noexcept { return patterns_.front().rows(); }
    int cols() const noexcept { return patterns_.front().cols(); }

private:
    std::vector<PermPattern> patterns_;
};

// Cover-set file: pattern blocks separated by blank lines.
CoverSet parse_cover(std::string_view text);

struct CoverTestReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;  // trials no pattern rendered supmodular
    std::optional<SortedEntries> first_failure;
};

// Samples sorted integer sequences with entries uniform in [lo, hi] and
// counts how many are covered by no pattern in the set. Reproducible for
// a fixed seed.
CoverTestReport random_cover_test(const CoverSet& set, std::uint64_t trials,
                                  std::uint64_t seed, long long lo = -10,
                                  long long hi = 10);

// Exhaustively walks all nondecreasing sequences over {0..max_value} in
// lexicographic order and returns the first one no pattern in the set
// covers. A witness rigorously refutes the cover; nullopt only means no
// witness exists within this alphabet, not that the set covers.
std::optional<SortedEntries> refute_cover(const CoverSet& set, long long max_value = 3);

}  // namespace supmod
