#include "supmod/permute_search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "supmod/goodness.hpp"
#include "supmod/prng.hpp"
#include "supmod/supmodular.hpp"

namespace supmod {

namespace {

// Lexicographically smallest rank grid producing the given value layout:
// ties get consecutive ranks in cell order.
std::vector<int> stable_pattern(const std::vector<Rational>& values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[static_cast<std::size_t>(a)] <
                                                values[static_cast<std::size_t>(b)]; });
    std::vector<int> ranks(values.size());
    for (std::size_t t = 0; t < order.size(); ++t)
        ranks[static_cast<std::size_t>(order[t])] = static_cast<int>(t) + 1;
    return ranks;
}

bool full_check(int rows, int cols, const std::vector<Rational>& v) {
    auto at = [&](int i, int j) -> const Rational& {
        return v[static_cast<std::size_t>(i) * cols + j];
    };
    for (int i = 0; i < rows; ++i)
        for (int r = i + 1; r < rows; ++r)
            for (int j = 0; j < cols; ++j)
                for (int s = j + 1; s < cols; ++s)
                    if (at(i, j) + at(r, s) < at(i, s) + at(r, j)) return false;
    return true;
}

// Adjacent-window test of the rearrangement of `sorted` under `sigma`,
// evaluated through the ranks without materializing the matrix.
bool covers(const SortedEntries& sorted, const PermPattern& sigma) {
    const auto& v = sorted.values;
    for (int i = 0; i + 1 < sigma.rows(); ++i)
        for (int j = 0; j + 1 < sigma.cols(); ++j) {
            const Rational& d1 = v[static_cast<std::size_t>(sigma.rank(i, j)) - 1];
            const Rational& d2 = v[static_cast<std::size_t>(sigma.rank(i + 1, j + 1)) - 1];
            const Rational& x1 = v[static_cast<std::size_t>(sigma.rank(i, j + 1)) - 1];
            const Rational& x2 = v[static_cast<std::size_t>(sigma.rank(i + 1, j)) - 1];
            if (d1 + d2 < x1 + x2) return false;
        }
    return true;
}

// Backtracking placement of values (nonincreasing) into grid cells.
struct PlacementSearch {
    int m = 0, n = 0, total = 0;
    std::vector<Rational> values;  // nonincreasing
    std::vector<signed char> filled;
    std::vector<Rational> cell_value;
    std::vector<int> cell_for_step;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool out_of_budget = false;
    bool found = false;

    bool windows_ok(int c, int step) {
        const int ci = c / n, cj = c % n;
        for (int i = std::max(0, ci - 1); i <= std::min(m - 2, ci); ++i) {
            for (int j = std::max(0, cj - 1); j <= std::min(n - 2, cj); ++j) {
                const int d1 = i * n + j, x1 = i * n + j + 1;
                const int x2 = (i + 1) * n + j, d2 = (i + 1) * n + j + 1;
                const int placed = filled[d1] + filled[x1] + filled[x2] + filled[d2];
                if (placed == 4) {
                    if (cell_value[d1] + cell_value[d2] < cell_value[x1] + cell_value[x2])
                        return false;
                } else if (placed == 3) {
                    // One empty corner; every value still unplaced lies in
                    // [values.back(), values[step+1]]. If even the most
                    // favorable endpoint fails, the branch is dead.
                    const Rational& max_rem = values[static_cast<std::size_t>(step) + 1];
                    const Rational& min_rem = values.back();
                    if (!filled[d1] || !filled[d2]) {
                        const Rational& d_placed = filled[d1] ? cell_value[d1] : cell_value[d2];
                        if (d_placed + max_rem < cell_value[x1] + cell_value[x2]) return false;
                    } else {
                        const Rational& x_placed = filled[x1] ? cell_value[x1] : cell_value[x2];
                        if (cell_value[d1] + cell_value[d2] < x_placed + min_rem) return false;
                    }
                }
            }
        }
        return true;
    }

    // Places values[step..]; steps run 0..total-1.
    bool search(int step) {
        if (step == total) {
            found = true;
            return true;
        }
        // Equal values are interchangeable; force their cells into
        // increasing order so each distinct layout is visited once.
        int first_cell = 0;
        if (step > 0 && values[static_cast<std::size_t>(step)] ==
                            values[static_cast<std::size_t>(step) - 1])
            first_cell = cell_for_step[static_cast<std::size_t>(step) - 1] + 1;

        for (int c = first_cell; c < total; ++c) {
            if (filled[c]) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            filled[c] = 1;
            cell_value[c] = values[static_cast<std::size_t>(step)];
            cell_for_step[static_cast<std::size_t>(step)] = c;
            if (windows_ok(c, step) && search(step + 1)) return true;
            filled[c] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

std::string PermuteOutcome::to_text() const {
    std::string out;
    switch (status) {
        case Permutability::permutable: out = "permutable\n"; break;
        case Permutability::not_permutable: out = "not-permutable\n"; break;
        case Permutability::unknown: out = "unknown\n"; break;
    }
    if (pattern) out += supmod::to_text(*pattern);
    out += "nodes=" + std::to_string(nodes_explored) +
           " ms=" + std::to_string(elapsed.count() / 1000) + "\n";
    return out;
}

PermuteOutcome decide_permutable(const Matrix& a, std::uint64_t node_budget) {
    const auto start = std::chrono::steady_clock::now();

    PlacementSearch search;
    search.m = a.rows();
    search.n = a.cols();
    search.total = a.size();
    search.values = sort_entries(a).values;
    std::reverse(search.values.begin(), search.values.end());
    search.filled.assign(static_cast<std::size_t>(search.total), 0);
    search.cell_value.assign(static_cast<std::size_t>(search.total), Rational(0));
    search.cell_for_step.assign(static_cast<std::size_t>(search.total), -1);
    search.budget = node_budget;

    const bool hit = search.search(0);

    PermuteOutcome outcome;
    outcome.nodes_explored = search.nodes;
    if (hit) {
        PermPattern sigma(a.rows(), a.cols(), stable_pattern(search.cell_value));
        Matrix rearranged = apply_permutation(a, sigma);
        if (!is_supmodular_full(rearranged))
            throw std::logic_error("placement search produced a non-supmodular layout");
        outcome.status = Permutability::permutable;
        outcome.pattern = std::move(sigma);
    } else if (search.out_of_budget) {
        outcome.status = Permutability::unknown;
    } else {
        outcome.status = Permutability::not_permutable;
    }
    outcome.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    return outcome;
}

std::optional<PermPattern> brute_force_permutable(const Matrix& a, int cell_guard) {
    if (a.size() > cell_guard)
        throw ResourceError("brute-force search over " + std::to_string(a.size()) +
                            " cells exceeds the guard of " + std::to_string(cell_guard));

    std::vector<Rational> arrangement = sort_entries(a).values;
    std::optional<std::vector<int>> best;
    do {
        if (!full_check(a.rows(), a.cols(), arrangement)) continue;
        std::vector<int> candidate = stable_pattern(arrangement);
        if (!best || candidate < *best) best = std::move(candidate);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    if (!best) return std::nullopt;
    return PermPattern(a.rows(), a.cols(), std::move(*best));
}

PermPattern permute_3x4(const Matrix& a) {
    if (a.rows() == 4 && a.cols() == 3) return transpose(permute_3x4(transpose(a)));
    if (a.rows() != 3 || a.cols() != 4)
        throw DimensionError("permute_3x4 needs a 3x4 or 4x3 matrix, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));

    SortedEntries sorted = sort_entries(a);
    auto [sigma, tau] = cover_pair_3x4();
    const auto& v = sorted.values;
    PermPattern chosen = (v[7] + v[4] >= v[6] + v[5]) ? std::move(sigma) : std::move(tau);
    if (!is_supmodular_full(apply_permutation(sorted, chosen)))
        throw std::logic_error("3x4 cover selection produced a non-supmodular layout");
    return chosen;
}

CoverSet::CoverSet(std::vector<PermPattern> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw ValidationError("cover set must be nonempty");
    for (const PermPattern& p : patterns_)
        if (p.rows() != patterns_.front().rows() || p.cols() != patterns_.front().cols())
            throw DimensionError("cover set patterns must share one shape");
}

CoverSet parse_cover(std::string_view text) {
    std::vector<PermPattern> patterns;
    for (const std::string& block : split_blocks(text))
        patterns.push_back(parse_pattern(block));
    return CoverSet(std::move(patterns));
}

CoverTestReport random_cover_test(const CoverSet& set, std::uint64_t trials,
                                  std::uint64_t seed, long long lo, long long hi) {
    if (lo > hi) throw ValidationError("empty sampling range");
    std::mt19937_64 rng(seed);
    const int cells = set.rows() * set.cols();

    CoverTestReport report;
    report.trials = trials;
    std::vector<Rational> draw(static_cast<std::size_t>(cells));
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (auto& v : draw) v = Rational(uniform_int(rng, lo, hi));
        std::sort(draw.begin(), draw.end());
        SortedEntries entries{draw};
        bool covered = false;
        for (const PermPattern& sigma : set.patterns())
            if (covers(entries, sigma)) {
                covered = true;
                break;
            }
        if (!covered) {
            ++report.failures;
            if (!report.first_failure) report.first_failure = std::move(entries);
        }
    }
    return report;
}

std::optional<SortedEntries> refute_cover(const CoverSet& set, long long max_value) {
    if (max_value < 0) throw ValidationError("max_value must be nonnegative");
    const int cells = set.rows() * set.cols();
    std::vector<long long> seq(static_cast<std::size_t>(cells), 0);

    for (;;) {
        SortedEntries entries;
        entries.values.reserve(seq.size());
        for (long long x : seq) entries.values.emplace_back(x);

        bool covered = false;
        for (const PermPattern& sigma : set.patterns())
            if (covers(entries, sigma)) {
                covered = true;
                break;
            }
        if (!covered) return entries;

        // Next nondecreasing sequence in lexicographic order.
        int idx = cells - 1;
        while (idx >= 0 && seq[static_cast<std::size_t>(idx)] == max_value) --idx;
        if (idx < 0) return std::nullopt;
        const long long bumped = ++seq[static_cast<std::size_t>(idx)];
        for (int k = idx + 1; k < cells; ++k) seq[static_cast<std::size_t>(k)] = bumped;
    }
}

}  // namespace supmod
