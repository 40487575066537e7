#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "supmod/errors.hpp"
#include "supmod/rational.hpp"

namespace supmod {

// Dense m x n grid of exact scalars, row-major, immutable after
// construction. Indices are 0-based in the API; all serialized text and
// error messages are 1-based.
class Matrix {
public:
    Matrix(int rows, int cols, std::vector<Rational> entries);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int size() const noexcept { return rows_ * cols_; }

    const Rational& operator()(int i, int j) const noexcept {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

// m x n grid whose cells hold each rank 1..mn exactly once. rank(i,j) = k
// means cell (i,j) of the rearranged matrix receives the k-th smallest
// entry. The constructor validates the permutation property and names the
// first offending value otherwise.
class PermPattern {
public:
    PermPattern(int rows, int cols, std::vector<int> ranks);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int size() const noexcept { return rows_ * cols_; }

    int rank(int i, int j) const noexcept {
        return ranks_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<int>& ranks() const noexcept { return ranks_; }

    friend bool operator==(const PermPattern&, const PermPattern&) = default;

private:
    int rows_;
    int cols_;
    std::vector<int> ranks_;
};

// The entries of a matrix in nondecreasing order.
struct SortedEntries {
    std::vector<Rational> values;

    friend bool operator==(const SortedEntries&, const SortedEntries&) = default;
};

SortedEntries sort_entries(const Matrix& a);

// Rearranged matrix: cell (i,j) receives the sigma(i,j)-th smallest entry
// of a. Well defined under ties since tied entries are equal scalars.
Matrix apply_permutation(const Matrix& a, const PermPattern& sigma);
Matrix apply_permutation(const SortedEntries& sorted, const PermPattern& sigma);

Matrix transpose(const Matrix& a);
PermPattern transpose(const PermPattern& sigma);
PermPattern rotate180(const PermPattern& sigma);

// Text format: one row per line, entries separated by spaces or tabs.
// Tokens are integers `-?[0-9]+`, fractions `-?[0-9]+/[1-9][0-9]*`, or
// decimals `-?[0-9]+\.[0-9]+` (converted to exact fractions).
Matrix parse_matrix(std::string_view text);
PermPattern parse_pattern(std::string_view text);

// All scalar tokens of the text in reading order, line structure ignored.
std::vector<Rational> parse_scalars(std::string_view text);

// Splits text into chunks of contiguous non-blank lines. Cover-set and
// instance files use blank lines as block separators.
std::vector<std::string> split_blocks(std::string_view text);

std::string to_text(const Matrix& a);
std::string to_text(const PermPattern& sigma);
std::string to_text(const SortedEntries& entries);

}  // namespace supmod
