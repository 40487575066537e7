#pragma once

#include <optional>
#include <string>

#include "supmod/matrix.hpp"

namespace supmod {

// Certificate that a matrix is not supmodular: a 2x2 submatrix on rows
// i < r and columns j < s whose antidiagonal sum exceeds its diagonal sum.
// Indices are 0-based here and 1-based in to_text().
struct ViolationCert {
    int i, r;
    int j, s;
    Rational deficit;  // (A(i,s) + A(r,j)) - (A(i,j) + A(r,s)), always > 0

    std::string to_text() const;
};

// Adjacent-window test: A(i,j) + A(i+1,j+1) >= A(i,j+1) + A(i+1,j) for all
// i < m-1, j < n-1. Examines exactly (m-1)(n-1) windows. Equivalent to the
// full test below; the equivalence is exercised heavily in the test suite.
bool is_supmodular_adjacent(const Matrix& a);

// Definition-level test over all row pairs i < r and column pairs j < s.
// Kept as the independent oracle for the adjacent-window reduction.
bool is_supmodular_full(const Matrix& a);

// First violated quadruple in lexicographic (i, j, r, s) order, or nullopt
// when the matrix is supmodular.
std::optional<ViolationCert> find_violation(const Matrix& a);

}  // namespace supmod
