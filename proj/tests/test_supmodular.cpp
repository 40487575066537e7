#include <doctest.h>

#include <random>

#include "supmod/supmodular.hpp"
#include "test_util.hpp"

using namespace supmod;

namespace {

// Sign of the order-2 minor of exp(A) on rows {i,r} and columns {j,s},
// computed at the exponent level: exp is strictly increasing, so
// sign(e^x e^y - e^u e^v) = sign((x+y) - (u+v)), exactly.
int exp_minor_sign(const Matrix& a, int i, int r, int j, int s) {
    return ((a(i, j) + a(r, s)) - (a(i, s) + a(r, j))).sign();
}

}  // namespace

TEST_CASE("the worked rearrangement is supmodular") {
    Matrix m = testutil::example_rearranged();
    CHECK(is_supmodular_adjacent(m));
    CHECK(is_supmodular_full(m));
    CHECK(!find_violation(m).has_value());
}

TEST_CASE("single-row and single-column matrices are trivially supmodular") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const int n = static_cast<int>(uniform_int(rng, 1, 8));
        CHECK(is_supmodular_adjacent(testutil::random_matrix(rng, 1, n, -9, 9)));
        CHECK(is_supmodular_full(testutil::random_matrix(rng, 1, n, -9, 9)));
        CHECK(is_supmodular_full(testutil::random_matrix(rng, n, 1, -9, 9)));
    }
}

TEST_CASE("the antidiagonal 2x2 is not supmodular") {
    Matrix m = parse_matrix("0 1\n1 0");
    CHECK(!is_supmodular_adjacent(m));
    CHECK(!is_supmodular_full(m));

    auto cert = find_violation(m);
    REQUIRE(cert.has_value());
    CHECK(cert->i == 0);
    CHECK(cert->r == 1);
    CHECK(cert->j == 0);
    CHECK(cert->s == 1);
    CHECK(cert->deficit == Rational(2));
    CHECK(cert->to_text() == "violation i=1 j=1 r=2 s=2 deficit=2");
}

TEST_CASE("constant matrices are supmodular with all inequalities tight") {
    Matrix c = parse_matrix("3 3 3\n3 3 3\n3 3 3");
    CHECK(is_supmodular_full(c));
}

TEST_CASE("a non-adjacent violation is caught") {
    Matrix m = parse_matrix("0 0 1\n0 0 0\n1 0 0");
    CHECK(!is_supmodular_full(m));
    CHECK(!is_supmodular_adjacent(m));  // Lemma-1-equivalent

    // First violated quadruple in (i, j, r, s) order: rows {1,2}, cols
    // {1,3} already fail (0+0 < 1+0), before the corner window at rows
    // {1,3}, cols {1,3}.
    auto cert = find_violation(m);
    REQUIRE(cert.has_value());
    CHECK(cert->i == 0);
    CHECK(cert->j == 0);
    CHECK(cert->r == 1);
    CHECK(cert->s == 2);
    CHECK(cert->deficit == Rational(1));
}

TEST_CASE("violation certificates satisfy their own arithmetic") {
    std::mt19937_64 rng(17);
    int violations = 0;
    for (int t = 0; t < 400; ++t) {
        const int m = static_cast<int>(uniform_int(rng, 1, 5));
        const int n = static_cast<int>(uniform_int(rng, 1, 5));
        Matrix a = testutil::random_matrix(rng, m, n, -4, 4);
        auto cert = find_violation(a);
        CHECK(cert.has_value() == !is_supmodular_full(a));
        if (!cert) continue;
        ++violations;
        CHECK(cert->i < cert->r);
        CHECK(cert->j < cert->s);
        Rational deficit =
            (a(cert->i, cert->s) + a(cert->r, cert->j)) - (a(cert->i, cert->j) + a(cert->r, cert->s));
        CHECK(cert->deficit == deficit);
        CHECK(cert->deficit.sign() > 0);
    }
    CHECK(violations > 100);  // the sample must actually exercise the path
}

TEST_CASE("adjacent-window test equals the full test") {
    SUBCASE("exhaustive 2x2 and 2x3 over {0,1,2}") {
        for (int shape = 0; shape < 2; ++shape) {
            const int m = 2, n = shape == 0 ? 2 : 3;
            const int cells = m * n;
            int total = 1;
            for (int k = 0; k < cells; ++k) total *= 3;
            for (int code = 0; code < total; ++code) {
                std::vector<Rational> entries;
                int c = code;
                for (int k = 0; k < cells; ++k) {
                    entries.emplace_back(c % 3);
                    c /= 3;
                }
                Matrix a(m, n, std::move(entries));
                CHECK(is_supmodular_adjacent(a) == is_supmodular_full(a));
            }
        }
    }
    SUBCASE("randomized up to 6x6") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 10'000; ++t) {
            const int m = static_cast<int>(uniform_int(rng, 1, 6));
            const int n = static_cast<int>(uniform_int(rng, 1, 6));
            Matrix a = testutil::random_matrix(rng, m, n, -5, 5);
            CHECK(is_supmodular_adjacent(a) == is_supmodular_full(a));
        }
    }
}

TEST_CASE("supmodularity is preserved under transposition") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 2000; ++t) {
        const int m = static_cast<int>(uniform_int(rng, 1, 5));
        const int n = static_cast<int>(uniform_int(rng, 1, 5));
        Matrix a = testutil::random_matrix(rng, m, n, -5, 5);
        CHECK(is_supmodular_full(a) == is_supmodular_full(transpose(a)));
    }
}

TEST_CASE("supmodularity is 2-total-positivity of the entrywise exponential") {
    // Order-1 minors of exp(A) are positive outright, so 2-total-positivity
    // is exactly nonnegativity of the order-2 minors, whose signs are
    // computed exactly from the exponents.
    std::mt19937_64 rng(31);
    for (int t = 0; t < 2000; ++t) {
        const int m = static_cast<int>(uniform_int(rng, 2, 5));
        const int n = static_cast<int>(uniform_int(rng, 2, 5));
        Matrix a = testutil::random_matrix(rng, m, n, -5, 5);
        bool all_minors_nonneg = true;
        for (int i = 0; i < m && all_minors_nonneg; ++i)
            for (int r = i + 1; r < m && all_minors_nonneg; ++r)
                for (int j = 0; j < n && all_minors_nonneg; ++j)
                    for (int s = j + 1; s < n; ++s)
                        if (exp_minor_sign(a, i, r, j, s) < 0) {
                            all_minors_nonneg = false;
                            break;
                        }
        CHECK(is_supmodular_full(a) == all_minors_nonneg);
    }
}
