#include <doctest.h>

#include <random>

#include "supmod/goodness.hpp"
#include "supmod/permute_search.hpp"
#include "supmod/supmodular.hpp"
#include "test_util.hpp"

using namespace supmod;

namespace {

Matrix matrix_of_sorted(int m, int n, const std::vector<long long>& seq) {
    std::vector<Rational> entries(seq.begin(), seq.end());
    return Matrix(m, n, std::move(entries));
}

CoverSet cover_sigma_only() {
    auto [sigma, tau] = cover_pair_3x4();
    (void)tau;
    return CoverSet({sigma});
}

CoverSet cover_pair() {
    auto [sigma, tau] = cover_pair_3x4();
    return CoverSet({sigma, tau});
}

}  // namespace

TEST_CASE("the worked example is permutable") {
    Matrix a = testutil::example_matrix();
    PermuteOutcome outcome = decide_permutable(a);
    REQUIRE(outcome.status == Permutability::permutable);
    REQUIRE(outcome.pattern.has_value());
    CHECK(is_supmodular_full(apply_permutation(a, *outcome.pattern)));
    CHECK(outcome.nodes_explored > 0);

    // The pattern from the worked example is one of the valid answers.
    CHECK(is_supmodular_full(apply_permutation(a, testutil::example_pattern())));
}

TEST_CASE("two-row matrices are always permutable") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(uniform_int(rng, 2, 5));
        Matrix a = testutil::random_matrix(rng, 2, n, -9, 9);
        CHECK(decide_permutable(a).status == Permutability::permutable);
        CHECK(is_supmodular_full(apply_permutation(a, *universal_pattern(2, n))));
    }
}

TEST_CASE("constant matrices are permutable under every pattern") {
    Matrix c = parse_matrix("4 4 4\n4 4 4");
    CHECK(decide_permutable(c).status == Permutability::permutable);
    std::mt19937_64 rng(59);
    for (int t = 0; t < 10; ++t)
        CHECK(is_supmodular_full(apply_permutation(c, testutil::random_pattern(rng, 2, 3))));
}

TEST_CASE("budget exhaustion reports unknown") {
    PermuteOutcome outcome = decide_permutable(testutil::example_matrix(), 2);
    CHECK(outcome.status == Permutability::unknown);
    CHECK(!outcome.pattern.has_value());
    CHECK(outcome.to_text().substr(0, 8) == "unknown\n");
}

TEST_CASE("outcome serialization") {
    PermuteOutcome outcome = decide_permutable(parse_matrix("5"));
    std::string text = outcome.to_text();
    CHECK(text.substr(0, 11) == "permutable\n");
    CHECK(text.find("1\n") != std::string::npos);
    CHECK(text.find("nodes=") != std::string::npos);
    CHECK(text.find(" ms=") != std::string::npos);
}

TEST_CASE("brute force: fixed expectations") {
    // Entries {0,0,1,1}: the row-major identity already yields the
    // supmodular [[0,0],[1,1]] (its one window is tight), and the
    // identity is lexicographically first among all patterns.
    auto found = brute_force_permutable(parse_matrix("0 1\n1 0"));
    REQUIRE(found.has_value());
    CHECK(*found == parse_pattern("1 2\n3 4"));

    // Single rows sort into the identity.
    auto row = brute_force_permutable(parse_matrix("9 -2 4 0"));
    REQUIRE(row.has_value());
    CHECK(*row == parse_pattern("1 2 3 4"));

    auto worked = brute_force_permutable(testutil::example_matrix());
    REQUIRE(worked.has_value());
    CHECK(is_supmodular_full(apply_permutation(testutil::example_matrix(), *worked)));

    CHECK_THROWS_AS(brute_force_permutable(parse_matrix("1 2 3 4 5\n6 7 8 9 10")),
                    ResourceError);
}

TEST_CASE("decide and brute force agree on permutability") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 300; ++t) {
        const int m = static_cast<int>(uniform_int(rng, 1, 3));
        const int max_n = m == 1 ? 9 : (m == 2 ? 4 : 3);
        const int n = static_cast<int>(uniform_int(rng, 1, max_n));
        Matrix a = testutil::random_matrix(rng, m, n, 0, 3);
        PermuteOutcome outcome = decide_permutable(a);
        auto oracle = brute_force_permutable(a);
        REQUIRE(outcome.status != Permutability::unknown);
        CHECK((outcome.status == Permutability::permutable) == oracle.has_value());
        if (oracle) CHECK(is_supmodular_full(apply_permutation(a, *oracle)));
    }
}

TEST_CASE("the decision depends only on the sorted entries") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 50; ++t) {
        const int m = 3, n = 3;
        Matrix a = testutil::random_matrix(rng, m, n, -3, 3);
        PermuteOutcome base = decide_permutable(a);

        // Shuffle the arrangement; the verdict and the work must not move.
        Matrix shuffled = apply_permutation(a, testutil::random_pattern(rng, m, n));
        PermuteOutcome again = decide_permutable(shuffled);
        CHECK(again.status == base.status);
        CHECK(again.nodes_explored == base.nodes_explored);
        if (base.pattern) CHECK(*again.pattern == *base.pattern);
    }
}

TEST_CASE("permutability is invariant under adding a constant") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 50; ++t) {
        Matrix a = testutil::random_matrix(rng, 3, 3, -3, 3);
        std::vector<Rational> shifted;
        for (const Rational& v : a.entries()) shifted.push_back(v + Rational(7));
        Matrix b(3, 3, std::move(shifted));
        CHECK(decide_permutable(a).status == decide_permutable(b).status);
    }
}

TEST_CASE("permute_3x4 case split") {
    // Sorted entries 1..12: a8+a5 = 13 >= 13 = a7+a6, so the first
    // pattern is chosen.
    auto [sigma, tau] = cover_pair_3x4();
    std::vector<long long> seq{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    CHECK(permute_3x4(matrix_of_sorted(3, 4, seq)) == sigma);

    // Tie case: a8+a5 = 2+0, a7+a6 = 1+1; ties go to sigma.
    std::vector<long long> tie{0, 0, 0, 0, 0, 1, 1, 2, 2, 2, 2, 2};
    CHECK(permute_3x4(matrix_of_sorted(3, 4, tie)) == sigma);

    // A strict tau case: a8+a5 < a7+a6 needs a5 < a6 = a7 <= a8.
    std::vector<long long> tau_seq{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1};
    CHECK(permute_3x4(matrix_of_sorted(3, 4, tau_seq)) == tau);

    CHECK_THROWS_AS(permute_3x4(parse_matrix("1 2\n3 4")), DimensionError);
}

TEST_CASE("permute_3x4 transposes 4x3 inputs") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 100; ++t) {
        Matrix a = testutil::random_matrix(rng, 4, 3, -9, 9);
        PermPattern pat = permute_3x4(a);
        CHECK(pat.rows() == 4);
        CHECK(pat.cols() == 3);
        CHECK(is_supmodular_full(apply_permutation(a, pat)));
    }
}

TEST_CASE("permute_3x4 always verifies supmodular on random input") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 5000; ++t) {
        Matrix a = testutil::random_matrix(rng, 3, 4, -20, 20);
        CHECK(is_supmodular_full(apply_permutation(a, permute_3x4(a))));
    }
}

TEST_CASE("cover set validation and parsing") {
    CHECK_THROWS_AS(CoverSet({}), ValidationError);
    CHECK_THROWS_AS(CoverSet({parse_pattern("1 2\n3 4"), parse_pattern("1 2 3 4")}),
                    DimensionError);

    auto [sigma, tau] = cover_pair_3x4();
    CoverSet set = parse_cover(to_text(sigma) + "\n" + to_text(tau));
    REQUIRE(set.patterns().size() == 2);
    CHECK(set.patterns()[0] == sigma);
    CHECK(set.patterns()[1] == tau);
    CHECK(set.rows() == 3);
    CHECK(set.cols() == 4);
}

TEST_CASE("random cover test: the pair covers, one pattern alone does not") {
    CoverTestReport pair_report = random_cover_test(cover_pair(), 2000, 1);
    CHECK(pair_report.failures == 0);
    CHECK(!pair_report.first_failure.has_value());

    CoverTestReport solo_report = random_cover_test(cover_sigma_only(), 10'000, 1);
    CHECK(solo_report.failures >= 1);
    REQUIRE(solo_report.first_failure.has_value());
    // The reported failure really is uncovered.
    auto [sigma, tau] = cover_pair_3x4();
    (void)tau;
    CHECK(!is_supmodular_full(apply_permutation(*solo_report.first_failure, sigma)));

    // Same seed, same report.
    CoverTestReport repeat = random_cover_test(cover_sigma_only(), 10'000, 1);
    CHECK(repeat.failures == solo_report.failures);
    CHECK(repeat.first_failure == solo_report.first_failure);
}

TEST_CASE("the two-row universal pattern covers its whole shape") {
    for (int n = 2; n <= 4; ++n) {
        CoverSet set{{*universal_pattern(2, n)}};
        CHECK(random_cover_test(set, 2000, 9).failures == 0);
        CHECK(!refute_cover(set, 3).has_value());
    }
}

TEST_CASE("refute_cover finds the canonical witness against one 3x4 pattern") {
    auto witness = refute_cover(cover_sigma_only(), 2);
    REQUIRE(witness.has_value());

    // First nondecreasing sequence over {0,1,2} breaking a8+a5 >= a7+a6.
    std::vector<Rational> expected{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1};
    CHECK(witness->values == expected);

    auto [sigma, tau] = cover_pair_3x4();
    (void)tau;
    CHECK(!is_supmodular_full(apply_permutation(*witness, sigma)));
}

TEST_CASE("refute_cover clears the full cover pair") {
    CHECK(!refute_cover(cover_pair(), 3).has_value());
}

TEST_CASE("refute_cover clears good-everywhere singletons") {
    CHECK(!refute_cover(CoverSet({*universal_pattern(3, 3)}), 3).has_value());
    CHECK(!refute_cover(CoverSet({parse_pattern("4 3\n1 2")}), 4).has_value());
}
