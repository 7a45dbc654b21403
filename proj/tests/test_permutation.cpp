#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "staircase/permutation.hpp"
#include "staircase/verify.hpp"

using namespace staircase;

namespace {

const Permutation kPaperExample({5, 7, 6, 2, 1, 8, 3, 4});

// Independent inversion counter for freezing expected lengths.
int brute_force_inversions(const std::vector<int>& values) {
    int count = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] > values[j]) ++count;
    return count;
}

} // namespace

TEST_CASE("identity permutations") {
    CHECK(Permutation::identity(3).values() == std::vector<int>{1, 2, 3});
    CHECK(Permutation::identity(1).values() == std::vector<int>{1});
    CHECK(Permutation::identity(8).values() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK_THROWS_AS(Permutation::identity(0), index_error);
}

TEST_CASE("length counts inversions") {
    CHECK(length(Permutation::identity(3)) == 0);
    CHECK(brute_force_inversions(kPaperExample.values()) == 16);
    CHECK(length(kPaperExample) == 16);
    CHECK(length(Permutation({4, 3, 2, 1})) == 6);
}

TEST_CASE("right multiplication by a transposition swaps positions") {
    CHECK(multiply_right_transposition(Permutation({3, 7, 6, 2, 1, 8, 5, 4}), {1, 7}) ==
          kPaperExample);
    CHECK(multiply_right_transposition(Permutation({5, 7, 4, 2, 1, 8, 3, 6}), {3, 8}) ==
          kPaperExample);
    CHECK(multiply_right_transposition(Permutation({1, 2, 3}), {1, 2}) ==
          Permutation({2, 1, 3}));
    CHECK_THROWS_AS(multiply_right_transposition(Permutation({1, 2, 3}), {2, 4}), index_error);
}

TEST_CASE("covering oracle on the worked examples") {
    CHECK(bruhat_cover_oracle(kPaperExample, Permutation({3, 7, 6, 2, 1, 8, 5, 4})) ==
          Transposition{1, 7});
    CHECK(bruhat_cover_oracle(kPaperExample, Permutation({5, 7, 4, 2, 1, 8, 3, 6})) ==
          Transposition{3, 8});
    CHECK_FALSE(bruhat_cover_oracle(Permutation({1, 2, 3}), Permutation({1, 2, 3})));
    CHECK_THROWS_AS(bruhat_cover_oracle(Permutation({1, 2}), Permutation({1, 2, 3})),
                    degree_mismatch);
}

TEST_CASE("all lower covers") {
    CHECK(all_bruhat_lower_covers(Permutation::identity(5)).empty());

    const auto atom = all_bruhat_lower_covers(Permutation({2, 1}));
    REQUIRE(atom.size() == 1);
    CHECK(atom[0].first == Permutation::identity(2));
    CHECK(atom[0].second == Transposition{1, 2});

    // Cardinality recomputed by brute force over all transpositions and
    // cross-checked against the composition-side enumeration in
    // test_poset.cpp: ten transpositions pass the no-intermediate test.
    const auto covers = all_bruhat_lower_covers(kPaperExample);
    CHECK(covers.size() == 10);
    const auto has = [&](const Permutation& w, Transposition t) {
        return std::find(covers.begin(), covers.end(),
                         std::pair<Permutation, Transposition>{w, t}) != covers.end();
    };
    CHECK(has(Permutation({3, 7, 6, 2, 1, 8, 5, 4}), {1, 7}));
    CHECK(has(Permutation({5, 7, 4, 2, 1, 8, 3, 6}), {3, 8}));
    for (const auto& [lower, witness] : covers) {
        CHECK(length(lower) == 15);
        CHECK(bruhat_cover_oracle(kPaperExample, lower) == witness);
    }
}

TEST_CASE("encode on the worked examples") {
    CHECK(encode(kPaperExample) == Composition({4, 5, 4, 1, 0, 2, 0}, 8));
    CHECK(encode(Permutation::identity(6)) == Composition::zero(6));
    CHECK(encode(Permutation({3, 7, 6, 2, 1, 8, 5, 4})) ==
          Composition({2, 5, 4, 1, 0, 2, 1}, 8));
}

TEST_CASE("extended code count") {
    CHECK(extended_code_count(kPaperExample, 1, 7) == 2);
    CHECK(extended_code_count(kPaperExample, 3, 4) == 0);
    CHECK(extended_code_count(kPaperExample, 2, 9) == 5);
    CHECK_THROWS_AS(extended_code_count(kPaperExample, 0, 3), index_error);
    CHECK_THROWS_AS(extended_code_count(kPaperExample, 2, 10), index_error);
    CHECK_THROWS_AS(extended_code_count(kPaperExample, 4, 4), index_error);
}

TEST_CASE("codes of random permutations stay in the staircase") {
    std::mt19937 rng(20240817);
    for (int n = 1; n <= 10; ++n) {
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
        for (int trial = 0; trial < 50; ++trial) {
            std::shuffle(values.begin(), values.end(), rng);
            const Permutation w(values);
            const Composition code = encode(w); // constructor enforces bounds
            CHECK(code.degree() == n);
            CHECK(length(w) == weight(code));
        }
    }
}

TEST_CASE("encode and decode are mutually inverse, exhaustively") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            CHECK(decode(encode(w)) == w);
        }
}

TEST_CASE("tail column of the extended count is the code") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            const Composition code = encode(w);
            for (int i = 1; i <= n - 1; ++i)
                CHECK(extended_code_count(w, i, n + 1) == code.part(i));
        }
}

TEST_CASE("permutation text round trip and rejection") {
    CHECK(to_string(kPaperExample) == "5,7,6,2,1,8,3,4");
    CHECK(parse_permutation("5,7,6,2,1,8,3,4") == kPaperExample);
    CHECK_THROWS_AS(parse_permutation("1,1,2"), parse_error);  // duplicate
    CHECK_THROWS_AS(parse_permutation("1,2,4"), parse_error);  // gap
    CHECK_THROWS_AS(parse_permutation(""), parse_error);
    CHECK_THROWS_AS(parse_permutation("1,2,x"), parse_error);
}
