#include "skein/braid.hpp"
#include "skein/permutation.hpp"
#include "skein/young.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace skein;

TEST_CASE("composition is left to right") {
    const Permutation id3 = Permutation::identity(3);
    const Permutation s1 = Permutation::transposition(3, 1);
    CHECK(id3.compose(s1) == s1);
    CHECK(s1.compose(s1) == id3);
    const Permutation pi = transpose_permutation(YoungDiagram({4, 2, 1}));
    CHECK(pi.compose(pi.inverse()).is_identity());
    // the strand starting at i ends at rho(pi(i))
    const Permutation a = Permutation::from_one_line({2, 1, 3});
    const Permutation b = Permutation::from_one_line({1, 3, 2});
    CHECK(a.compose(b) == Permutation::from_one_line({3, 1, 2}));
    CHECK_THROWS_AS(a.compose(Permutation::identity(4)), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("length counts inversions") {
    CHECK(Permutation::identity(5).length() == 0);
    for (int i = 1; i < 5; ++i) CHECK(Permutation::transposition(5, i).length() == 1);
    CHECK(transpose_permutation(YoungDiagram({4, 2, 1})).length() == 9);
}

TEST_CASE("reduced words") {
    CHECK(reduced_word(Permutation::identity(4)).empty());
    CHECK(reduced_word(Permutation::transposition(2, 1)) == std::vector<int>{1});
    // the cycle (j ... n) has the descending word of length n - j
    for (int n = 2; n <= 6; ++n) {
        for (int j = 1; j <= n; ++j) {
            std::vector<int> expected;
            for (int i = n - 1; i >= j; --i) expected.push_back(i);
            CHECK(reduced_word(Permutation::cycle_range(n, j, n)) == expected);
        }
    }
    for (int n = 0; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const auto word = reduced_word(p);
            CHECK(static_cast<int>(word.size()) == p.length());
            Permutation rebuilt = Permutation::identity(n);
            for (int i : word) rebuilt = rebuilt.compose(Permutation::transposition(n, i));
            CHECK(rebuilt == p);
        }
    }
}

TEST_CASE("peeling the last strand") {
    {
        const auto [rest, j] = peel_last_strand(Permutation::identity(3));
        CHECK(rest == Permutation::identity(2));
        CHECK(j == 3);
    }
    {
        const auto [rest, j] = peel_last_strand(Permutation::from_one_line({2, 3, 1}));
        CHECK(rest.is_identity());
        CHECK(j == 1);
    }
    {
        const auto [rest, j] = peel_last_strand(Permutation::from_one_line({1, 3, 2}));
        CHECK(rest.is_identity());
        CHECK(j == 2);
    }
    for (int n = 1; n <= 6; ++n) {
        for (const Permutation& p : all_permutations(n)) {
            const auto [rest, j] = peel_last_strand(p);
            CHECK(p.length() == rest.length() + n - j);
            // reassemble: embed rest as fixing n, then append the cycle
            std::vector<int> images;
            for (int i = 1; i < n; ++i) images.push_back(rest(i));
            images.push_back(n);
            CHECK(Permutation::from_one_line(images).compose(
                      Permutation::cycle_range(n, j, n)) == p);
        }
    }
}

TEST_CASE("braid words") {
    const BraidWord w = BraidWord::parse(3, "1 -2 1");
    CHECK(w.letters == std::vector<int>{1, -2, 1});
    CHECK(w.writhe() == 1);
    CHECK(BraidWord::parse(2, "").letters.empty());
    CHECK_THROWS_AS(BraidWord::parse(2, "2"), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord::parse(2, "0"), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord::parse(2, "x"), std::invalid_argument);
    CHECK(BraidWord::parse(2, "1 1 1").permutation() == Permutation::transposition(2, 1));
}
