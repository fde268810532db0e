#include "skein_oracle.hpp"

#include "skein/hecke.hpp"

#include <doctest.h>

#include <random>

using namespace skein;

TEST_CASE("oracle values on hand-computed closures") {
    const RatFunc delta = loop_factor();
    CHECK(oracle::framed_value(BraidWord(1, {})) == delta);
    CHECK(oracle::framed_value(BraidWord(2, {})) == delta * delta);
    CHECK(oracle::framed_value(BraidWord(2, {1})) == curl_factor(+1) * delta);
    CHECK(oracle::framed_value(BraidWord(2, {-1})) == curl_factor(-1) * delta);
    // positive Hopf link: x^2 delta (z v^-1 + delta)
    const RatFunc zvinv(LaurentPoly::z() * LaurentPoly::v(-1));
    CHECK(oracle::framed_value(BraidWord(2, {1, 1})) ==
          RatFunc(LaurentPoly::x(2)) * delta * (zvinv + delta));
    CHECK(oracle::normalized_value(BraidWord(1, {})) == RatFunc(1));
}

TEST_CASE("oracle agrees with the closure pipeline") {
    const std::vector<BraidWord> words{
        BraidWord(2, {1, 1, 1}),  BraidWord(2, {-1, -1, -1}), BraidWord(3, {1, 2}),
        BraidWord(3, {1, -2}),    BraidWord(3, {1, 1, 2, 2}), BraidWord(4, {1, -2, 3}),
        BraidWord(3, {-1, 2, -1, 2}),
    };
    for (const BraidWord& w : words) {
        CHECK(framed_homfly(w) == oracle::framed_value(w));
        CHECK(normalized_homfly(w) == oracle::normalized_value(w));
    }
}

TEST_CASE("oracle agrees with the closure pipeline on random words") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> strands(2, 4);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = strands(rng);
        std::uniform_int_distribution<int> gen(1, n - 1);
        std::vector<int> letters;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
        const BraidWord w(n, letters);
        CHECK(framed_homfly(w) == oracle::framed_value(w));
    }
}
