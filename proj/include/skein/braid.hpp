#pragma once

#include "skein/permutation.hpp"

#include <string>
#include <vector>

namespace skein {

// Braid word on a fixed number of strands; letters are signed generator
// indices (+i for the positive crossing of strands i, i+1).
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord(int n, std::vector<int> ls);
    // whitespace-separated signed integers, e.g. "1 -2 1"
    static BraidWord parse(int n, const std::string& text);

    int writhe() const;
    Permutation permutation() const;
};

}  // namespace skein
