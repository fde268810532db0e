#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Bijection of {1..n}.  Composition is left-to-right, matching the braid
// stacking convention: compose(p, q) sends i to q(p(i)), i.e. the strand
// starting at i in "p above q" ends at q(p(i)).
class Permutation {
public:
    Permutation() = default;  // degree 0

    static Permutation identity(int n);
    // one-line notation, 1-based; validates that the entries are a bijection
    static Permutation from_one_line(const std::vector<int>& images);
    // elementary transposition (i, i+1) in S_n, 1 <= i < n
    static Permutation transposition(int n, int i);
    // the cycle (j j+1 ... m) in S_n, sending j -> j+1, ..., m -> j
    static Permutation cycle_range(int n, int j, int m);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1] + 1; }  // 1-based
    int preimage(int value) const;                           // 1-based

    Permutation compose(const Permutation& then) const;
    Permutation inverse() const;

    // inversion count; the writhe of the positive permutation braid
    int length() const;
    bool is_identity() const;

    // this * (i, i+1): swaps the values i and i+1
    Permutation swap_values(int i) const;
    // (i, i+1) * this: swaps the entries at positions i and i+1
    Permutation swap_positions(int i) const;
    // true iff right-multiplying by (i, i+1) increases length
    bool right_lengthens(int i) const { return preimage(i) < preimage(i + 1); }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const;  // one-line, e.g. "1 4 6 7 2 5 3"

private:
    std::vector<int> img_;  // 0-based: img_[i] is the image of i
};

// Lexicographically smallest reduced word for the positive permutation
// braid of p; letters are generator indices, word length equals length(p).
std::vector<int> reduced_word(const Permutation& p);

// Splits p in S_n as p' composed with the cycle (j j+1 ... n) where
// j = p(n) and p' fixes n; returns (p' restricted to S_{n-1}, j).
// Lengths add: length(p) = length(p') + n - j.
std::pair<Permutation, int> peel_last_strand(const Permutation& p);

// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace skein
