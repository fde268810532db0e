#include "skein/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative degree");
    Permutation p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    Permutation p;
    p.img_.reserve(n);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("Permutation: not a bijection of {1..n}");
        seen[v - 1] = true;
        p.img_.push_back(v - 1);
    }
    return p;
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("Permutation: transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::cycle_range(int n, int j, int m) {
    if (j < 1 || m < j || m > n) throw std::invalid_argument("Permutation: bad cycle range");
    Permutation p = identity(n);
    for (int i = j; i < m; ++i) p.img_[i - 1] = i;  // i -> i+1
    p.img_[m - 1] = j - 1;
    return p;
}

int Permutation::preimage(int value) const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] == value - 1) return i + 1;
    throw std::invalid_argument("Permutation: value out of range");
}

Permutation Permutation::compose(const Permutation& then) const {
    if (degree() != then.degree())
        throw std::invalid_argument("Permutation: degree mismatch in composition");
    Permutation out;
    out.img_.reserve(img_.size());
    for (int v : img_) out.img_.push_back(then.img_[v]);
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) out.img_[img_[i]] = i;
    return out;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::swap_values(int i) const {
    Permutation out(*this);
    for (auto& v : out.img_) {
        if (v == i - 1)
            v = i;
        else if (v == i)
            v = i - 1;
    }
    return out;
}

Permutation Permutation::swap_positions(int i) const {
    Permutation out(*this);
    std::swap(out.img_[i - 1], out.img_[i]);
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < degree(); ++i) {
        if (i) os << ' ';
        os << img_[i] + 1;
    }
    return os.str();
}

std::vector<int> reduced_word(const Permutation& p) {
    // Greedy: repeatedly strip the smallest descent from the left.  The word
    // read left-to-right multiplies back to p in stacking order.
    std::vector<int> word;
    Permutation cur = p;
    const int n = cur.degree();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < n; ++i) {
            if (cur(i) > cur(i + 1)) {
                word.push_back(i);
                cur = cur.swap_positions(i);
                changed = true;
                break;
            }
        }
    }
    return word;
}

std::pair<Permutation, int> peel_last_strand(const Permutation& p) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("peel_last_strand: empty permutation");
    const int j = p(n);
    std::vector<int> images;
    images.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        const int v = p(i);
        images.push_back(v < j ? v : v - 1);
    }
    return {Permutation::from_one_line(images), j};
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace skein
