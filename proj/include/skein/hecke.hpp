#pragma once

#include "skein/braid.hpp"
#include "skein/laurent.hpp"
#include "skein/limits.hpp"
#include "skein/permutation.hpp"
#include "skein/ratfunc.hpp"
#include "skein/young.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Element of the Hecke algebra H_n in the positive-permutation-braid basis:
// a finite sum of basis permutations with coefficients in a scalar ring S
// (LaurentPoly for constructions, RatFunc once closures or inverse scalars
// enter).  Zero coefficients are never stored.
template <typename S>
class HeckeElement {
public:
    explicit HeckeElement(int strands) : strands_(strands) {
        if (strands < 0) throw std::invalid_argument("HeckeElement: negative strand count");
    }

    static HeckeElement identity(int strands) {
        return basis(strands, Permutation::identity(strands));
    }

    static HeckeElement basis(int strands, const Permutation& p) {
        if (p.degree() != strands)
            throw std::invalid_argument("HeckeElement: permutation degree mismatch");
        HeckeElement out(strands);
        out.terms_.emplace(p, S(1));
        return out;
    }

    // sigma_i, the positive crossing of strands i, i+1
    static HeckeElement generator(int strands, int i) {
        return basis(strands, Permutation::transposition(strands, i));
    }

    int strands() const { return strands_; }
    const std::map<Permutation, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? S() : it->second;
    }

    void add_term(const Permutation& p, S c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(p, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_scaled(const HeckeElement& o, const S& c) {
        require_same(o);
        if (c.is_zero()) return;
        for (const auto& [p, pc] : o.terms_) add_term(p, pc * c);
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        require_same(o);
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }

    HeckeElement& operator-=(const HeckeElement& o) {
        require_same(o);
        for (const auto& [p, c] : o.terms_) add_term(p, c * S(-1));
        return *this;
    }

    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

    HeckeElement& scale(const S& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, pc] : terms_) pc = pc * c;
        return *this;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        if (a.strands_ != b.strands_ || a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << '(' << c.to_string() << ")*w[" << p.to_string() << ']';
        }
        return os.str();
    }

private:
    int strands_;
    std::map<Permutation, S> terms_;

    void require_same(const HeckeElement& o) const {
        if (strands_ != o.strands_)
            throw std::invalid_argument("HeckeElement: strand count mismatch");
    }
};

// Right multiplication by sigma_i.  On a basis braid the product either
// stays reduced or rewrites through the quadratic relation
// sigma_i^2 = x*z*sigma_i + x^2.
template <typename S>
HeckeElement<S> right_multiply_generator(const HeckeElement<S>& h, int i) {
    if (i < 1 || i >= h.strands())
        throw std::invalid_argument("right_multiply_generator: index out of range");
    static const LaurentPoly xz = LaurentPoly::x() * LaurentPoly::z();
    static const LaurentPoly x2 = LaurentPoly::x(2);
    HeckeElement<S> out(h.strands());
    for (const auto& [p, c] : h.terms()) {
        if (p.right_lengthens(i)) {
            out.add_term(p.swap_values(i), c);
        } else {
            out.add_term(p, c * S(xz));
            out.add_term(p.swap_values(i), c * S(x2));
        }
    }
    return out;
}

// Right multiplication by sigma_i^{-1} = x^{-2} sigma_i - x^{-1} z.
template <typename S>
HeckeElement<S> right_multiply_inverse_generator(const HeckeElement<S>& h, int i) {
    HeckeElement<S> out = right_multiply_generator(h, i);
    out.scale(S(LaurentPoly::x(-2)));
    static const LaurentPoly neg_xinv_z{{Mono{1, 0, -1}, -1}, {Mono{-1, 0, -1}, 1}};
    out.add_scaled(h, S(neg_xinv_z));
    return out;
}

template <typename S>
HeckeElement<S> right_multiply_basis(HeckeElement<S> h, const Permutation& p) {
    for (int i : reduced_word(p)) h = right_multiply_generator(h, i);
    return h;
}

// Bilinear product; basis products are expanded letter-by-letter along a
// reduced word of the right factor.
template <typename S>
HeckeElement<S> mul(const HeckeElement<S>& a, const HeckeElement<S>& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("mul: strand count mismatch");
    HeckeElement<S> out(a.strands());
    for (const auto& [p, c] : b.terms()) {
        out.add_scaled(right_multiply_basis(a, p), c);
    }
    return out;
}

// Relabels generators sigma_i -> sigma_{i+offset}, extending by trivial
// strands elsewhere.
template <typename S>
HeckeElement<S> embed(const HeckeElement<S>& h, int offset, int n) {
    if (offset < 0 || offset + h.strands() > n)
        throw std::invalid_argument("embed: range violation");
    HeckeElement<S> out(n);
    for (const auto& [p, c] : h.terms()) {
        std::vector<int> images(n);
        for (int k = 1; k <= n; ++k) images[k - 1] = k;
        for (int k = 1; k <= h.strands(); ++k) images[offset + k - 1] = offset + p(k);
        out.add_term(Permutation::from_one_line(images), c);
    }
    return out;
}

// The two roots of the quadratic relation (sigma - xs)(sigma + xs^{-1}) = 0.
enum class QuadraticRoot {
    positive,  // x*s, absorbed by the full symmetrizer
    negative,  // -x*s^{-1}, absorbed by the antisymmetrizer
};

inline LaurentPoly quadratic_root_power(QuadraticRoot r, int l) {
    if (r == QuadraticRoot::positive) return LaurentPoly(Mono{l, 0, l});
    return LaurentPoly(Mono{-l, 0, l}, l % 2 ? -1 : 1);
}

inline LaurentPoly quadratic_root(QuadraticRoot r) { return quadratic_root_power(r, 1); }

// The algebra character sending every basis braid to root^{length}; the
// eigenvalue homomorphism of the absorption identities.
template <typename S>
S character(const HeckeElement<S>& h, QuadraticRoot root) {
    S out{};
    for (const auto& [p, c] : h.terms()) out += c * S(quadratic_root_power(root, p.length()));
    return out;
}

inline HeckeElement<RatFunc> to_ratfunc(const HeckeElement<LaurentPoly>& h) {
    HeckeElement<RatFunc> out(h.strands());
    for (const auto& [p, c] : h.terms()) out.add_term(p, RatFunc(c));
    return out;
}

// omega_p^{-1}, expanded eagerly into the positive basis via a reversed
// reduced word.
HeckeElement<LaurentPoly> inverse_braid(int n, const Permutation& p);

// Weighted sums of all positive permutation braids: the full symmetrizer
// has weights (x^{-1}s)^{length}, the antisymmetrizer (-x^{-1}s^{-1})^{length}.
HeckeElement<LaurentPoly> symmetrizer(int n, const Limits& limits = {});
HeckeElement<LaurentPoly> antisymmetrizer(int n, const Limits& limits = {});

// Same elements built by the one-strand split recursion instead of the
// direct S_n sum.
HeckeElement<LaurentPoly> symmetrizer_split(int n);
HeckeElement<LaurentPoly> antisymmetrizer_split(int n);

enum class BlockKind { symmetrizer, antisymmetrizer };

// Product of (anti)symmetrizers placed on the consecutive row blocks of the
// row-major numbering of the diagram.
HeckeElement<LaurentPoly> row_element(const YoungDiagram& d, BlockKind kind,
                                      const Limits& limits = {});

// The Young quasi-idempotent: row symmetrizers, conjugated column
// antisymmetrizers, glued by the transpose braid.
HeckeElement<LaurentPoly> young_idempotent(const YoungDiagram& d, const Limits& limits = {});

// The normalized variant built from genuine idempotents: column boxes,
// row boxes, column boxes, divided by the accumulated absorption scalars.
HeckeElement<RatFunc> normalized_idempotent(const YoungDiagram& d, const Limits& limits = {});

// Markov partial closure H_n -> H_{n-1}: closes the highest-numbered
// strand; a strand that comes back unlinked contributes the loop factor, a
// peeled strand contributes one positive curl.
HeckeElement<RatFunc> close_last_strand(const HeckeElement<RatFunc>& h);

// Framed invariant of the closure: iterate the partial closure down to the
// empty algebra.
RatFunc closure_value(HeckeElement<RatFunc> h);
RatFunc closure_value(const HeckeElement<LaurentPoly>& h);

HeckeElement<LaurentPoly> element_from_word(const BraidWord& w);

// X of the braid closure, and its writhe- and unknot-normalized value.
RatFunc framed_homfly(const BraidWord& w);
RatFunc normalized_homfly(const BraidWord& w);

// x*v^{-1} for a positive kink, x^{-1}*v for a negative one.
RatFunc curl_factor(int sign);

}  // namespace skein
