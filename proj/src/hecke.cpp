#include "skein/hecke.hpp"

#include "skein/qdim.hpp"

#include <stdexcept>
#include <vector>

namespace skein {

HeckeElement<LaurentPoly> inverse_braid(int n, const Permutation& p) {
    if (p.degree() != n) throw std::invalid_argument("inverse_braid: degree mismatch");
    const std::vector<int> word = reduced_word(p);
    HeckeElement<LaurentPoly> out = HeckeElement<LaurentPoly>::identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = right_multiply_inverse_generator(out, *it);
    return out;
}

namespace {

HeckeElement<LaurentPoly> permutation_sum(int n, QuadraticRoot root, const Limits& limits) {
    if (n < 1) throw std::invalid_argument("symmetrizer: n must be >= 1");
    if (n > limits.direct_sum)
        throw std::length_error("symmetrizer: strand count exceeds direct-sum guard");
    HeckeElement<LaurentPoly> out(n);
    for (const Permutation& p : all_permutations(n)) {
        // weight (-root^{-1})^{length}: (x^{-1}s)^l for the positive root,
        // (-x^{-1}s^{-1})^l for the negative one
        const int l = p.length();
        const LaurentPoly weight =
            root == QuadraticRoot::positive
                ? LaurentPoly(Mono{l, 0, -l})
                : LaurentPoly(Mono{-l, 0, -l}, l % 2 ? -1 : 1);
        out.add_term(p, weight);
    }
    return out;
}

HeckeElement<LaurentPoly> split_recursion(int n, QuadraticRoot root) {
    if (n < 1) throw std::invalid_argument("split recursion: n must be >= 1");
    if (n == 1) return HeckeElement<LaurentPoly>::identity(1);
    const HeckeElement<LaurentPoly> prev = embed(split_recursion(n - 1, root), 0, n);
    HeckeElement<LaurentPoly> out = prev;  // the block with a trivial last strand
    HeckeElement<LaurentPoly> hook = prev;
    const LaurentPoly step = root == QuadraticRoot::positive
                                 ? LaurentPoly(Mono{1, 0, -1})
                                 : LaurentPoly(Mono{-1, 0, -1}, -1);
    LaurentPoly weight(1);
    for (int i = 0; i <= n - 2; ++i) {
        hook = right_multiply_generator(hook, n - 1 - i);
        weight *= step;
        out.add_scaled(hook, weight);
    }
    return out;
}

}  // namespace

HeckeElement<LaurentPoly> symmetrizer(int n, const Limits& limits) {
    return permutation_sum(n, QuadraticRoot::positive, limits);
}

HeckeElement<LaurentPoly> antisymmetrizer(int n, const Limits& limits) {
    return permutation_sum(n, QuadraticRoot::negative, limits);
}

HeckeElement<LaurentPoly> symmetrizer_split(int n) {
    return split_recursion(n, QuadraticRoot::positive);
}

HeckeElement<LaurentPoly> antisymmetrizer_split(int n) {
    return split_recursion(n, QuadraticRoot::negative);
}

HeckeElement<LaurentPoly> row_element(const YoungDiagram& d, BlockKind kind,
                                      const Limits& limits) {
    const int n = d.cell_count();
    HeckeElement<LaurentPoly> out = HeckeElement<LaurentPoly>::identity(n);
    int offset = 0;
    for (int i = 1; i <= d.row_count(); ++i) {
        const int len = d.row(i);
        const HeckeElement<LaurentPoly> block =
            kind == BlockKind::symmetrizer ? symmetrizer(len, limits) : antisymmetrizer(len, limits);
        out = mul(out, embed(block, offset, n));
        offset += len;
    }
    return out;
}

HeckeElement<LaurentPoly> young_idempotent(const YoungDiagram& d, const Limits& limits) {
    const int n = d.cell_count();
    if (n > limits.idempotent_cells)
        throw std::length_error("young_idempotent: diagram size exceeds guard");
    const Permutation pi = transpose_permutation(d);
    HeckeElement<LaurentPoly> out = row_element(d, BlockKind::symmetrizer, limits);
    out = right_multiply_basis(out, pi);
    out = mul(out, row_element(d.conjugate(), BlockKind::antisymmetrizer, limits));
    out = mul(out, inverse_braid(n, pi));
    return out;
}

HeckeElement<RatFunc> normalized_idempotent(const YoungDiagram& d, const Limits& limits) {
    const int n = d.cell_count();
    if (n > limits.idempotent_cells)
        throw std::length_error("normalized_idempotent: diagram size exceeds guard");
    const Permutation pi = transpose_permutation(d);
    const YoungDiagram conj = d.conjugate();

    // conjugated column factor
    HeckeElement<LaurentPoly> column = HeckeElement<LaurentPoly>::basis(n, pi);
    column = mul(column, row_element(conj, BlockKind::antisymmetrizer, limits));
    column = mul(column, inverse_braid(n, pi));

    HeckeElement<LaurentPoly> product = column;
    product = mul(product, row_element(d, BlockKind::symmetrizer, limits));
    product = mul(product, column);

    LaurentPoly denom(1);
    for (int i = 1; i <= d.row_count(); ++i) denom *= row_scalar(d.row(i));
    LaurentPoly col_part(1);
    for (int j = 1; j <= conj.row_count(); ++j) col_part *= column_scalar(conj.row(j));
    denom *= col_part * col_part;

    HeckeElement<RatFunc> out = to_ratfunc(product);
    out.scale(RatFunc(LaurentPoly(1), denom));
    return out;
}

HeckeElement<RatFunc> close_last_strand(const HeckeElement<RatFunc>& h) {
    const int n = h.strands();
    if (n < 1) throw std::invalid_argument("close_last_strand: no strand to close");
    HeckeElement<RatFunc> out(n - 1);
    const RatFunc delta = loop_factor();
    const RatFunc curl = curl_factor(+1);
    for (const auto& [p, c] : h.terms()) {
        if (p(n) == n) {
            std::vector<int> images;
            images.reserve(n - 1);
            for (int i = 1; i < n; ++i) images.push_back(p(i));
            out.add_term(Permutation::from_one_line(images), c * delta);
        } else {
            const auto [rest, j] = peel_last_strand(p);
            // the peeled cycle re-enters one strand lower
            HeckeElement<RatFunc> base = right_multiply_basis(
                HeckeElement<RatFunc>::basis(n - 1, rest), Permutation::cycle_range(n - 1, j, n - 1));
            out.add_scaled(base, c * curl);
        }
    }
    return out;
}

RatFunc closure_value(HeckeElement<RatFunc> h) {
    while (h.strands() > 0) h = close_last_strand(h);
    return h.coefficient(Permutation());
}

RatFunc closure_value(const HeckeElement<LaurentPoly>& h) { return closure_value(to_ratfunc(h)); }

HeckeElement<LaurentPoly> element_from_word(const BraidWord& w) {
    HeckeElement<LaurentPoly> out = HeckeElement<LaurentPoly>::identity(w.strands);
    for (int letter : w.letters) {
        out = letter > 0 ? right_multiply_generator(out, letter)
                         : right_multiply_inverse_generator(out, -letter);
    }
    return out;
}

RatFunc framed_homfly(const BraidWord& w) { return closure_value(element_from_word(w)); }

RatFunc normalized_homfly(const BraidWord& w) {
    RatFunc out = framed_homfly(w);
    const int wr = w.writhe();
    out *= RatFunc(LaurentPoly(Mono{0, wr, -wr}));  // divide by (x v^{-1})^{writhe}
    out /= loop_factor();
    if (out.involves_x())
        throw std::logic_error("normalized_homfly: x dependence failed to cancel");
    return out;
}

RatFunc curl_factor(int sign) {
    if (sign > 0) return RatFunc(LaurentPoly(Mono{0, -1, 1}));
    return RatFunc(LaurentPoly(Mono{0, 1, -1}));
}

}  // namespace skein
