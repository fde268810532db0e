#pragma once

#include "skein/laurent.hpp"
#include "skein/ratfunc.hpp"
#include "skein/young.hpp"

namespace skein {

// Closed-form scalars attached to a Young diagram, and the quantum/classical
// dimension formulas for the rank-N specialization.

// Product over cells of s^{content} * [hook length]; the scalar square of
// the Young quasi-idempotent.
LaurentPoly hook_content_scalar(const YoungDiagram& d);

// Single-row and single-column closed forms: s^{l(l-1)/2} [l]! and
// s^{-k(k-1)/2} [k]!.
LaurentPoly row_scalar(int l);
LaurentPoly column_scalar(int k);

// The scalar square of the normalized idempotent, by the double-product
// formula in the row lengths (rows beyond the last count as 0).
RatFunc normalized_scalar(const YoungDiagram& d);

// Scalar picked up when a strand of content c is closed off:
// s^c (v^{-1} s^c - v s^{-c}) / z.
RatFunc cell_closure_factor(int content);

// Product over cells of s^c (v^{-1} s^c - v s^{-c}) / z: the closure value
// of the quasi-idempotent.
RatFunc closure_product(const YoungDiagram& d);

// Closure value of the genuine idempotent: closure_product / hook_content.
RatFunc normalized_closure_product(const YoungDiagram& d);

// The same value assembled cell by cell, ((v^{-1}s^c - v s^{-c})/z) / [hook];
// an independent route kept for cross-checking.
RatFunc normalized_closure_cell_product(const YoungDiagram& d);

// Hook formula for the quantum dimension of the rank-N irreducible:
// product of [N + content] over cells divided (exactly) by the product of
// [hook length]; zero when a column exceeds N cells.
LaurentPoly quantum_dimension(const YoungDiagram& d, int N);

// Integer dimension of the classical irreducible; equals the quantum
// dimension evaluated at s = 1.
Int classical_dimension(const YoungDiagram& d, int N);

}  // namespace skein
