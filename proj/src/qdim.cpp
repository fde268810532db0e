#include "skein/qdim.hpp"

#include <stdexcept>

namespace skein {

LaurentPoly hook_content_scalar(const YoungDiagram& d) {
    LaurentPoly out(1);
    for (const Cell& c : d.cells()) {
        out *= qint(d.hook_length(c));
        out *= LaurentPoly(Mono{d.content(c), 0, 0});
    }
    return out;
}

LaurentPoly row_scalar(int l) {
    if (l < 0) throw std::invalid_argument("row_scalar: negative argument");
    return LaurentPoly(Mono{l * (l - 1) / 2, 0, 0}) * qfact(l);
}

LaurentPoly column_scalar(int k) {
    if (k < 0) throw std::invalid_argument("column_scalar: negative argument");
    return LaurentPoly(Mono{-k * (k - 1) / 2, 0, 0}) * qfact(k);
}

RatFunc normalized_scalar(const YoungDiagram& d) {
    RatFunc out(1);
    for (int n = 1; n <= d.row_count(); ++n) {
        const int weight = d.row(n) - d.row(n + 1);
        for (int m = 1; m <= n; ++m) {
            LaurentPoly repeated(1);
            for (int i = 0; i < weight; ++i) repeated *= qint(n - m + 1);
            out *= RatFunc(LaurentPoly(1), repeated);
            out *= RatFunc(qfact(d.row(m) - d.row(n + 1) + n - m) * qfact(d.row(m) - d.row(n)),
                           qfact(d.row(m) - d.row(n) + n - m) * qfact(d.row(m) - d.row(n + 1)));
        }
    }
    return out;
}

namespace {

// s^c (v^{-1} s^c - v s^{-c}) = v^{-1} s^{2c} - v
LaurentPoly cell_closure_numerator(int c) {
    return LaurentPoly{{Mono{2 * c, -1, 0}, 1}, {Mono{0, 1, 0}, -1}};
}

}  // namespace

RatFunc cell_closure_factor(int content) {
    return RatFunc(cell_closure_numerator(content), LaurentPoly::z());
}

RatFunc closure_product(const YoungDiagram& d) {
    LaurentPoly num(1);
    LaurentPoly den(1);
    for (const Cell& c : d.cells()) {
        num *= cell_closure_numerator(d.content(c));
        den *= LaurentPoly::z();
    }
    return RatFunc(std::move(num), std::move(den));
}

RatFunc normalized_closure_product(const YoungDiagram& d) {
    RatFunc out = closure_product(d) / RatFunc(hook_content_scalar(d));
    if (out.involves_x())
        throw std::logic_error("normalized_closure_product: unexpected x dependence");
    return out;
}

RatFunc normalized_closure_cell_product(const YoungDiagram& d) {
    LaurentPoly num(1);
    LaurentPoly den(1);
    for (const Cell& c : d.cells()) {
        const int ct = d.content(c);
        // (v^{-1} s^c - v s^{-c}) / ([hook] * z), the s^c having cancelled
        num *= LaurentPoly{{Mono{ct, -1, 0}, 1}, {Mono{-ct, 1, 0}, -1}};
        den *= qint(d.hook_length(c)) * LaurentPoly::z();
    }
    return RatFunc(std::move(num), std::move(den));
}

LaurentPoly quantum_dimension(const YoungDiagram& d, int N) {
    if (N < 1) throw std::invalid_argument("quantum_dimension: N must be >= 1");
    LaurentPoly num(1);
    LaurentPoly den(1);
    for (const Cell& c : d.cells()) {
        if (N + d.content(c) <= 0) return LaurentPoly();  // a [0] factor: column taller than N
        num *= qint(N + d.content(c));
        den *= qint(d.hook_length(c));
    }
    return exact_div(num, den);
}

Int classical_dimension(const YoungDiagram& d, int N) {
    if (N < 1) throw std::invalid_argument("classical_dimension: N must be >= 1");
    Int num = 1;
    Int den = 1;
    for (const Cell& c : d.cells()) {
        if (N + d.content(c) <= 0) return 0;
        num *= N + d.content(c);
        den *= d.hook_length(c);
    }
    if (num % den != 0)
        throw std::logic_error("classical_dimension: non-integer quotient");
    return num / den;
}

}  // namespace skein
