#include "skein/checks.hpp"

#include "skein/hecke.hpp"
#include "skein/qdim.hpp"
#include "skein/young.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skein::checks {

namespace {

std::string counted(int n, const std::string& what) {
    std::ostringstream os;
    os << n << ' ' << what;
    return os.str();
}

}  // namespace

Result idempotency(int max_cells, const Limits& limits) {
    int cases = 0;
    for (const YoungDiagram& d : partitions_up_to(max_cells)) {
        const auto e = young_idempotent(d, limits);
        auto expected = e;
        expected.scale(hook_content_scalar(d));
        if (mul(e, e) != expected)
            return {"idempotency", false, "failed for " + d.to_string()};
        ++cases;
    }
    return {"idempotency", true, counted(cases, "partitions")};
}

Result orthogonality(int max_cells, const Limits& limits) {
    int cases = 0;
    for (int n = 2; n <= max_cells; ++n) {
        const auto parts = partitions_of(n);
        std::vector<HeckeElement<LaurentPoly>> es;
        es.reserve(parts.size());
        for (const auto& d : parts) es.push_back(young_idempotent(d, limits));
        for (std::size_t a = 0; a < parts.size(); ++a) {
            for (std::size_t b = a + 1; b < parts.size(); ++b) {
                if (!mul(es[a], es[b]).is_zero())
                    return {"orthogonality", false,
                            "nonzero product for " + parts[a].to_string() + " / " +
                                parts[b].to_string()};
                ++cases;
            }
        }
    }
    return {"orthogonality", true, counted(cases, "pairs")};
}

Result closure_vs_product(int max_cells, const Limits& limits) {
    int cases = 0;
    for (const YoungDiagram& d : partitions_up_to(max_cells)) {
        if (!(closure_value(young_idempotent(d, limits)) == closure_product(d)))
            return {"closure-vs-xeval", false, "failed for " + d.to_string()};
        ++cases;
    }
    return {"closure-vs-xeval", true, counted(cases, "partitions")};
}

Result extreme_cell_closure(int max_cells, const Limits& limits) {
    int cases = 0;
    for (const YoungDiagram& d : partitions_up_to(max_cells)) {
        const Cell last = d.cell_of_index(d.cell_count());
        const auto closed = close_last_strand(to_ratfunc(young_idempotent(d, limits)));
        auto expected = to_ratfunc(young_idempotent(d.remove_cell(last), limits));
        expected.scale(cell_closure_factor(d.content(last)));
        if (closed != expected)
            return {"exclose", false, "failed for " + d.to_string()};
        ++cases;
    }
    return {"exclose", true, counted(cases, "partitions")};
}

Result symmetrizer_squares(int max_strands, const Limits& limits) {
    int cases = 0;
    for (int n = 1; n <= max_strands; ++n) {
        const auto a = symmetrizer(n, limits);
        auto a_scaled = a;
        a_scaled.scale(row_scalar(n));
        if (mul(a, a) != a_scaled)
            return {"nero", false, "symmetrizer square failed at n=" + std::to_string(n)};
        const auto b = antisymmetrizer(n, limits);
        auto b_scaled = b;
        b_scaled.scale(column_scalar(n));
        if (mul(b, b) != b_scaled)
            return {"nero", false, "antisymmetrizer square failed at n=" + std::to_string(n)};
        cases += 2;
    }
    return {"nero", true, counted(cases, "squares")};
}

Result split_recursion(int max_strands, const Limits& limits) {
    int cases = 0;
    for (int n = 1; n <= max_strands; ++n) {
        if (symmetrizer_split(n) != symmetrizer(n, limits))
            return {"split", false, "symmetrizer recursion failed at n=" + std::to_string(n)};
        if (antisymmetrizer_split(n) != antisymmetrizer(n, limits))
            return {"split", false, "antisymmetrizer recursion failed at n=" + std::to_string(n)};
        cases += 2;
    }
    return {"split", true, counted(cases, "recursions")};
}

Result split_correction(int max_strands, const Limits& limits) {
    int cases = 0;
    for (int n = 2; n <= max_strands; ++n) {
        {
            // symmetrizer: block-with-trivial-strand plus the hooked block,
            // weighted x^{-1} s^{n-1} [n-1] / row_scalar(n-1)
            const auto block = embed(symmetrizer(n - 1, limits), 0, n);
            auto hook = to_ratfunc(mul(right_multiply_generator(block, n - 1), block));
            hook.scale(RatFunc(LaurentPoly(Mono{n - 1, 0, -1}) * qint(n - 1), row_scalar(n - 1)));
            auto rhs = to_ratfunc(block);
            rhs += hook;
            if (to_ratfunc(symmetrizer(n, limits)) != rhs)
                return {"splitplus", false, "symmetrizer identity failed at n=" + std::to_string(n)};
        }
        {
            // antisymmetrizer: weight -x^{-1} s^{-(n-1)} [n-1] / column_scalar(n-1)
            const auto block = embed(antisymmetrizer(n - 1, limits), 0, n);
            auto hook = to_ratfunc(mul(right_multiply_generator(block, n - 1), block));
            hook.scale(RatFunc(LaurentPoly(Mono{1 - n, 0, -1}, -1) * qint(n - 1), column_scalar(n - 1)));
            auto rhs = to_ratfunc(block);
            rhs += hook;
            if (to_ratfunc(antisymmetrizer(n, limits)) != rhs)
                return {"splitplus", false,
                        "antisymmetrizer identity failed at n=" + std::to_string(n)};
        }
        cases += 2;
    }
    return {"splitplus", true, counted(cases, "identities")};
}

Result scalar_product_identity(int max_cells) {
    int cases = 0;
    for (const YoungDiagram& d : partitions_up_to(max_cells)) {
        LaurentPoly packed(1);
        for (int i = 1; i <= d.row_count(); ++i) packed *= row_scalar(d.row(i));
        const YoungDiagram conj = d.conjugate();
        for (int j = 1; j <= conj.row_count(); ++j) packed *= column_scalar(conj.row(j));
        if (!(normalized_scalar(d) * RatFunc(packed) == RatFunc(hook_content_scalar(d))))
            return {"marel", false, "failed for " + d.to_string()};
        ++cases;
    }
    return {"marel", true, counted(cases, "partitions")};
}

Result separability(int max_cells, const Limits& limits) {
    int cases = 0;
    for (const YoungDiagram& d : partitions_up_to(max_cells)) {
        const YoungDiagram conj = d.conjugate();
        const Permutation pi = transpose_permutation(d);
        if (!separates(pi, d, conj))
            return {"separability", false, "transpose braid fails for " + d.to_string()};
        ++cases;
    }
    {
        const YoungDiagram two({2});
        if (!inseparable(two, two, limits.inseparability))
            return {"separability", false, "(2),(2) reported separable"};
        ++cases;
    }
    // every separating permutation factors through the row groups around the
    // transpose permutation (and conversely)
    for (const YoungDiagram& d : partitions_up_to(std::min(max_cells, 5))) {
        const YoungDiagram conj = d.conjugate();
        const Permutation pi = transpose_permutation(d);
        std::set<Permutation> separating;
        for (const Permutation& p : all_permutations(d.cell_count()))
            if (separates(p, d, conj)) separating.insert(p);
        std::set<Permutation> factored;
        for (const Permutation& rho : row_group(d))
            for (const Permutation& sigma : row_group(conj))
                factored.insert(rho.compose(pi).compose(sigma));
        if (separating != factored)
            return {"separability", false, "factorization failed for " + d.to_string()};
        ++cases;
    }
    return {"separability", true, counted(cases, "cases")};
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "idempotency", "orthogonality", "closure-vs-xeval", "exclose", "nero",
        "split",       "splitplus",     "marel",            "separability"};
    return names;
}

Result run_named(const std::string& name, int max_cells, const Limits& limits) {
    if (name == "idempotency") return idempotency(max_cells, limits);
    if (name == "orthogonality") return orthogonality(max_cells, limits);
    if (name == "closure-vs-xeval") return closure_vs_product(max_cells, limits);
    if (name == "exclose") return extreme_cell_closure(max_cells, limits);
    if (name == "nero") return symmetrizer_squares(max_cells, limits);
    if (name == "split") return split_recursion(max_cells, limits);
    if (name == "splitplus") return split_correction(max_cells, limits);
    if (name == "marel") return scalar_product_identity(max_cells);
    if (name == "separability") return separability(max_cells, limits);
    throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace skein::checks
