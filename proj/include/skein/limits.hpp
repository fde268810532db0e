#pragma once

#include <algorithm>

namespace skein {

// Size guards for operations with factorial blow-up.  Exceeding a guard
// fails loudly instead of thrashing; guards can only be widened.
struct Limits {
    int direct_sum = 7;        // full S_n sums (n! basis terms)
    int idempotent_cells = 6;  // Young idempotent construction
    int inseparability = 8;    // brute-force separability scan

    Limits widened(int n) const {
        Limits out = *this;
        out.direct_sum = std::max(out.direct_sum, n);
        out.idempotent_cells = std::max(out.idempotent_cells, n);
        out.inseparability = std::max(out.inseparability, n);
        return out;
    }
};

}  // namespace skein
