#pragma once

#include "skein/limits.hpp"

#include <string>
#include <vector>

namespace skein::checks {

struct Result {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Each suite verifies one family of exact identities by computing both
// sides independently.  `max_cells` bounds the diagram size (or strand
// count, for the strand-indexed suites).

Result idempotency(int max_cells, const Limits& limits = {});
Result orthogonality(int max_cells, const Limits& limits = {});
Result closure_vs_product(int max_cells, const Limits& limits = {});
Result extreme_cell_closure(int max_cells, const Limits& limits = {});
Result symmetrizer_squares(int max_strands, const Limits& limits = {});
Result split_recursion(int max_strands, const Limits& limits = {});
Result split_correction(int max_strands, const Limits& limits = {});
Result scalar_product_identity(int max_cells);
Result separability(int max_cells, const Limits& limits = {});

// CLI vocabulary for --checks, in report order.
const std::vector<std::string>& check_names();

// Runs one named suite; throws std::invalid_argument for an unknown name.
Result run_named(const std::string& name, int max_cells, const Limits& limits = {});

}  // namespace skein::checks
