#include "skein/young.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <set>

using namespace skein;

namespace {

const YoungDiagram nu({4, 2, 1});

// brute force: a cell is removable iff it ends its row and deleting it in
// place leaves a top- and left-justified weakly decreasing shape
bool removable_by_bruteforce(const YoungDiagram& d, Cell c) {
    if (!d.contains(c) || c.col != d.row(c.row)) return false;
    std::vector<int> rows = d.rows();
    --rows[c.row - 1];
    if (rows[c.row - 1] == 0) {
        if (c.row != d.row_count()) return false;  // an emptied row must be the last
        rows.pop_back();
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) return false;
        if (i > 0 && rows[i] > rows[i - 1]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parsing and validation") {
    CHECK(YoungDiagram::parse("4,2,1") == nu);
    CHECK(YoungDiagram::parse("") == YoungDiagram());
    CHECK(YoungDiagram().cell_count() == 0);
    CHECK_THROWS_AS(YoungDiagram::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram::parse("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram::parse("a,1"), std::invalid_argument);
    CHECK(nu.to_string() == "4,2,1");
}

TEST_CASE("conjugation") {
    CHECK(nu.conjugate() == YoungDiagram({3, 2, 1, 1}));
    CHECK(YoungDiagram().conjugate() == YoungDiagram());
    CHECK(YoungDiagram({1, 1, 1}).conjugate() == YoungDiagram({3}));
    for (const YoungDiagram& d : partitions_up_to(8))
        CHECK(d.conjugate().conjugate() == d);
}

TEST_CASE("contents and hook lengths match the worked example") {
    const std::vector<int> contents{0, 1, 2, 3, -1, 0, -2};
    const std::vector<int> hooks{6, 4, 2, 1, 3, 1, 1};
    const auto cells = nu.cells();
    REQUIRE(cells.size() == 7);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(nu.content(cells[i]) == contents[i]);
        CHECK(nu.hook_length(cells[i]) == hooks[i]);
    }
    CHECK(nu.content({1, 4}) == 3);
    CHECK(nu.hook_length({2, 1}) == 3);
    CHECK(YoungDiagram({1}).hook_length({1, 1}) == 1);
    CHECK_THROWS_AS(nu.content({3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(nu.hook_length({4, 1}), std::invalid_argument);
}

TEST_CASE("extreme cells and rectangles") {
    CHECK(nu.extreme_cells() == std::vector<Cell>{{1, 4}, {2, 2}, {3, 1}});
    CHECK(YoungDiagram({5}).extreme_cells() == std::vector<Cell>{{1, 5}});
    CHECK(YoungDiagram({2, 2}).extreme_cells() == std::vector<Cell>{{2, 2}});

    CHECK(nu.extreme_rectangle({2, 2}) ==
          std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(nu.extreme_rectangle({3, 1}) == std::vector<Cell>{{1, 1}, {2, 1}, {3, 1}});
    CHECK(YoungDiagram({1}).extreme_rectangle({1, 1}) == std::vector<Cell>{{1, 1}});
    CHECK_THROWS_AS(nu.extreme_rectangle({1, 1}), std::invalid_argument);
}

TEST_CASE("extreme cells are exactly the removable ones") {
    for (const YoungDiagram& d : partitions_up_to(7)) {
        for (const Cell& c : d.cells()) {
            CHECK(d.is_extreme(c) == removable_by_bruteforce(d, c));
            if (d.is_extreme(c)) {
                const YoungDiagram smaller = d.remove_cell(c);
                CHECK(smaller.cell_count() == d.cell_count() - 1);
            } else {
                CHECK_THROWS_AS(d.remove_cell(c), std::invalid_argument);
            }
        }
    }
}

TEST_CASE("row-major tableau numbering") {
    CHECK(nu.tableau_index({1, 1}) == 1);
    CHECK(nu.tableau_index({2, 2}) == 6);
    CHECK(nu.tableau_index({3, 1}) == 7);
    CHECK(nu.conjugate().tableau_index({2, 1}) == 4);
    for (int j = 1; j <= 5; ++j) CHECK(YoungDiagram({5}).tableau_index({1, j}) == j);
    for (int k = 1; k <= nu.cell_count(); ++k)
        CHECK(nu.tableau_index(nu.cell_of_index(k)) == k);
    CHECK_THROWS_AS(nu.cell_of_index(8), std::invalid_argument);
    CHECK_THROWS_AS(nu.cell_of_index(0), std::invalid_argument);
}

TEST_CASE("transpose permutation") {
    const Permutation pi = transpose_permutation(nu);
    CHECK(pi == Permutation::from_one_line({1, 4, 6, 7, 2, 5, 3}));
    // single rows and single columns transpose order-preservingly
    CHECK(transpose_permutation(YoungDiagram({2})).is_identity());
    CHECK(transpose_permutation(YoungDiagram({1, 1, 1, 1})).is_identity());
    CHECK(transpose_permutation(YoungDiagram({2, 1})) ==
          Permutation::from_one_line({1, 3, 2}));
}

TEST_CASE("row group generators") {
    CHECK(row_group_generators(nu) == std::vector<int>{1, 2, 3, 5});
    CHECK(row_group_generators(YoungDiagram({1, 1, 1})).empty());
    CHECK(row_group_generators(YoungDiagram({3})) == std::vector<int>{1, 2});
    CHECK(row_group(nu).size() == 24 * 2 * 1);
    // the row group fixes rows of the numbering
    for (const Permutation& p : row_group(YoungDiagram({3, 2}))) {
        for (int k = 1; k <= 5; ++k)
            CHECK(YoungDiagram({3, 2}).cell_of_index(p(k)).row ==
                  YoungDiagram({3, 2}).cell_of_index(k).row);
    }
}

TEST_CASE("separation") {
    CHECK(separates(transpose_permutation(nu), nu, nu.conjugate()));
    const YoungDiagram two({2});
    for (const Permutation& p : all_permutations(2)) CHECK(!separates(p, two, two));
    CHECK(inseparable(two, two));
    CHECK(!inseparable(YoungDiagram({1}), YoungDiagram({1})));
    for (const YoungDiagram& d : partitions_up_to(5))
        CHECK(!inseparable(d, d.conjugate()));
    CHECK_THROWS_AS(separates(Permutation::identity(2), two, YoungDiagram({3})),
                    std::invalid_argument);
    CHECK_THROWS_AS(inseparable(YoungDiagram({5, 4}), YoungDiagram({5, 4})),
                    std::length_error);
}

TEST_CASE("hook multiset is conjugation invariant, contents negate") {
    for (const YoungDiagram& d : partitions_up_to(8)) {
        const YoungDiagram conj = d.conjugate();
        std::multiset<int> hooks, conj_hooks;
        std::multiset<int> contents, conj_contents_negated;
        for (const Cell& c : d.cells()) {
            hooks.insert(d.hook_length(c));
            contents.insert(d.content(c));
        }
        for (const Cell& c : conj.cells()) {
            conj_hooks.insert(conj.hook_length(c));
            conj_contents_negated.insert(-conj.content(c));
        }
        CHECK(hooks == conj_hooks);
        CHECK(contents == conj_contents_negated);
    }
}

TEST_CASE("content sum identity") {
    for (const YoungDiagram& d : partitions_up_to(8)) {
        int lhs = 0;
        for (const Cell& c : d.cells()) lhs += 2 * d.content(c);
        int rhs = 0;
        for (int r : d.rows()) rhs += r * (r - 1);
        const YoungDiagram conj = d.conjugate();
        for (int r : conj.rows()) rhs -= r * (r - 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("separating permutations factor through the row groups") {
    for (const YoungDiagram& d : partitions_up_to(6)) {
        const YoungDiagram conj = d.conjugate();
        const Permutation pi = transpose_permutation(d);
        std::set<Permutation> separating;
        for (const Permutation& p : all_permutations(d.cell_count()))
            if (separates(p, d, conj)) separating.insert(p);
        std::set<Permutation> factored;
        for (const Permutation& rho : row_group(d))
            for (const Permutation& sigma : row_group(conj))
                factored.insert(rho.compose(pi).compose(sigma));
        CHECK(separating == factored);
    }
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_up_to(5).size() == 18);
    CHECK(partitions_of(4).front() == YoungDiagram({4}));
    CHECK(partitions_of(4).back() == YoungDiagram({1, 1, 1, 1}));
}
