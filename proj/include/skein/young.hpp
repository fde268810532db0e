#pragma once

#include "skein/permutation.hpp"

#include <compare>
#include <string>
#include <vector>

namespace skein {

// Cell (i, j) of a Young diagram, 1-based, matching the usual (row, column)
// convention.
struct Cell {
    int row = 0;
    int col = 0;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Partition with weakly decreasing positive row lengths; the empty list is
// the empty diagram.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);
    // Parses "4,2,1"; the empty string is the empty diagram.
    static YoungDiagram parse(const std::string& text);

    int cell_count() const;
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    // row length, 0 beyond the last row (handy for boundary conventions)
    int row(int i) const;
    // column length, i.e. the conjugate part
    int column(int j) const;
    bool contains(Cell c) const;

    YoungDiagram conjugate() const;
    std::vector<Cell> cells() const;  // row-major order

    int content(Cell c) const;      // j - i
    int hook_length(Cell c) const;  // row_i - j + col_j - i + 1

    // cells whose removal leaves a valid diagram; exactly the hook-length-1
    // cells, in row order
    std::vector<Cell> extreme_cells() const;
    bool is_extreme(Cell c) const;
    // all cells weakly above and to the left of an extreme cell
    std::vector<Cell> extreme_rectangle(Cell c) const;
    YoungDiagram remove_cell(Cell c) const;

    // row-major numbering T, 1..|diagram|
    int tableau_index(Cell c) const;
    Cell cell_of_index(int k) const;

    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

    std::string to_string() const;

private:
    std::vector<int> rows_;

    void require(Cell c) const;
};

// The permutation carrying the row-major numbering of the diagram to the
// row-major numbering of its conjugate under transposition of cells.  Not
// the identity in general.
Permutation transpose_permutation(const YoungDiagram& d);

// Indices i such that (i, i+1) preserves the rows of the row-major
// numbering; these generate the row subgroup.
std::vector<int> row_group_generators(const YoungDiagram& d);

// The full row subgroup, enumerated as products of per-row permutations.
std::vector<Permutation> row_group(const YoungDiagram& d);

// True iff no two numbers sharing a row of T(lhs) are mapped by p into a
// common row of T(rhs).
bool separates(const Permutation& p, const YoungDiagram& lhs, const YoungDiagram& rhs);

// Brute-force scan of S_n, guarded (n! blow-up beyond the guard).
bool inseparable(const YoungDiagram& lhs, const YoungDiagram& rhs, int guard = 8);

std::vector<YoungDiagram> partitions_of(int n);      // descending-lex order
std::vector<YoungDiagram> partitions_up_to(int n);   // sizes 1..n

}  // namespace skein
