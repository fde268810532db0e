#include "skein/young.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1]))
            throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing and positive");
    }
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
    std::vector<int> rows;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("YoungDiagram: malformed partition '" + text + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("YoungDiagram: malformed partition '" + text + "'");
        rows.push_back(value);
    }
    return YoungDiagram(std::move(rows));
}

int YoungDiagram::cell_count() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0);
}

int YoungDiagram::row(int i) const {
    return (i >= 1 && i <= row_count()) ? rows_[i - 1] : 0;
}

int YoungDiagram::column(int j) const {
    int count = 0;
    for (int len : rows_)
        if (len >= j) ++count;
    return count;
}

bool YoungDiagram::contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= row(c.row);
}

void YoungDiagram::require(Cell c) const {
    if (!contains(c)) throw std::invalid_argument("YoungDiagram: cell outside diagram");
}

YoungDiagram YoungDiagram::conjugate() const {
    std::vector<int> cols;
    for (int j = 1; j <= (rows_.empty() ? 0 : rows_[0]); ++j) cols.push_back(column(j));
    return YoungDiagram(std::move(cols));
}

std::vector<Cell> YoungDiagram::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (int i = 1; i <= row_count(); ++i)
        for (int j = 1; j <= rows_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

int YoungDiagram::content(Cell c) const {
    require(c);
    return c.col - c.row;
}

int YoungDiagram::hook_length(Cell c) const {
    require(c);
    return row(c.row) - c.col + column(c.col) - c.row + 1;
}

std::vector<Cell> YoungDiagram::extreme_cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= row_count(); ++i) {
        const Cell last{i, rows_[i - 1]};
        if (hook_length(last) == 1) out.push_back(last);
    }
    return out;
}

bool YoungDiagram::is_extreme(Cell c) const {
    return contains(c) && hook_length(c) == 1;
}

std::vector<Cell> YoungDiagram::extreme_rectangle(Cell c) const {
    if (!is_extreme(c)) throw std::invalid_argument("YoungDiagram: cell is not extreme");
    std::vector<Cell> out;
    for (int i = 1; i <= c.row; ++i)
        for (int j = 1; j <= c.col; ++j) out.push_back({i, j});
    return out;
}

YoungDiagram YoungDiagram::remove_cell(Cell c) const {
    if (!is_extreme(c)) throw std::invalid_argument("YoungDiagram: cell is not extreme");
    std::vector<int> rows = rows_;
    if (--rows[c.row - 1] == 0) rows.pop_back();
    return YoungDiagram(std::move(rows));
}

int YoungDiagram::tableau_index(Cell c) const {
    require(c);
    int before = 0;
    for (int i = 1; i < c.row; ++i) before += rows_[i - 1];
    return before + c.col;
}

Cell YoungDiagram::cell_of_index(int k) const {
    if (k < 1 || k > cell_count()) throw std::invalid_argument("YoungDiagram: index out of range");
    int i = 1;
    while (k > rows_[i - 1]) k -= rows_[i++ - 1];
    return {i, k};
}

std::string YoungDiagram::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < row_count(); ++i) {
        if (i) os << ',';
        os << rows_[i];
    }
    return os.str();
}

Permutation transpose_permutation(const YoungDiagram& d) {
    const YoungDiagram conj = d.conjugate();
    std::vector<int> images;
    images.reserve(d.cell_count());
    for (int k = 1; k <= d.cell_count(); ++k) {
        const Cell c = d.cell_of_index(k);
        images.push_back(conj.tableau_index({c.col, c.row}));
    }
    return Permutation::from_one_line(images);
}

std::vector<int> row_group_generators(const YoungDiagram& d) {
    std::vector<int> out;
    int index = 0;
    for (int i = 1; i <= d.row_count(); ++i) {
        for (int j = 1; j < d.row(i); ++j) out.push_back(index + j);
        index += d.row(i);
    }
    return out;
}

std::vector<Permutation> row_group(const YoungDiagram& d) {
    const int n = d.cell_count();
    std::vector<Permutation> out{Permutation::identity(n)};
    int offset = 0;
    for (int i = 1; i <= d.row_count(); ++i) {
        const int len = d.row(i);
        std::vector<Permutation> next;
        for (const Permutation& block : all_permutations(len)) {
            std::vector<int> images(n);
            std::iota(images.begin(), images.end(), 1);
            for (int j = 1; j <= len; ++j) images[offset + j - 1] = offset + block(j);
            const Permutation lift = Permutation::from_one_line(images);
            for (const Permutation& p : out) next.push_back(p.compose(lift));
        }
        out = std::move(next);
        offset += len;
    }
    return out;
}

bool separates(const Permutation& p, const YoungDiagram& lhs, const YoungDiagram& rhs) {
    const int n = p.degree();
    if (lhs.cell_count() != n || rhs.cell_count() != n)
        throw std::invalid_argument("separates: size mismatch");
    // rhs row index of each tableau number
    std::vector<int> rhs_row(n + 1);
    for (int k = 1; k <= n; ++k) rhs_row[k] = rhs.cell_of_index(k).row;
    std::vector<int> seen(rhs.row_count() + 1, 0);
    int k = 1;
    for (int i = 1; i <= lhs.row_count(); ++i) {
        for (int j = 1; j <= lhs.row(i); ++j, ++k) {
            const int target = rhs_row[p(k)];
            if (seen[target] == i) return false;
            seen[target] = i;
        }
    }
    return true;
}

bool inseparable(const YoungDiagram& lhs, const YoungDiagram& rhs, int guard) {
    const int n = lhs.cell_count();
    if (rhs.cell_count() != n) throw std::invalid_argument("inseparable: size mismatch");
    if (n > guard)
        throw std::length_error("inseparable: diagram size exceeds brute-force guard");
    for (const Permutation& p : all_permutations(n))
        if (separates(p, lhs, rhs)) return false;
    return true;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.push_back(YoungDiagram(prefix));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<YoungDiagram> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

std::vector<YoungDiagram> partitions_up_to(int n) {
    std::vector<YoungDiagram> out;
    for (int k = 1; k <= n; ++k)
        for (auto& d : partitions_of(k)) out.push_back(std::move(d));
    return out;
}

}  // namespace skein
