#include "qident/lattice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qident {

ArrayShape::ArrayShape(Family family, int ell, int i) : family_(family), ell_(ell), i_(i) {
    const int ell_min = family == Family::AG ? 1 : 2;
    if (ell < ell_min || i < 0 || i > ell)
        throw std::invalid_argument("ArrayShape: invalid (family, ell, i)");
}

int ArrayShape::rows() const noexcept {
    return family_ == Family::AG ? 2 * ell_ : 2 * ell_ - 1;
}

bool ArrayShape::odd_value_row(int row) const {
    if (!in_rows(row)) throw std::out_of_range("ArrayShape: row outside the array");
    if (family_ == Family::AG) return row % 2 == 1;
    // AB: i odd puts odd values on odd rows (top and bottom rows odd);
    // i even puts even values there instead.
    return (row % 2 == 1) == (i_ % 2 == 1);
}

Cell ArrayShape::hat() const {
    if (hat_override_) return *hat_override_;
    int row = 0;
    if (family_ == Family::AG) {
        if (i_ == 0)
            row = 2 * ell_;
        else if (i_ % 2 == 1)
            row = i_;
        else
            row = 2 * ell_ + 1 - i_;
    } else {
        row = i_ == 0 ? 1 : i_;
    }
    return {row, slot_col(row)};
}

ArrayShape ArrayShape::with_hat(Cell c) const {
    if (!is_slot(c)) throw std::invalid_argument("ArrayShape::with_hat: not an initial slot");
    ArrayShape out = *this;
    out.hat_override_ = c;
    return out;
}

bool ArrayShape::is_slot(Cell c) const {
    return in_rows(c.row) && c.col == slot_col(c.row);
}

bool ArrayShape::is_value_cell(Cell c) const {
    if (!in_rows(c.row) || c.col < 3) return false;
    return (c.col % 2 == 1) == odd_value_row(c.row);
}

int ArrayShape::value(Cell c) const {
    if (!is_value_cell(c)) throw std::invalid_argument("ArrayShape::value: not a value cell");
    return c.col - 2;
}

Cell ArrayShape::value_cell(int row, int value) const {
    Cell c{row, value + 2};
    if (value < 1 || !is_value_cell(c))
        throw std::invalid_argument("ArrayShape::value_cell: value parity does not match row");
    return c;
}

bool copath(const ArrayShape& shape, Cell a, Cell b) {
    if (!(shape.is_value_cell(a) || shape.is_slot(a)) ||
        !(shape.is_value_cell(b) || shape.is_slot(b)))
        throw std::invalid_argument("copath: cell outside the shape");
    if (a.row == b.row) return a == b;
    return std::abs(b.col - a.col) <= std::abs(b.row - a.row);
}

int FrequencyArray::multiplicity(Cell c) const {
    auto it = freq_.find(c);
    return it == freq_.end() ? 0 : it->second;
}

void FrequencyArray::set(Cell c, int mult) {
    if (!shape_.is_value_cell(c))
        throw std::invalid_argument("FrequencyArray::set: not a value cell");
    if (mult < 0) throw std::invalid_argument("FrequencyArray::set: negative multiplicity");
    if (mult == 0)
        freq_.erase(c);
    else
        freq_[c] = mult;
}

int FrequencyArray::weight() const {
    int w = 0;
    for (const auto& [c, m] : freq_) w += m * shape_.value(c);
    return w;
}

int FrequencyArray::parts() const {
    int j = 0;
    for (const auto& [c, m] : freq_) j += m;
    return j;
}

int max_path_sum(const FrequencyArray& fa, const std::map<int, int>& slot_values, int col_max) {
    const ArrayShape& shape = fa.shape();
    if (col_max < 2) throw std::invalid_argument("max_path_sum: col_max too small");
    const int rows = shape.rows();

    auto entry = [&](int row, int col) {
        int v = fa.multiplicity({row, col});
        if (col == shape.slot_col(row)) {
            auto it = slot_values.find(row);
            if (it != slot_values.end()) v += it->second;
        }
        return v;
    };

    constexpr int kUnreachable = std::numeric_limits<int>::min() / 2;
    std::vector<int> best(col_max + 2, kUnreachable);
    for (int c = 1; c <= col_max; ++c) best[c] = entry(1, c);
    std::vector<int> next(col_max + 2, kUnreachable);
    for (int row = 2; row <= rows; ++row) {
        std::fill(next.begin(), next.end(), kUnreachable);
        for (int c = 1; c <= col_max; ++c) {
            const int pred = std::max(best[c - 1], best[c + 1]);
            if (pred > kUnreachable) next[c] = pred + entry(row, c);
        }
        best.swap(next);
    }
    return *std::max_element(best.begin() + 1, best.begin() + col_max + 1);
}

bool is_admissible(const FrequencyArray& fa, int k) {
    if (k < 1) throw std::invalid_argument("is_admissible: k must be >= 1");
    const Cell hat = fa.shape().hat();
    int max_col = hat.col;
    for (const auto& [c, m] : fa.support())
        if (m > 0) max_col = std::max(max_col, c.col);
    return max_path_sum(fa, {{hat.row, 1}}, max_col + 1) <= k;
}

bool is_admissible_fast(const FrequencyArray& fa) {
    const ArrayShape& shape = fa.shape();
    const Cell hat = shape.hat();
    const auto& support = fa.support();
    for (const auto& [c, m] : support) {
        if (m > 1) return false;
        if (copath(shape, c, hat)) return false;
    }
    for (auto it = support.begin(); it != support.end(); ++it)
        for (auto jt = std::next(it); jt != support.end(); ++jt)
            if (copath(shape, it->first, jt->first)) return false;
    return true;
}

std::set<Cell> forbidden_cells(const ArrayShape& shape, int value_max) {
    if (value_max < 1) throw std::invalid_argument("forbidden_cells: value_max must be >= 1");
    const Cell hat = shape.hat();
    std::set<Cell> out;
    for (int row = 1; row <= shape.rows(); ++row) {
        const int first = shape.odd_value_row(row) ? 1 : 2;
        for (int v = first; v <= value_max; v += 2) {
            Cell c = shape.value_cell(row, v);
            if (copath(shape, c, hat)) out.insert(c);
        }
    }
    return out;
}

} // namespace qident
