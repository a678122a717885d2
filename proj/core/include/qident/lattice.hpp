#pragma once

#include "qident/series.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>

namespace qident {

/// One position of a staggered array. Columns double the natural index so
/// that cells in consecutive rows are adjacent exactly when their columns
/// differ by 1: a value cell for value v sits at column v + 2, and each row's
/// initial-condition slot sits at column 1 (rows whose first entry is flush
/// left) or column 2 (indented rows).
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Geometry of one staggered array: the AG family uses 2*ell rows, the AB
/// family 2*ell - 1 rows in two parity variants selected by the parity of i.
/// i in [0, ell] selects which initial-condition slot holds the single 1 (the
/// "hat"); every other slot holds 0.
class ArrayShape {
public:
    ArrayShape(Family family, int ell, int i);

    Family family() const noexcept { return family_; }
    int ell() const noexcept { return ell_; }
    int index() const noexcept { return i_; }
    int rows() const noexcept;

    /// Whether the given row displays odd values (1, 3, 5, ...).
    bool odd_value_row(int row) const;

    /// Column of the row's initial-condition slot (1 or 2 per the stagger).
    int slot_col(int row) const { return odd_value_row(row) ? 1 : 2; }

    /// Location of the unique slot holding 1. AG: i odd -> row i; i even,
    /// i >= 2 -> row 2*ell + 1 - i; i = 0 -> row 2*ell. AB: i = 0 -> row 1;
    /// otherwise row i.
    Cell hat() const;

    /// Copy with the hat moved elsewhere (used by negative controls and
    /// experiments). The target must be an initial-condition slot.
    ArrayShape with_hat(Cell c) const;

    bool in_rows(int row) const { return row >= 1 && row <= rows(); }
    bool is_slot(Cell c) const;
    bool is_value_cell(Cell c) const;
    /// Value displayed at a value cell: col - 2.
    int value(Cell c) const;
    /// The cell of `value` in `row`; the value's parity must match the row.
    Cell value_cell(int row, int value) const;

    bool operator==(const ArrayShape&) const = default;

private:
    Family family_;
    int ell_;
    int i_;
    std::optional<Cell> hat_override_;
};

/// True iff some full downward path (one cell per row, top row to bottom row,
/// consecutive cells in adjacent columns) visits both cells:
/// |col difference| <= |row difference|, with distinct same-row cells never
/// co-path. Both cells must lie in the shape.
bool copath(const ArrayShape& shape, Cell a, Cell b);

/// A partition on the staggered array: multiplicity of each value cell
/// (implicit zeros elsewhere). Weight n = sum of mult * value, parts j = sum
/// of mult.
class FrequencyArray {
public:
    explicit FrequencyArray(ArrayShape shape) : shape_(std::move(shape)) {}

    const ArrayShape& shape() const noexcept { return shape_; }
    const std::map<Cell, int>& support() const noexcept { return freq_; }
    int multiplicity(Cell c) const;
    void set(Cell c, int mult);
    int weight() const;
    int parts() const;

    bool operator==(const FrequencyArray&) const = default;

private:
    ArrayShape shape_;
    std::map<Cell, int> freq_;
};

/// Maximum over all full downward paths of the sum of frequencies plus any
/// slot values on the path, by row-by-row dynamic programming over columns.
/// slot_values maps row -> value placed at that row's initial slot. col_max
/// must cover every column an optimal path can use; max occupied column + 1
/// always suffices (entries right of the support are zero).
int max_path_sum(const FrequencyArray& fa, const std::map<int, int>& slot_values, int col_max);

/// Admissibility with bound k: every downward-path sum (frequencies plus the
/// hat) is <= k. This DP check is the general-k oracle.
bool is_admissible(const FrequencyArray& fa, int k);

/// k = 1 fast path: every frequency <= 1, no support cell co-path with the
/// hat, no two support cells co-path. Equivalent to is_admissible(fa, 1).
bool is_admissible_fast(const FrequencyArray& fa);

/// All value cells with value <= value_max that are co-path with the hat;
/// with k = 1 these are exactly the cells whose frequency is forced to zero.
std::set<Cell> forbidden_cells(const ArrayShape& shape, int value_max);

} // namespace qident
