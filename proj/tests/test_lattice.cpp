#include "doctest.h"

#include "qident/json_io.hpp"
#include "qident/lattice.hpp"

#include <functional>
#include <random>

using qident::ArrayShape;
using qident::Cell;
using qident::Family;
using qident::FrequencyArray;

TEST_CASE("shape validation and geometry") {
    CHECK_THROWS_AS(ArrayShape(Family::AB, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(ArrayShape(Family::AG, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(ArrayShape(Family::AG, 2, -1), std::invalid_argument);

    ArrayShape ag(Family::AG, 4, 2);
    CHECK(ag.rows() == 8);
    CHECK(ag.odd_value_row(1));
    CHECK_FALSE(ag.odd_value_row(2));
    CHECK(ag.slot_col(1) == 1);
    CHECK(ag.slot_col(2) == 2);

    // AB: the parity of i decides which rows hold odd values
    ArrayShape ab_odd(Family::AB, 4, 3);
    CHECK(ab_odd.rows() == 7);
    CHECK(ab_odd.odd_value_row(1));
    CHECK(ab_odd.odd_value_row(7));
    ArrayShape ab_even(Family::AB, 4, 2);
    CHECK_FALSE(ab_even.odd_value_row(1));
    CHECK(ab_even.odd_value_row(2));
    CHECK_FALSE(ab_even.odd_value_row(7));

    CHECK(ag.value_cell(1, 3) == Cell{1, 5});
    CHECK(ag.value(Cell{1, 5}) == 3);
    CHECK_THROWS_AS(ag.value_cell(1, 2), std::invalid_argument); // even value, odd row
}

TEST_CASE("hat placement") {
    CHECK(ArrayShape(Family::AG, 4, 2).hat() == Cell{7, 1});
    CHECK(ArrayShape(Family::AG, 4, 0).hat() == Cell{8, 2});
    CHECK(ArrayShape(Family::AG, 4, 1).hat() == Cell{1, 1});
    CHECK(ArrayShape(Family::AG, 4, 3).hat() == Cell{3, 1});
    CHECK(ArrayShape(Family::AG, 4, 4).hat() == Cell{5, 1});
    CHECK(ArrayShape(Family::AB, 4, 4).hat() == Cell{4, 1});
    CHECK(ArrayShape(Family::AB, 4, 0).hat() == Cell{1, 2});
    CHECK(ArrayShape(Family::AB, 4, 2).hat() == Cell{2, 1});
    CHECK(ArrayShape(Family::AB, 4, 3).hat() == Cell{3, 1});

    ArrayShape moved = ArrayShape(Family::AB, 4, 2).with_hat(Cell{7, 2});
    CHECK(moved.hat() == Cell{7, 2});
    CHECK_THROWS_AS(ArrayShape(Family::AB, 4, 2).with_hat(Cell{7, 1}), std::invalid_argument);
}

TEST_CASE("copath characterization") {
    ArrayShape ag(Family::AG, 2, 2);
    CHECK(copath(ag, ag.value_cell(1, 1), ag.value_cell(2, 2)));  // cols 3, 4
    CHECK_FALSE(copath(ag, ag.value_cell(1, 1), ag.value_cell(1, 3)));
    CHECK(copath(ag, ag.value_cell(1, 1), ag.value_cell(1, 1))); // reflexive
    CHECK_FALSE(copath(ag, ag.value_cell(1, 1), ag.value_cell(2, 12))); // cols 3 vs 14

    // symmetric
    ArrayShape big(Family::AG, 3, 1);
    for (int r1 = 1; r1 <= 6; ++r1)
        for (int r2 = 1; r2 <= 6; ++r2)
            for (int v1 = 1; v1 <= 5; ++v1)
                for (int v2 = 1; v2 <= 5; ++v2) {
                    if ((v1 % 2 == 1) != big.odd_value_row(r1)) continue;
                    if ((v2 % 2 == 1) != big.odd_value_row(r2)) continue;
                    Cell a = big.value_cell(r1, v1), b = big.value_cell(r2, v2);
                    CHECK(copath(big, a, b) == copath(big, b, a));
                }

    CHECK_THROWS_AS(copath(ag, Cell{9, 3}, Cell{1, 3}), std::invalid_argument);
}

TEST_CASE("max_path_sum examples") {
    // AG ell=2, i=2: hat in row 3
    ArrayShape shape(Family::AG, 2, 2);
    REQUIRE(shape.hat() == Cell{3, 1});
    const std::map<int, int> hat_slot{{3, 1}};

    FrequencyArray empty(shape);
    CHECK(max_path_sum(empty, hat_slot, 6) == 1);

    FrequencyArray one_top(shape);
    one_top.set(shape.value_cell(1, 1), 1);
    CHECK(max_path_sum(one_top, hat_slot, 6) == 2); // path col3 -> col2 -> col1 -> col2

    FrequencyArray one_beside(shape);
    one_beside.set(shape.value_cell(3, 1), 1);
    CHECK(max_path_sum(one_beside, hat_slot, 6) == 1); // same row as the hat
}

TEST_CASE("admissibility matches the display constraints") {
    for (Family family : {Family::AG, Family::AB}) {
        for (int i = 0; i <= 4; ++i) {
            FrequencyArray empty{ArrayShape(family, 4, i)};
            CHECK(is_admissible(empty, 1));
        }
    }

    ArrayShape p1(Family::AG, 4, 1);
    FrequencyArray fa(p1);
    fa.set(p1.value_cell(3, 1), 1);
    CHECK_FALSE(is_admissible(fa, 1));

    ArrayShape p4(Family::AG, 4, 4);
    FrequencyArray both(p4);
    both.set(p4.value_cell(5, 1), 1);
    both.set(p4.value_cell(6, 2), 1);
    CHECK_FALSE(is_admissible(both, 1));
    FrequencyArray alone(p4);
    alone.set(p4.value_cell(5, 1), 1);
    CHECK(is_admissible(alone, 1));
    alone.set(p4.value_cell(5, 1), 0);
    alone.set(p4.value_cell(6, 2), 1);
    CHECK(is_admissible(alone, 1));

    FrequencyArray doubled(p4);
    doubled.set(p4.value_cell(5, 1), 2);
    CHECK_FALSE(is_admissible(doubled, 1));
    CHECK(is_admissible(doubled, 2));
}

namespace {

// every frequency array over cells with values <= vmax and weight <= wmax
void for_each_array(const ArrayShape& shape, int wmax,
                    const std::function<void(const FrequencyArray&)>& visit) {
    std::vector<Cell> cells;
    for (int row = 1; row <= shape.rows(); ++row)
        for (int v = shape.odd_value_row(row) ? 1 : 2; v <= wmax; v += 2)
            cells.push_back(shape.value_cell(row, v));
    FrequencyArray fa(shape);
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int weight) {
        if (idx == cells.size()) {
            visit(fa);
            return;
        }
        const int value = shape.value(cells[idx]);
        for (int mult = 0; weight + mult * value <= wmax; ++mult) {
            fa.set(cells[idx], mult);
            rec(idx + 1, weight + mult * value);
        }
        fa.set(cells[idx], 0);
    };
    rec(0, 0);
}

} // namespace

TEST_CASE("DP oracle agrees with the pairwise characterization") {
    for (Family family : {Family::AG, Family::AB}) {
        for (int i = 0; i <= 2; ++i) {
            ArrayShape shape(family, 2, i);
            int checked = 0;
            for_each_array(shape, 6, [&](const FrequencyArray& fa) {
                ++checked;
                CHECK(is_admissible(fa, 1) == is_admissible_fast(fa));
            });
            CHECK(checked > 40);
        }
    }
}

TEST_CASE("col_max beyond the support changes nothing") {
    std::mt19937 rng(17);
    ArrayShape shape(Family::AG, 3, 2);
    const std::map<int, int> slot{{shape.hat().row, 1}};
    std::uniform_int_distribution<int> row_pick(1, shape.rows());
    std::uniform_int_distribution<int> val_pick(1, 9);
    std::uniform_int_distribution<int> mult_pick(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        FrequencyArray fa(shape);
        for (int t = 0; t < 4; ++t) {
            const int row = row_pick(rng);
            int v = val_pick(rng);
            if ((v % 2 == 1) != shape.odd_value_row(row)) ++v;
            fa.set(shape.value_cell(row, v), mult_pick(rng));
        }
        int max_col = shape.hat().col;
        for (const auto& [c, m] : fa.support()) max_col = std::max(max_col, c.col);
        CHECK(max_path_sum(fa, slot, max_col + 1) ==
              max_path_sum(fa, slot, max_col + shape.rows()));
    }
}

TEST_CASE("removing a part keeps an array admissible") {
    ArrayShape shape(Family::AB, 3, 2);
    // build an admissible array by hand and strip parts one at a time
    FrequencyArray fa(shape);
    fa.set(shape.value_cell(1, 6), 1);
    fa.set(shape.value_cell(3, 2), 1);
    REQUIRE(is_admissible(fa, 1));
    for (const auto& [cell, mult] : fa.support()) {
        FrequencyArray smaller = fa;
        smaller.set(cell, mult - 1);
        CHECK(is_admissible(smaller, 1));
    }
}

TEST_CASE("forbidden cells reproduce the shipped display fixtures") {
    for (const char* name : {"forbidden_ag_l4.json", "forbidden_ab_l4.json"}) {
        const auto fixture = qident::forbidden_fixture_from_json(
            qident::read_file(qident::default_data_dir() + "/fixtures/" + name));
        CHECK(fixture.ell == 4);
        for (const auto& [i, cells] : fixture.cells_by_i) {
            ArrayShape shape(fixture.family, fixture.ell, i);
            std::set<Cell> expected;
            for (const auto& [row, value] : cells) expected.insert(shape.value_cell(row, value));
            CHECK(forbidden_cells(shape, fixture.value_max) == expected);
        }
        CHECK(fixture.cells_by_i.size() == 5);
    }
}

TEST_CASE("frequency array json round trip") {
    ArrayShape shape(Family::AG, 2, 2);
    FrequencyArray fa(shape);
    fa.set(shape.value_cell(3, 1), 1);
    fa.set(shape.value_cell(2, 4), 2);
    const auto back = qident::frequency_array_from_json(qident::to_json(fa));
    CHECK(back == fa);
    CHECK(back.weight() == 9);
    CHECK(back.parts() == 3);
}
