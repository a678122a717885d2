#include "qident/enumerate.hpp"

#include <functional>
#include <stdexcept>

namespace qident {

namespace {

// Value cells compatible with the hat, sorted by value descending then row
// ascending; the search walks this list left to right.
std::vector<Cell> candidate_cells(const ArrayShape& shape, int value_max) {
    const Cell hat = shape.hat();
    std::vector<Cell> cells;
    for (int v = value_max; v >= 1; --v) {
        for (int row = 1; row <= shape.rows(); ++row) {
            if ((v % 2 == 1) != shape.odd_value_row(row)) continue;
            Cell c = shape.value_cell(row, v);
            if (!copath(shape, c, hat)) cells.push_back(c);
        }
    }
    return cells;
}

// Enumerates every admissible array of weight <= budget; visit(chosen, weight)
// is called once per array, including the empty one.
void walk_admissible(const ArrayShape& shape, int budget,
                     const std::function<void(const std::vector<Cell>&, int)>& visit) {
    const std::vector<Cell> cells = candidate_cells(shape, budget);
    std::vector<Cell> chosen;
    visit(chosen, 0);
    std::function<void(std::size_t, int)> dfs = [&](std::size_t idx, int weight) {
        for (std::size_t k = idx; k < cells.size(); ++k) {
            const Cell c = cells[k];
            const int v = c.col - 2;
            if (v > budget - weight) continue;
            bool clash = false;
            for (const Cell& d : chosen) {
                if (copath(shape, c, d)) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            chosen.push_back(c);
            visit(chosen, weight + v);
            dfs(k + 1, weight + v);
            chosen.pop_back();
        }
    };
    dfs(0, 0);
}

} // namespace

std::vector<FrequencyArray> admissible_arrays(const ArrayShape& shape, int n) {
    if (n < 0) throw std::invalid_argument("admissible_arrays: n must be >= 0");
    std::vector<FrequencyArray> out;
    walk_admissible(shape, n, [&](const std::vector<Cell>& chosen, int weight) {
        if (weight != n) return;
        FrequencyArray fa(shape);
        for (const Cell& c : chosen) fa.set(c, 1);
        out.push_back(std::move(fa));
    });
    return out;
}

Series admissible_gf(const ArrayShape& shape, int qbound) {
    Series out(qbound);
    walk_admissible(shape, qbound, [&](const std::vector<Cell>& chosen, int weight) {
        out.add_term(static_cast<int>(chosen.size()), weight, 1);
    });
    return out;
}

namespace {

void require_classical_params(int ell, int i) {
    if (ell < 1 || i < 0 || i > ell)
        throw std::invalid_argument("classical enumerator: need ell >= 1 and 0 <= i <= ell");
}

// Backtracking over weakly decreasing parts lists. accept(parts, next) decides
// whether `next` may be appended; every partition reached is tallied as
// z^{#parts} q^{weight}.
template <typename Accept>
Series enumerate_partitions(int qbound, Accept&& accept) {
    Series out(qbound);
    out.add_term(0, 0, 1);
    std::vector<int> parts;
    std::function<void(int, int)> dfs = [&](int prev, int weight) {
        for (int lambda = std::min(prev, qbound - weight); lambda >= 1; --lambda) {
            if (!accept(parts, lambda)) continue;
            parts.push_back(lambda);
            out.add_term(static_cast<int>(parts.size()), weight + lambda, 1);
            dfs(lambda, weight + lambda);
            parts.pop_back();
        }
    };
    dfs(qbound, 0);
    return out;
}

int count_ones(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts)
        if (p == 1) ++n;
    return n;
}

} // namespace

Series gordon_gf(int ell, int i, int qbound) {
    require_classical_params(ell, i);
    return enumerate_partitions(qbound, [&](const std::vector<int>& parts, int lambda) {
        if (lambda == 1 && count_ones(parts) >= i) return false;
        const auto k = static_cast<int>(parts.size());
        if (k >= ell && parts[k - ell] - lambda < 2) return false;
        return true;
    });
}

Series bressoud_gf(int ell, int i, int qbound, BressoudOptions options) {
    require_classical_params(ell, i);
    return enumerate_partitions(qbound, [&](const std::vector<int>& parts, int lambda) {
        if (lambda == 1 && count_ones(parts) >= i) return false;
        const auto k = static_cast<int>(parts.size());
        if (k >= ell && parts[k - ell] - lambda < 2) return false;
        if (options.window_parity && k >= ell - 1) {
            // appending lambda completes the length-ell window starting at k-ell+1
            const int j = k - (ell - 1);
            const bool tight = ell == 1 || parts[j] - lambda < 2;
            if (tight) {
                long long sum = lambda;
                for (int m = j; m < k; ++m) sum += parts[m];
                if (sum % 2 != i % 2) return false;
            }
        }
        return true;
    });
}

Series gga_gf(int ell, int i, int qbound) {
    require_classical_params(ell, i);
    return enumerate_partitions(qbound, [&](const std::vector<int>& parts, int lambda) {
        if (lambda % 2 == 1 && !parts.empty() && parts.back() == lambda) return false;
        if (lambda <= 2) {
            int small = 0;
            for (int p : parts)
                if (p <= 2) ++small;
            if (small >= i) return false;
        }
        const auto k = static_cast<int>(parts.size());
        if (k >= ell) {
            const int gap = parts[k - ell] - lambda;
            if (parts[k - ell] % 2 == 1 ? gap < 2 : gap <= 2) return false;
        }
        return true;
    });
}

Series residue_count_gf(Family family, int ell, int i, int qbound) {
    require_classical_params(ell, i);
    const int modulus = family == Family::AG ? 2 * ell + 3 : 2 * ell + 2;
    std::vector<bool> excluded(modulus, false);
    excluded[0] = true;
    excluded[(i + 1) % modulus] = true;
    excluded[(modulus - 1 - i) % modulus] = true;

    std::vector<Int> count(qbound + 1, 0);
    count[0] = 1;
    for (int part = 1; part <= qbound; ++part) {
        if (excluded[part % modulus]) continue;
        for (int n = part; n <= qbound; ++n) count[n] += count[n - part];
    }
    Series out(qbound);
    for (int n = 0; n <= qbound; ++n) out.add_term(0, n, count[n]);
    return out;
}

} // namespace qident
