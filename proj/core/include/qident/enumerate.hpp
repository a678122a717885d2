#pragma once

#include "qident/lattice.hpp"
#include "qident/series.hpp"

#include <vector>

namespace qident {

/// Weakly decreasing list of positive integers.
using ClassicalPartition = std::vector<int>;

/// All k = 1 admissible frequency arrays of weight exactly n on the shape,
/// by depth-first search over values (descending) with incremental co-path
/// pruning. Deterministic order.
std::vector<FrequencyArray> admissible_arrays(const ArrayShape& shape, int n);

/// Bivariate generating function of the k = 1 admissible arrays: the
/// coefficient of z^j q^n counts weight-n arrays with exactly j parts.
/// Built from the same search for all n <= qbound.
Series admissible_gf(const ArrayShape& shape, int qbound);

/// Generating function (part count in the z slot) of partitions with
/// lambda_j - lambda_{j+ell} >= 2 and at most i occurrences of 1, by
/// backtracking over partitions.
Series gordon_gf(int ell, int i, int qbound);

struct BressoudOptions {
    /// The parity constraint on length-ell windows of nearly equal parts.
    /// Disabling it is a deliberate negative control, not a feature.
    bool window_parity = true;
};

/// As gordon_gf plus the window condition: whenever
/// lambda_j - lambda_{j+ell-1} < 2, the window sum
/// lambda_j + ... + lambda_{j+ell-1} must be congruent to i mod 2. Windows
/// that run off the end of the partition are unconstrained.
Series bressoud_gf(int ell, int i, int qbound, BressoudOptions options = {});

/// Goellnitz-Gordon-Andrews partitions: no repeated odd parts; for odd
/// lambda_j, lambda_j - lambda_{j+ell} >= 2; for even lambda_j,
/// lambda_j - lambda_{j+ell} > 2; at most i parts are <= 2.
Series gga_gf(int ell, int i, int qbound);

/// Number of partitions of n into parts not congruent to 0 or +-(i+1) modulo
/// 2*ell+3 (AG) or 2*ell+2 (AB), as a pure q series. Counted by a direct
/// restricted-part recurrence with no series arithmetic, so it serves as an
/// independent oracle for product_side. The two agree whenever the three
/// excluded residues are distinct, i.e. everywhere except AB with i = ell.
Series residue_count_gf(Family family, int ell, int i, int qbound);

} // namespace qident
