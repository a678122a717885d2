#pragma once

#include "qident/enumerate.hpp"
#include "qident/multisum.hpp"
#include "qident/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qident {

struct CheckParams {
    std::optional<Family> family;
    int ell = 0;
    std::optional<int> i;
    int qbound = 0;
};

/// First failing coefficient of a comparison, at the lexicographically least
/// (qexp, zexp). The side labels say which two quantities disagreed.
struct Discrepancy {
    int zexp = 0;
    int qexp = 0;
    Int lhs;
    Int rhs;
    std::string lhs_side;
    std::string rhs_side;
};

struct CheckReport {
    std::string check;
    CheckParams params;
    bool pass = false;
    std::optional<Discrepancy> first_discrepancy;
    double millis = 0.0;
};

/// Deliberate defects for negative controls; each one must make its check
/// fail, guarding the suite against vacuously-passing comparisons.
enum class Mutation {
    none,
    /// AB hats for even i mirrored to the bottom of the array.
    ab_hat_mirrored,
    /// Tail vectors built with the ramp shifted one slot to the right.
    tail_vector_shifted,
    /// Window parity condition dropped from the Bressoud enumerator.
    bressoud_parity_off,
};

/// Functional equations satisfied by the enumerator-built generating
/// functions: for 0 <= i < ell,
///   P_i(z,q) - P_{i+1}(zq,q) = sum_{j=1}^{i} z q^j P_{i-j+1}(z q^{j+1}, q)
/// and the i = ell equation with P_ell (AG) resp. P_{ell-1} (AB) on the left,
/// plus the rearranged three-term forms obtained by differencing consecutive
/// instances.
CheckReport check_fe_enumerator(Family family, int ell, int qbound,
                                Mutation mutation = Mutation::none);

/// Exact equality of the enumerator generating function with the multisum.
CheckReport check_main_theorem(Family family, int ell, int i, int qbound);

/// Three-way exact equality at z = 1: enumerator vs product vs residue count,
/// compared pairwise so a failure localizes the diverging module.
CheckReport check_sum_to_product(Family family, int ell, int i, int qbound);

/// Classical refinements: the Gordon, Bressoud and Goellnitz-Gordon-Andrews
/// enumerators against their x-refined multisums (x tracked in the z slot
/// with weight <1,2,...,ell>).
CheckReport check_classical(int ell, int i, int qbound, Mutation mutation = Mutation::none);

/// Atomic relations evaluate to the zero series: every 1 <= i <= ell and
/// every shift vector with entries in [0, entry_max].
CheckReport check_atomic_relations(Family family, int ell, int qbound, int entry_max,
                                   Mutation mutation = Mutation::none);

/// Telescoping certificates expand exactly to their claimed sums (formal
/// check, no series evaluation).
CheckReport check_telescope(Family family, int ell);
CheckReport check_telescope(const TelescopeCertificate& certificate);

/// The multisum functional equations themselves, as series identities.
CheckReport check_fe_multisum(Family family, int ell, int qbound);

struct CheckSpec {
    std::string kind; // fe | main | product | classical | telescope | atoms | fe-multisum
    std::optional<Family> family;
    int ell = 0;
    std::optional<int> i;
    int qbound = 0;
    Mutation mutation = Mutation::none;
};

using SuiteConfig = std::vector<CheckSpec>;

/// Declarative suite for one (family, ell, qbound): selector is one of the
/// CheckSpec kinds or "all".
SuiteConfig default_suite(Family family, int ell, int qbound, const std::string& selector);

/// Executes each spec in order. Unknown kinds throw std::invalid_argument.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

bool all_pass(const std::vector<CheckReport>& reports);

} // namespace qident
