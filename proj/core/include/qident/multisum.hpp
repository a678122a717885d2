#pragma once

#include "qident/series.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qident {

/// Weight vector with entries max(0, j - i + 1): the 1 sits in position i and
/// the entries ramp up to the right. tail_vector(i) . n equals
/// N_i + N_{i+1} + ... + N_ell where N_m = n_m + ... + n_ell, which is why it
/// carries the linear part of the multisum exponents. i = ell + 1 gives the
/// zero vector.
std::vector<int> tail_vector(int i, int ell);

/// Standard basis vector, 1 <= i <= ell.
std::vector<int> unit_vector(int i, int ell);

std::vector<int> constant_vector(int c, int ell);

/// The truncated multisum
///   sum over n in N^ell of z^{weight . n} q^{N_1^2 + ... + N_ell^2 + v . n}
///     / ((q;q)_{n_1} ... (q;q)_{n_ell})
/// with (q^2;q^2)_{n_ell} replacing the last factor when star is set.
/// weight = all-ones gives the part-count refinement; weight = <1,2,...,ell>
/// gives the classical x-refinement. Entries of weight must be >= 0.
Series multisum(const std::vector<int>& v, const std::vector<int>& weight, bool star, int qbound);

/// multisum(tail_vector(i+1, ell), all-ones): the sum side of the main
/// identities for hat position i, plain (AG) or star (AB).
Series tail_multisum(int i, int ell, bool star, int qbound);

/// Goellnitz-Gordon-Andrews multisum: the (-q;q^2)_{N_1} factor is expanded
/// exactly, the quadratic part is N_1^2 + 2(N_2^2 + ... + N_ell^2), the linear
/// part 2(N_{i+1} + ... + N_ell), and every Pochhammer factor has base q^2.
Series gga_multisum(int ell, int i, const std::vector<int>& weight, int qbound);

/// Key of one monomial-weighted multisum term z^zexp q^qexp S_v.
struct STermKey {
    int zexp = 0;
    int qexp = 0;
    std::vector<int> v;
    auto operator<=>(const STermKey&) const = default;
};

/// Exact linear combination of monomial-weighted multisum terms, canonical
/// (no zero coefficients). All vectors share one length and one star flag;
/// equality is syntactic, deliberately not modulo any symmetry of the
/// evaluated sums, so that a passing telescope check certifies the formal
/// manipulation itself.
class FormalSum {
public:
    FormalSum(int ell, bool star);

    int ell() const noexcept { return ell_; }
    bool star() const noexcept { return star_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<STermKey, Int>& terms() const noexcept { return terms_; }

    void add(const Int& coeff, int zexp, int qexp, std::vector<int> v);
    FormalSum& operator+=(const FormalSum& rhs);
    FormalSum& operator-=(const FormalSum& rhs);

    bool operator==(const FormalSum&) const = default;

private:
    int ell_;
    bool star_;
    std::map<STermKey, Int> terms_;
};

/// The three-term atomic relation with hat index i at shift v:
///   S_v - S_{v+e_i} - z q^{v_i + i} S_{v + 2 t_1 - 2 t_{i+1}}
/// For the star family the i = ell relation replaces e_ell by 2 e_ell (the
/// third-term vector v + 2 t_1 is unchanged since t_{ell+1} = 0). Each of
/// these evaluates to the zero series.
FormalSum atomic_relation(int i, const std::vector<int>& v, bool star);

/// Evaluate a formal sum as a truncated series: sum of
/// coeff * z^zexp q^qexp * multisum(v, all-ones).
Series eval_formal_sum(const FormalSum& fs, int qbound);

/// Asserts the exact vector identities the telescoping proofs rely on
/// (t_1 = all-ones + t_2, the prefix-sum identities, the min/ramp forms) for
/// every applicable index at this ell.
bool check_vector_identities(int ell);

/// One signed atomic relation inside a telescoping certificate.
struct CertificateTerm {
    int sign = 1; // +1 or -1
    int i = 1;
    std::vector<int> v;
};

/// A telescoping certificate: a signed list of atomic relations whose formal
/// expansion must cancel down to `claimed`.
struct TelescopeCertificate {
    std::string name;
    int ell = 0;
    bool star = false;
    std::optional<int> j; // shifted-family index, absent for the base form
    std::vector<CertificateTerm> combination;
    FormalSum claimed;
};

/// Expand a signed combination of atomic relations into one canonical sum.
FormalSum expand_combination(const std::vector<CertificateTerm>& combination, int ell, bool star);

/// True iff the combination expands exactly to `claimed` as a FormalSum.
/// Purely formal: no series evaluation is involved.
bool verify_telescope(const FormalSum& claimed, const std::vector<CertificateTerm>& combination);

/// The ladder certificate folding the full stack of atomic relations into the
/// four-term (AG) or three-term (AB) relation among the corner sums.
TelescopeCertificate base_certificate(Family family, int ell);

/// The tail-shifted ladder family, 1 <= j <= ell - 1.
TelescopeCertificate shifted_certificate(Family family, int ell, int j);

/// Parse a vector expression built from const / e / t primitives, e.g.
/// "2-e1-e2+t3" -> constant_vector(2) - e_1 - e_2 + t_3 at this ell.
std::vector<int> parse_vector_expr(const std::string& expr, int ell);

} // namespace qident
