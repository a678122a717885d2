#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>

namespace qident {

/// Exact integer coefficient type. Everything in this library is exact; no
/// floating point or modular arithmetic appears anywhere.
using Int = boost::multiprecision::cpp_int;

/// The two families of staggered arrays and their identities: AG uses arrays
/// with an even number of rows and odd moduli, AB an odd number of rows and
/// even moduli.
enum class Family { AG, AB };

/// Term key of a bivariate series. Ordered by (qexp, zexp) so that map
/// iteration matches the canonical serialization order.
struct TermKey {
    int qexp = 0;
    int zexp = 0;
    auto operator<=>(const TermKey&) const = default;
};

/// Truncated bivariate formal power series in z and q with exact integer
/// coefficients. Coefficients of q^b are tracked exactly for 0 <= b <= qbound;
/// anything beyond the bound is discarded on construction and by every
/// operation. Stored terms are always nonzero (canonical sparse form), so two
/// equal series compare equal as containers.
///
/// Values are immutable in spirit: all operations return new series or mutate
/// only *this, never their arguments, and there is no shared state, so
/// concurrent use of shared inputs is safe.
class Series {
public:
    /// The zero series at the given truncation order.
    explicit Series(int qbound);

    static Series one(int qbound);
    static Series monomial(const Int& coeff, int zexp, int qexp, int qbound);

    int qbound() const noexcept { return qbound_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<TermKey, Int>& terms() const noexcept { return terms_; }

    /// Coefficient of z^zexp q^qexp (zero if absent).
    Int coeff(int zexp, int qexp) const;

    /// Accumulate c * z^zexp q^qexp; terms beyond qbound are dropped, zero
    /// results are erased.
    void add_term(int zexp, int qexp, const Int& c);

    /// Copy truncated to a lower bound. Raising the bound would fabricate
    /// unknown coefficients and is rejected.
    Series truncated(int qbound) const;

    /// The substitution z -> z q^d (d >= 0): term (c, a, b) becomes
    /// (c, a, b + a*d). Exponents only increase, so the result is complete up
    /// to the same qbound.
    Series dilated(int d) const;

    /// Truncated multiplicative inverse. Requires the q^0 slice to be exactly
    /// +1 or -1; this is the only division the library ever needs.
    Series inverse() const;

    /// Set z = 1: collapse the z grading, keeping exact q coefficients.
    Series at_z1() const;

    /// True when every stored term satisfies zexp <= qexp. Holds for every
    /// partition generating function produced here (each part weighs >= 1).
    bool partition_like() const;

    bool nonnegative() const;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series operator-() const;

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }

    bool operator==(const Series&) const = default;

private:
    // Mixed-bound operands are first lowered to the common (minimum) bound.
    void lower_to(int qbound);

    int qbound_ = 0;
    std::map<TermKey, Int> terms_;
};

/// Equality at the common truncation order min(a.qbound, b.qbound).
bool eq_series(const Series& a, const Series& b);

/// Truncation of the infinite product prod_{j>=0} (1 - q^{start + j*step}).
/// start = 0 would contribute a non-invertible constant factor and is
/// rejected.
Series poch_inf(int start, int step, int qbound);

/// Product side of the sum-to-product identities, divided by (q;q)_inf:
///   AG: (q^{i+1}, q^{2l+2-i}, q^{2l+3}; q^{2l+3})_inf / (q;q)_inf
///   AB: (q^{i+1}, q^{2l+1-i}, q^{2l+2}; q^{2l+2})_inf / (q;q)_inf
Series product_side(Family family, int ell, int i, int qbound);

/// Goellnitz-Gordon-Andrews product:
///   (q^2;q^4)_inf (q^{2i+1}, q^{4l-2i+3}, q^{4l+4}; q^{4l+4})_inf / (q;q)_inf
Series product_side_gga(int ell, int i, int qbound);

} // namespace qident
