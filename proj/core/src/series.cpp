#include "qident/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qident {

Series::Series(int qbound) : qbound_(qbound) {
    if (qbound < 0) throw std::invalid_argument("Series: qbound must be >= 0");
}

Series Series::one(int qbound) {
    Series s(qbound);
    s.terms_[{0, 0}] = 1;
    return s;
}

Series Series::monomial(const Int& coeff, int zexp, int qexp, int qbound) {
    if (zexp < 0 || qexp < 0) throw std::invalid_argument("Series::monomial: negative exponent");
    Series s(qbound);
    s.add_term(zexp, qexp, coeff);
    return s;
}

Int Series::coeff(int zexp, int qexp) const {
    auto it = terms_.find({qexp, zexp});
    return it == terms_.end() ? Int(0) : it->second;
}

void Series::add_term(int zexp, int qexp, const Int& c) {
    if (zexp < 0 || qexp < 0) throw std::invalid_argument("Series::add_term: negative exponent");
    if (qexp > qbound_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace({qexp, zexp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Series Series::truncated(int qbound) const {
    if (qbound > qbound_)
        throw std::invalid_argument("Series::truncated: cannot raise the truncation order");
    Series out(qbound);
    for (const auto& [k, c] : terms_) {
        if (k.qexp > qbound) break;
        out.terms_.emplace(k, c);
    }
    return out;
}

void Series::lower_to(int qbound) {
    if (qbound >= qbound_) return;
    *this = truncated(qbound);
}

Series Series::dilated(int d) const {
    if (d < 0) throw std::invalid_argument("Series::dilated: d must be >= 0");
    Series out(qbound_);
    for (const auto& [k, c] : terms_) out.add_term(k.zexp, k.qexp + k.zexp * d, c);
    return out;
}

Series Series::inverse() const {
    // q-graded inversion: r_0 = u, r_k = -u * sum_{j=1..k} s_j r_{k-j}.
    // Slices here are z-polynomials, so a unit q^0 slice (just +-1) suffices.
    auto c0 = terms_.find({0, 0});
    bool unit = c0 != terms_.end() && (c0->second == 1 || c0->second == -1);
    if (unit) {
        for (const auto& [k, c] : terms_) {
            if (k.qexp > 0) break;
            if (k.zexp != 0) { unit = false; break; }
        }
    }
    if (!unit)
        throw std::domain_error("Series::inverse: q^0 slice must be exactly +1 or -1");
    const Int u = c0->second;

    // slices[k] = z-polynomial coefficient of q^k in the inverse
    std::vector<std::map<int, Int>> inv(qbound_ + 1);
    inv[0][0] = u;
    for (int k = 1; k <= qbound_; ++k) {
        std::map<int, Int> acc;
        for (auto it = terms_.upper_bound({0, std::numeric_limits<int>::max()});
             it != terms_.end() && it->first.qexp <= k; ++it) {
            const int j = it->first.qexp;
            for (const auto& [zr, cr] : inv[k - j]) {
                Int& slot = acc[it->first.zexp + zr];
                slot += it->second * cr;
            }
        }
        for (auto& [z, c] : acc) {
            if (c != 0) inv[k][z] = -u * c;
        }
    }
    Series out(qbound_);
    for (int k = 0; k <= qbound_; ++k)
        for (const auto& [z, c] : inv[k]) out.terms_[{k, z}] = c;
    return out;
}

Series Series::at_z1() const {
    Series out(qbound_);
    for (const auto& [k, c] : terms_) out.add_term(0, k.qexp, c);
    return out;
}

bool Series::partition_like() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.zexp <= t.first.qexp; });
}

bool Series::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second > 0; });
}

Series& Series::operator+=(const Series& rhs) {
    lower_to(rhs.qbound_);
    for (const auto& [k, c] : rhs.terms_) add_term(k.zexp, k.qexp, c);
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    lower_to(rhs.qbound_);
    for (const auto& [k, c] : rhs.terms_) add_term(k.zexp, k.qexp, -c);
    return *this;
}

Series& Series::operator*=(const Series& rhs) {
    const int nb = std::min(qbound_, rhs.qbound_);
    std::map<TermKey, Int> out;
    for (const auto& [ka, ca] : terms_) {
        if (ka.qexp > nb) break;
        for (const auto& [kb, cb] : rhs.terms_) {
            if (kb.qexp > nb - ka.qexp) break;
            Int& slot = out[{ka.qexp + kb.qexp, ka.zexp + kb.zexp}];
            slot += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    qbound_ = nb;
    terms_ = std::move(out);
    return *this;
}

Series Series::operator-() const {
    Series out(qbound_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

bool eq_series(const Series& a, const Series& b) {
    const int nb = std::min(a.qbound(), b.qbound());
    return a.truncated(nb) == b.truncated(nb);
}

Series poch_inf(int start, int step, int qbound) {
    if (start == 0) throw std::domain_error("poch_inf: start = 0 gives a non-invertible factor");
    if (start < 0 || step < 1) throw std::invalid_argument("poch_inf: need start >= 1, step >= 1");
    Series out = Series::one(qbound);
    for (long long e = start; e <= qbound; e += step) {
        Series factor = Series::one(qbound);
        factor.add_term(0, static_cast<int>(e), -1);
        out *= factor;
    }
    return out;
}

namespace {

void require_family_params(int ell, int i, int ell_min) {
    if (ell < ell_min || i < 0 || i > ell)
        throw std::invalid_argument("product_side: need ell >= " + std::to_string(ell_min) +
                                    " and 0 <= i <= ell");
}

} // namespace

Series product_side(Family family, int ell, int i, int qbound) {
    require_family_params(ell, i, 1);
    const int modulus = family == Family::AG ? 2 * ell + 3 : 2 * ell + 2;
    Series out = poch_inf(i + 1, modulus, qbound);
    out *= poch_inf(modulus - 1 - i, modulus, qbound);
    out *= poch_inf(modulus, modulus, qbound);
    out *= poch_inf(1, 1, qbound).inverse();
    return out;
}

Series product_side_gga(int ell, int i, int qbound) {
    require_family_params(ell, i, 1);
    const int modulus = 4 * ell + 4;
    Series out = poch_inf(2, 4, qbound);
    out *= poch_inf(2 * i + 1, modulus, qbound);
    out *= poch_inf(4 * ell - 2 * i + 3, modulus, qbound);
    out *= poch_inf(modulus, modulus, qbound);
    out *= poch_inf(1, 1, qbound).inverse();
    return out;
}

} // namespace qident
