#include "qident/multisum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qident {

std::vector<int> tail_vector(int i, int ell) {
    if (ell < 1 || i < 1 || i > ell + 1)
        throw std::invalid_argument("tail_vector: need 1 <= i <= ell + 1");
    std::vector<int> v(ell);
    for (int j = 1; j <= ell; ++j) v[j - 1] = std::max(0, j - i + 1);
    return v;
}

std::vector<int> unit_vector(int i, int ell) {
    if (ell < 1 || i < 1 || i > ell)
        throw std::invalid_argument("unit_vector: need 1 <= i <= ell");
    std::vector<int> v(ell, 0);
    v[i - 1] = 1;
    return v;
}

std::vector<int> constant_vector(int c, int ell) {
    if (ell < 1) throw std::invalid_argument("constant_vector: need ell >= 1");
    return std::vector<int>(ell, c);
}

namespace {

// Dense pure-q polynomial, exact coefficients, truncated multiplication.
using QPoly = std::vector<Int>;

QPoly qpoly_one(int qbound) {
    QPoly p(qbound + 1);
    p[0] = 1;
    return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b, int qbound) {
    QPoly r(qbound + 1);
    const int na = static_cast<int>(a.size()) - 1;
    for (int i = 0; i <= std::min(na, qbound); ++i) {
        if (a[i] == 0) continue;
        const int jmax = std::min(static_cast<int>(b.size()) - 1, qbound - i);
        for (int j = 0; j <= jmax; ++j) {
            if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// table[n] = truncated inverse of prod_{j=1..n} (1 - q^{j*step}), i.e. the
// generating function of partitions into parts from {step, 2*step, ..., n*step}.
std::vector<QPoly> inverse_pochhammer_table(int nmax, int step, int qbound) {
    std::vector<QPoly> table;
    table.push_back(qpoly_one(qbound));
    for (int n = 1; n <= nmax; ++n) {
        QPoly cur = table.back();
        const int d = n * step;
        for (int m = d; m <= qbound; ++m) cur[m] += cur[m - d];
        table.push_back(std::move(cur));
    }
    return table;
}

// (-q; q^2)_n = prod_{m=1..n} (1 + q^{2m-1})
std::vector<QPoly> odd_binomial_table(int nmax, int qbound) {
    std::vector<QPoly> table;
    table.push_back(qpoly_one(qbound));
    for (int n = 1; n <= nmax; ++n) {
        QPoly factor(qbound + 1);
        factor[0] = 1;
        if (2 * n - 1 <= qbound) factor[2 * n - 1] = 1;
        table.push_back(qpoly_mul(table.back(), factor, qbound));
    }
    return table;
}

long long negative_slack(const std::vector<int>& v, int upto) {
    long long s = 0;
    for (int m = 0; m < upto; ++m)
        if (v[m] < 0) s += static_cast<long long>(v[m]) * v[m] / 4;
    return s;
}

} // namespace

Series multisum(const std::vector<int>& v, const std::vector<int>& weight, bool star, int qbound) {
    const int ell = static_cast<int>(v.size());
    if (ell < 1) throw std::invalid_argument("multisum: empty vector");
    if (static_cast<int>(weight.size()) != ell)
        throw std::invalid_argument("multisum: weight length mismatch");
    if (std::any_of(weight.begin(), weight.end(), [](int w) { return w < 0; }))
        throw std::invalid_argument("multisum: negative weight entry");

    const int most_negative =
        -std::min(0, *std::min_element(v.begin(), v.end()));
    const int nmax =
        static_cast<int>(std::sqrt(static_cast<double>(qbound))) + 2 + most_negative;
    const auto inv1 = inverse_pochhammer_table(nmax, 1, qbound);
    const auto inv2 = star ? inverse_pochhammer_table(nmax, 2, qbound) : std::vector<QPoly>{};

    Series out(qbound);
    // Choose n_j for j = ell down to 1. suffix_n is N_{j+1}; exponent carries
    // sum_{m > j} (N_m^2 + v_m n_m); denom the running Pochhammer product.
    std::function<void(int, long long, long long, long long, const QPoly&)> descend =
        [&](int j, long long suffix_n, long long exponent, long long zexp, const QPoly& denom) {
            // Rows m < j have N_m >= N_j, so each nonnegative v_m contributes
            // at least N_j^2; each negative one at least -v_m^2/4 (the slack).
            const long long slack = negative_slack(v, j - 1);
            int nonneg_before = 0;
            for (int m = 0; m < j - 1; ++m)
                if (v[m] >= 0) ++nonneg_before;
            const int vj = v[j - 1];
            for (long long nj = 0;; ++nj) {
                const long long capital = suffix_n + nj; // N_j
                const long long e = exponent + capital * capital + static_cast<long long>(vj) * nj;
                if (e + nonneg_before * capital * capital - slack > qbound) {
                    if (vj >= 0) break; // the bound grows with nj
                    if (nj > 2LL * qbound + 2 * std::abs(vj) + 4) break;
                    continue;
                }
                if (nj > nmax) throw std::logic_error("multisum: summation index exceeded table");
                const QPoly& factor =
                    (star && j == ell) ? inv2[static_cast<int>(nj)] : inv1[static_cast<int>(nj)];
                QPoly next = qpoly_mul(denom, factor, qbound);
                const long long z = zexp + static_cast<long long>(weight[j - 1]) * nj;
                if (j == 1) {
                    if (e < 0)
                        throw std::domain_error("multisum: vector produces a negative q exponent");
                    for (int m = 0; m + e <= qbound; ++m) {
                        if (next[m] != 0)
                            out.add_term(static_cast<int>(z), static_cast<int>(e) + m, next[m]);
                    }
                } else {
                    descend(j - 1, capital, e, z, next);
                }
            }
        };
    descend(ell, 0, 0, 0, qpoly_one(qbound));
    return out;
}

Series tail_multisum(int i, int ell, bool star, int qbound) {
    if (i < 0 || i > ell) throw std::invalid_argument("tail_multisum: need 0 <= i <= ell");
    return multisum(tail_vector(i + 1, ell), constant_vector(1, ell), star, qbound);
}

Series gga_multisum(int ell, int i, const std::vector<int>& weight, int qbound) {
    if (ell < 1 || i < 0 || i > ell)
        throw std::invalid_argument("gga_multisum: need ell >= 1 and 0 <= i <= ell");
    if (static_cast<int>(weight.size()) != ell)
        throw std::invalid_argument("gga_multisum: weight length mismatch");

    const int nmax = static_cast<int>(std::sqrt(static_cast<double>(qbound))) + 2;
    const auto inv2 = inverse_pochhammer_table(nmax, 2, qbound);
    const auto oddb = odd_binomial_table(nmax, qbound);
    const std::vector<int> tail = tail_vector(i + 1, ell);

    Series out(qbound);
    std::function<void(int, long long, long long, long long, const QPoly&)> descend =
        [&](int j, long long suffix_n, long long exponent, long long zexp, const QPoly& denom) {
            for (long long nj = 0;; ++nj) {
                const long long capital = suffix_n + nj; // N_j
                const long long quad = j == 1 ? capital * capital : 2 * capital * capital;
                const long long e = exponent + quad + 2LL * tail[j - 1] * nj;
                if (e > qbound) break;
                if (capital > nmax) break;
                QPoly next = qpoly_mul(denom, inv2[static_cast<int>(nj)], qbound);
                const long long z = zexp + static_cast<long long>(weight[j - 1]) * nj;
                if (j == 1) {
                    QPoly full = qpoly_mul(next, oddb[static_cast<int>(capital)], qbound);
                    for (int m = 0; m + e <= qbound; ++m) {
                        if (full[m] != 0)
                            out.add_term(static_cast<int>(z), static_cast<int>(e) + m, full[m]);
                    }
                } else {
                    descend(j - 1, capital, e, z, next);
                }
            }
        };
    descend(ell, 0, 0, 0, qpoly_one(qbound));
    return out;
}

FormalSum::FormalSum(int ell, bool star) : ell_(ell), star_(star) {
    if (ell < 1) throw std::invalid_argument("FormalSum: need ell >= 1");
}

void FormalSum::add(const Int& coeff, int zexp, int qexp, std::vector<int> v) {
    if (static_cast<int>(v.size()) != ell_)
        throw std::invalid_argument("FormalSum::add: vector length mismatch");
    if (coeff == 0) return;
    STermKey key{zexp, qexp, std::move(v)};
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
    if (rhs.ell_ != ell_ || rhs.star_ != star_)
        throw std::invalid_argument("FormalSum: mixing incompatible sums");
    for (const auto& [k, c] : rhs.terms_) add(c, k.zexp, k.qexp, k.v);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& rhs) {
    if (rhs.ell_ != ell_ || rhs.star_ != star_)
        throw std::invalid_argument("FormalSum: mixing incompatible sums");
    for (const auto& [k, c] : rhs.terms_) add(-c, k.zexp, k.qexp, k.v);
    return *this;
}

FormalSum atomic_relation(int i, const std::vector<int>& v, bool star) {
    const int ell = static_cast<int>(v.size());
    if (i < 1 || i > ell) throw std::invalid_argument("atomic_relation: need 1 <= i <= ell");
    FormalSum fs(ell, star);
    fs.add(1, 0, 0, v);

    std::vector<int> second = v;
    second[i - 1] += (star && i == ell) ? 2 : 1;
    fs.add(-1, 0, 0, std::move(second));

    // v + 2 t_1 - 2 t_{i+1}: entry j gains 2 min(j, i); at i = ell this is
    // v + 2 t_1 for both families.
    std::vector<int> third = v;
    for (int j = 1; j <= ell; ++j) third[j - 1] += 2 * std::min(j, i);
    fs.add(-1, 1, v[i - 1] + i, std::move(third));
    return fs;
}

Series eval_formal_sum(const FormalSum& fs, int qbound) {
    Series out(qbound);
    const std::vector<int> ones = constant_vector(1, fs.ell());
    for (const auto& [key, coeff] : fs.terms()) {
        if (key.qexp > qbound) continue;
        Series s = multisum(key.v, ones, fs.star(), qbound - key.qexp);
        for (const auto& [tk, tc] : s.terms())
            out.add_term(tk.zexp + key.zexp, tk.qexp + key.qexp, tc * coeff);
    }
    return out;
}

namespace {

std::vector<int> vec_add(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t m = 0; m < a.size(); ++m) a[m] += b[m];
    return a;
}

std::vector<int> vec_sub(std::vector<int> a, const std::vector<int>& b) {
    for (std::size_t m = 0; m < a.size(); ++m) a[m] -= b[m];
    return a;
}

std::vector<int> prefix_sum_vector(int j, int ell) {
    // e_1 + ... + e_j (j = 0 gives the zero vector)
    std::vector<int> v(ell, 0);
    for (int m = 0; m < j; ++m) v[m] = 1;
    return v;
}

} // namespace

bool check_vector_identities(int ell) {
    if (ell < 1) throw std::invalid_argument("check_vector_identities: need ell >= 1");
    const auto ones = constant_vector(1, ell);
    const auto twos = constant_vector(2, ell);
    // t_{ell+1} = 0
    if (tail_vector(ell + 1, ell) != constant_vector(0, ell)) return false;
    // t_1 = 1 + t_2
    if (tail_vector(1, ell) != vec_add(ones, tail_vector(2, ell))) return false;
    // 2 t_1 - 2 t_2 = 2
    if (vec_sub(vec_add(tail_vector(1, ell), tail_vector(1, ell)),
                vec_add(tail_vector(2, ell), tail_vector(2, ell))) != twos)
        return false;
    for (int i = 1; i <= ell; ++i) {
        // 2 (e_1 + ... + e_{i-1}) = 2 - 2 t_i + 2 t_{i+1}
        auto lhs = prefix_sum_vector(i - 1, ell);
        lhs = vec_add(lhs, prefix_sum_vector(i - 1, ell));
        auto rhs = twos;
        const auto ti = tail_vector(i, ell);
        const auto ti1 = tail_vector(i + 1, ell);
        rhs = vec_sub(rhs, vec_add(ti, ti));
        rhs = vec_add(rhs, vec_add(ti1, ti1));
        if (lhs != rhs) return false;
        // 1 + t_i = 2 - (e_1 + ... + e_{i-1}) + t_{i+1}
        if (vec_add(ones, ti) != vec_add(vec_sub(twos, prefix_sum_vector(i - 1, ell)), ti1))
            return false;
        // 2 t_1 - 2 t_{i+1} has entries 2 min(j, i)
        auto ramp = vec_sub(vec_add(tail_vector(1, ell), tail_vector(1, ell)),
                            vec_add(ti1, ti1));
        for (int j = 1; j <= ell; ++j)
            if (ramp[j - 1] != 2 * std::min(j, i)) return false;
    }
    for (int i = 1; i <= ell - 1; ++i) {
        // e_1 + ... + e_i + t_{i+1} = 1 + t_{i+2}
        if (vec_add(prefix_sum_vector(i, ell), tail_vector(i + 1, ell)) !=
            vec_add(ones, tail_vector(i + 2, ell)))
            return false;
    }
    return true;
}

FormalSum expand_combination(const std::vector<CertificateTerm>& combination, int ell, bool star) {
    FormalSum fs(ell, star);
    for (const auto& term : combination) {
        if (term.sign != 1 && term.sign != -1)
            throw std::invalid_argument("expand_combination: sign must be +1 or -1");
        if (static_cast<int>(term.v.size()) != ell)
            throw std::invalid_argument("expand_combination: vector length mismatch");
        FormalSum rel = atomic_relation(term.i, term.v, star);
        if (term.sign > 0)
            fs += rel;
        else
            fs -= rel;
    }
    return fs;
}

bool verify_telescope(const FormalSum& claimed, const std::vector<CertificateTerm>& combination) {
    return expand_combination(combination, claimed.ell(), claimed.star()) == claimed;
}

TelescopeCertificate base_certificate(Family family, int ell) {
    if (ell < 2) throw std::invalid_argument("base_certificate: need ell >= 2");
    const bool star = family == Family::AB;
    TelescopeCertificate cert{family == Family::AG ? "ag-base" : "ab-base",
                              ell,
                              star,
                              std::nullopt,
                              {},
                              FormalSum(ell, star)};
    for (int i = 1; i <= ell; ++i)
        cert.combination.push_back({+1, i, prefix_sum_vector(i - 1, ell)});
    for (int i = 1; i <= ell - 1; ++i)
        cert.combination.push_back(
            {-1, i, vec_sub(constant_vector(2, ell), prefix_sum_vector(i, ell))});

    const auto ones = constant_vector(1, ell);
    const auto twos = constant_vector(2, ell);
    cert.claimed.add(1, 0, 0, constant_vector(0, ell));
    if (star) {
        cert.claimed.add(-2, 0, 0, vec_add(ones, unit_vector(ell, ell)));
    } else {
        cert.claimed.add(-1, 0, 0, ones);
        cert.claimed.add(-1, 0, 0, vec_add(ones, unit_vector(ell, ell)));
    }
    cert.claimed.add(1, 0, 0, twos);
    cert.claimed.add(-1, 1, 1, twos);
    return cert;
}

TelescopeCertificate shifted_certificate(Family family, int ell, int j) {
    if (ell < 2 || j < 1 || j > ell - 1)
        throw std::invalid_argument("shifted_certificate: need ell >= 2 and 1 <= j <= ell - 1");
    const bool star = family == Family::AB;
    TelescopeCertificate cert{family == Family::AG ? "ag-shifted" : "ab-shifted",
                              ell,
                              star,
                              j,
                              {},
                              FormalSum(ell, star)};
    const auto shift = tail_vector(j + 1, ell);
    for (int i = 1; i <= j; ++i)
        cert.combination.push_back({+1, i, vec_add(prefix_sum_vector(i - 1, ell), shift)});
    for (int i = 1; i <= j - 1; ++i)
        cert.combination.push_back(
            {-1, i,
             vec_add(vec_sub(constant_vector(2, ell), prefix_sum_vector(i, ell)), shift)});

    const auto twos = constant_vector(2, ell);
    cert.claimed.add(1, 0, 0, shift);
    cert.claimed.add(-1, 0, 0, vec_add(prefix_sum_vector(j, ell), shift));
    cert.claimed.add(-1, 0, 0, vec_add(vec_sub(twos, prefix_sum_vector(j - 1, ell)), shift));
    cert.claimed.add(1, 0, 0, vec_add(twos, shift));
    cert.claimed.add(-1, 1, 1, vec_add(twos, shift));
    return cert;
}

std::vector<int> parse_vector_expr(const std::string& expr, int ell) {
    std::vector<int> out(ell, 0);
    std::size_t pos = 0;
    int sign = 1;
    bool saw_token = false;
    auto skip_space = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    skip_space();
    while (pos < expr.size()) {
        if (expr[pos] == '+') {
            sign = 1;
            ++pos;
            skip_space();
            continue;
        }
        if (expr[pos] == '-') {
            sign = -1;
            ++pos;
            skip_space();
            continue;
        }
        if (expr[pos] == 'e' || expr[pos] == 't') {
            const char kind = expr[pos++];
            std::size_t start = pos;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("parse_vector_expr: missing index");
            const int idx = std::stoi(expr.substr(start, pos - start));
            const auto v = kind == 'e' ? unit_vector(idx, ell) : tail_vector(idx, ell);
            for (int m = 0; m < ell; ++m) out[m] += sign * v[m];
        } else if (std::isdigit(static_cast<unsigned char>(expr[pos]))) {
            std::size_t start = pos;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
            const int c = std::stoi(expr.substr(start, pos - start));
            for (int m = 0; m < ell; ++m) out[m] += sign * c;
        } else {
            throw std::invalid_argument("parse_vector_expr: unexpected character in '" + expr + "'");
        }
        sign = 1;
        saw_token = true;
        skip_space();
    }
    if (!saw_token) throw std::invalid_argument("parse_vector_expr: empty expression");
    return out;
}

} // namespace qident
