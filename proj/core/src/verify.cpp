#include "qident/verify.hpp"

#include <chrono>
#include <stdexcept>

namespace qident {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<Discrepancy> first_difference(const Series& a, const Series& b,
                                            const std::string& lhs_side,
                                            const std::string& rhs_side) {
    const int qb = std::min(a.qbound(), b.qbound());
    auto it = a.terms().begin();
    auto jt = b.terms().begin();
    const auto past = [qb](const auto& iter, const auto& end) {
        return iter == end || iter->first.qexp > qb;
    };
    while (!past(it, a.terms().end()) || !past(jt, b.terms().end())) {
        if (past(jt, b.terms().end()) ||
            (!past(it, a.terms().end()) && it->first < jt->first)) {
            return Discrepancy{it->first.zexp, it->first.qexp, it->second, 0, lhs_side, rhs_side};
        }
        if (past(it, a.terms().end()) || jt->first < it->first) {
            return Discrepancy{jt->first.zexp, jt->first.qexp, 0, jt->second, lhs_side, rhs_side};
        }
        if (it->second != jt->second) {
            return Discrepancy{it->first.zexp, it->first.qexp, it->second, jt->second, lhs_side,
                               rhs_side};
        }
        ++it;
        ++jt;
    }
    return std::nullopt;
}

// hat placement per the reading that puts even-index hats at the mirrored row
// (invalid for these arrays; used as a negative control)
Cell mirrored_ab_hat(const ArrayShape& shape) {
    const int ell = shape.ell();
    const int i = shape.index();
    int row;
    if (i == 0)
        row = 2 * ell - 1;
    else if (i % 2 == 1)
        row = i;
    else
        row = 2 * ell + 1 - i;
    return {row, shape.slot_col(row)};
}

CheckReport make_report(std::string check, CheckParams params, Clock::time_point start,
                        std::optional<Discrepancy> discrepancy) {
    CheckReport report;
    report.check = std::move(check);
    report.params = std::move(params);
    report.first_discrepancy = std::move(discrepancy);
    report.pass = !report.first_discrepancy.has_value();
    report.millis = elapsed_ms(start);
    return report;
}

std::string side_name(int i, const char* base) {
    return std::string(base) + "[" + std::to_string(i) + "]";
}

// T_i(z q^d, q) realized on a computed series via dilation
Series shifted(const Series& s, int d) { return s.dilated(d); }

// The two equation systems shared by check_fe_enumerator and
// check_fe_multisum. P holds the series for i = 0..ell.
std::optional<Discrepancy> fe_system_difference(const std::vector<Series>& P, Family family,
                                                int qbound, const char* label) {
    const int ell = static_cast<int>(P.size()) - 1;
    for (int i = 0; i <= ell; ++i) {
        const Series& top = P[i];
        const Series& next = i < ell             ? P[i + 1]
                             : family == Family::AG ? P[ell]
                                                    : P[ell - 1];
        Series lhs = top - shifted(next, 1);
        Series rhs(qbound);
        for (int j = 1; j <= i; ++j)
            rhs += Series::monomial(1, 1, j, qbound) * shifted(P[i - j + 1], j + 1);
        if (auto d = first_difference(lhs, rhs, side_name(i, label) + " lhs",
                                      side_name(i, label) + " rhs"))
            return d;
    }
    // rearranged three-term forms
    const Series one_minus_zq = Series::one(qbound) - Series::monomial(1, 1, 1, qbound);
    if (auto d = first_difference(P[0], shifted(P[1], 1), side_name(0, label),
                                  side_name(1, label) + " dilated"))
        return d;
    for (int i = 1; i <= ell; ++i) {
        Series lhs = P[i];
        if (i < ell || family == Family::AG) {
            lhs -= shifted(P[std::min(i + 1, ell)], 1);
            lhs -= shifted(P[i - 1], 1);
        } else {
            lhs -= shifted(P[ell - 1], 1) + shifted(P[ell - 1], 1);
        }
        lhs += one_minus_zq * shifted(P[i], 2);
        if (auto d = first_difference(lhs, Series(qbound), side_name(i, label) + " three-term",
                                      "zero"))
            return d;
    }
    return std::nullopt;
}

} // namespace

CheckReport check_fe_enumerator(Family family, int ell, int qbound, Mutation mutation) {
    const auto start = Clock::now();
    std::vector<Series> P;
    for (int i = 0; i <= ell; ++i) {
        ArrayShape shape(family, ell, i);
        if (mutation == Mutation::ab_hat_mirrored && family == Family::AB)
            shape = shape.with_hat(mirrored_ab_hat(shape));
        P.push_back(admissible_gf(shape, qbound));
    }
    auto d = fe_system_difference(P, family, qbound, "P");
    return make_report("fe-enumerator", {family, ell, std::nullopt, qbound}, start, std::move(d));
}

CheckReport check_fe_multisum(Family family, int ell, int qbound) {
    const auto start = Clock::now();
    const bool star = family == Family::AB;
    std::vector<Series> T;
    for (int i = 0; i <= ell; ++i) T.push_back(tail_multisum(i, ell, star, qbound));
    auto d = fe_system_difference(T, family, qbound, "T");
    return make_report("fe-multisum", {family, ell, std::nullopt, qbound}, start, std::move(d));
}

CheckReport check_main_theorem(Family family, int ell, int i, int qbound) {
    const auto start = Clock::now();
    const Series lhs = admissible_gf(ArrayShape(family, ell, i), qbound);
    const Series rhs = tail_multisum(i, ell, family == Family::AB, qbound);
    auto d = first_difference(lhs, rhs, "enumerator", "multisum");
    return make_report("main-theorem", {family, ell, i, qbound}, start, std::move(d));
}

CheckReport check_sum_to_product(Family family, int ell, int i, int qbound) {
    const auto start = Clock::now();
    const Series enumerated = admissible_gf(ArrayShape(family, ell, i), qbound).at_z1();
    const Series product = product_side(family, ell, i, qbound);
    const Series congruence = residue_count_gf(family, ell, i, qbound);
    auto d = first_difference(enumerated, product, "enumerator", "product");
    if (!d) d = first_difference(enumerated, congruence, "enumerator", "congruence-count");
    if (!d) d = first_difference(product, congruence, "product", "congruence-count");
    return make_report("sum-to-product", {family, ell, i, qbound}, start, std::move(d));
}

CheckReport check_classical(int ell, int i, int qbound, Mutation mutation) {
    const auto start = Clock::now();
    std::vector<int> xweight(ell);
    for (int j = 0; j < ell; ++j) xweight[j] = j + 1;
    const auto tail = tail_vector(i + 1, ell);

    auto d = first_difference(gordon_gf(ell, i, qbound), multisum(tail, xweight, false, qbound),
                              "gordon-enumerator", "multisum");
    if (!d) {
        BressoudOptions options;
        options.window_parity = mutation != Mutation::bressoud_parity_off;
        d = first_difference(bressoud_gf(ell, i, qbound, options),
                             multisum(tail, xweight, true, qbound), "bressoud-enumerator",
                             "star-multisum");
    }
    if (!d) {
        d = first_difference(gga_gf(ell, i, qbound), gga_multisum(ell, i, xweight, qbound),
                             "gga-enumerator", "gga-multisum");
    }
    if (!d) {
        d = first_difference(gga_multisum(ell, i, constant_vector(0, ell), qbound),
                             product_side_gga(ell, i, qbound), "gga-multisum",
                             "gga-product");
    }
    return make_report("classical", {std::nullopt, ell, i, qbound}, start, std::move(d));
}

CheckReport check_atomic_relations(Family family, int ell, int qbound, int entry_max,
                                   Mutation mutation) {
    const auto start = Clock::now();
    const bool star = family == Family::AB;
    const Series zero(qbound);
    std::optional<Discrepancy> found;

    std::vector<int> v(ell, 0);
    auto next_vector = [&]() {
        for (int m = 0; m < ell; ++m) {
            if (v[m] < entry_max) {
                ++v[m];
                return true;
            }
            v[m] = 0;
        }
        return false;
    };
    do {
        for (int i = 1; i <= ell && !found; ++i) {
            FormalSum rel(ell, star);
            if (mutation == Mutation::tail_vector_shifted) {
                // ramp shifted one slot right: entries max(0, j - i)
                rel.add(1, 0, 0, v);
                std::vector<int> second = v;
                second[i - 1] += (star && i == ell) ? 2 : 1;
                rel.add(-1, 0, 0, second);
                std::vector<int> third = v;
                for (int j = 1; j <= ell; ++j)
                    third[j - 1] += 2 * (std::max(0, j - 1) - std::max(0, j - i - 1));
                rel.add(-1, 1, v[i - 1] + i, third);
            } else {
                rel = atomic_relation(i, v, star);
            }
            found = first_difference(eval_formal_sum(rel, qbound), zero,
                                     "relation[" + std::to_string(i) + "] residual", "zero");
        }
    } while (!found && next_vector());
    return make_report("atomic-relations", {family, ell, std::nullopt, qbound}, start,
                       std::move(found));
}

CheckReport check_telescope(const TelescopeCertificate& certificate) {
    const auto start = Clock::now();
    std::optional<Discrepancy> d;
    const FormalSum expanded = expand_combination(certificate.combination, certificate.ell,
                                                  certificate.star);
    if (expanded != certificate.claimed) {
        // report the least term where the expansion and the claim disagree
        auto it = expanded.terms().begin();
        auto jt = certificate.claimed.terms().begin();
        while (it != expanded.terms().end() || jt != certificate.claimed.terms().end()) {
            if (jt == certificate.claimed.terms().end() ||
                (it != expanded.terms().end() && it->first < jt->first)) {
                d = Discrepancy{it->first.zexp, it->first.qexp, it->second, 0, "expansion",
                                "claimed"};
                break;
            }
            if (it == expanded.terms().end() || jt->first < it->first) {
                d = Discrepancy{jt->first.zexp, jt->first.qexp, 0, jt->second, "expansion",
                                "claimed"};
                break;
            }
            if (it->second != jt->second) {
                d = Discrepancy{it->first.zexp, it->first.qexp, it->second, jt->second,
                                "expansion", "claimed"};
                break;
            }
            ++it;
            ++jt;
        }
    }
    CheckParams params{certificate.star ? Family::AB : Family::AG, certificate.ell,
                       certificate.j, 0};
    return make_report("telescope:" + certificate.name, std::move(params), start, std::move(d));
}

CheckReport check_telescope(Family family, int ell) {
    const auto start = Clock::now();
    std::optional<Discrepancy> d;
    std::string failed;
    auto run = [&](const TelescopeCertificate& cert) {
        if (d) return;
        CheckReport r = check_telescope(cert);
        if (!r.pass) {
            d = r.first_discrepancy;
            failed = cert.name + (cert.j ? " j=" + std::to_string(*cert.j) : "");
        }
    };
    run(base_certificate(family, ell));
    for (int j = 1; j <= ell - 1; ++j) run(shifted_certificate(family, ell, j));
    if (d) {
        d->lhs_side = failed + " " + d->lhs_side;
        d->rhs_side = failed + " " + d->rhs_side;
    }
    return make_report("telescope", {family, ell, std::nullopt, 0}, start, std::move(d));
}

SuiteConfig default_suite(Family family, int ell, int qbound, const std::string& selector) {
    SuiteConfig config;
    const bool all = selector == "all";
    if (!(all || selector == "fe" || selector == "main" || selector == "product" ||
          selector == "classical" || selector == "telescope"))
        throw std::invalid_argument("default_suite: unknown selector '" + selector + "'");

    if (all || selector == "fe") {
        config.push_back({"fe", family, ell, std::nullopt, qbound, Mutation::none});
        config.push_back({"fe-multisum", family, ell, std::nullopt, qbound, Mutation::none});
    }
    if (all || selector == "main")
        for (int i = 0; i <= ell; ++i)
            config.push_back({"main", family, ell, i, qbound, Mutation::none});
    if (all || selector == "product")
        for (int i = 0; i <= ell; ++i)
            config.push_back({"product", family, ell, i, qbound, Mutation::none});
    if (all || selector == "classical")
        for (int i = 0; i <= ell; ++i)
            config.push_back({"classical", family, ell, i, qbound, Mutation::none});
    if (all || selector == "telescope") {
        config.push_back({"telescope", family, ell, std::nullopt, 0, Mutation::none});
        config.push_back({"atoms", family, ell, std::nullopt, std::min(qbound, 14), Mutation::none});
    }
    return config;
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
    std::vector<CheckReport> reports;
    reports.reserve(config.size());
    for (const CheckSpec& spec : config) {
        const Family family = spec.family.value_or(Family::AG);
        if (spec.kind == "fe") {
            reports.push_back(check_fe_enumerator(family, spec.ell, spec.qbound, spec.mutation));
        } else if (spec.kind == "fe-multisum") {
            reports.push_back(check_fe_multisum(family, spec.ell, spec.qbound));
        } else if (spec.kind == "main") {
            reports.push_back(
                check_main_theorem(family, spec.ell, spec.i.value_or(0), spec.qbound));
        } else if (spec.kind == "product") {
            reports.push_back(
                check_sum_to_product(family, spec.ell, spec.i.value_or(0), spec.qbound));
        } else if (spec.kind == "classical") {
            reports.push_back(
                check_classical(spec.ell, spec.i.value_or(0), spec.qbound, spec.mutation));
        } else if (spec.kind == "telescope") {
            reports.push_back(check_telescope(family, spec.ell));
        } else if (spec.kind == "atoms") {
            reports.push_back(
                check_atomic_relations(family, spec.ell, spec.qbound, 2, spec.mutation));
        } else {
            throw std::invalid_argument("run_suite: unknown check kind '" + spec.kind + "'");
        }
    }
    return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

} // namespace qident
