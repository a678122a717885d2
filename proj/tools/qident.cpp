// qident: exact-arithmetic workbench for the colored-partition identities on
// staggered arrays. Subcommands: verify (run check suites), series (print a
// generating function), enumerate (stream admissible arrays), fixtures
// (re-emit display patterns and telescoping certificates).

#include "CLI11.hpp"

#include "qident/enumerate.hpp"
#include "qident/json_io.hpp"
#include "qident/lattice.hpp"
#include "qident/multisum.hpp"
#include "qident/series.hpp"
#include "qident/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kOrderCap = 40;

int default_order() {
    if (const char* env = std::getenv("QIDENT_ORDER"); env && *env) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("QIDENT_ORDER", "not an integer");
        }
    }
    return 12;
}

void check_order_cap(int order, bool force) {
    if (order < 0) throw CLI::ValidationError("--order", "must be >= 0");
    if (order > kOrderCap && !force)
        throw CLI::ValidationError(
            "--order", "exceeds the safety cap of " + std::to_string(kOrderCap) +
                           "; pass --force to override");
}

void print_series_text(std::ostream& out, const qident::Series& s) {
    // ascending qexp, then ascending zexp, one term per line
    if (s.is_zero()) {
        out << "0\n";
        return;
    }
    for (const auto& [key, coeff] : s.terms()) {
        out << coeff;
        if (key.zexp > 0) out << " z^" << key.zexp;
        if (key.qexp > 0) out << " q^" << key.qexp;
        out << "\n";
    }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

struct CommonArgs {
    std::string family_name = "ag";
    int ell = 2;
    int i = 0;
    int order = 12;
    bool json = false;
    bool force = false;
    std::string out_path;
};

int run_verify(const CommonArgs& args, const std::string& selector, bool has_i) {
    check_order_cap(args.order, args.force);
    const qident::Family family = qident::family_from_name(args.family_name);
    qident::SuiteConfig config = qident::default_suite(family, args.ell, args.order, selector);
    if (has_i) {
        std::erase_if(config, [&](const qident::CheckSpec& spec) {
            return spec.i.has_value() && *spec.i != args.i;
        });
    }
    const auto reports = qident::run_suite(config);

    std::ofstream file;
    std::ostream& out = open_output(file, args.out_path);
    if (args.json) {
        out << qident::to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) {
            out << (r.pass ? "pass" : "FAIL") << "  " << r.check << "  case="
                << args.family_name << " ell=" << r.params.ell;
            if (r.params.i) out << " i=" << *r.params.i;
            out << " order=" << r.params.qbound;
            if (r.first_discrepancy) {
                const auto& d = *r.first_discrepancy;
                out << "  first discrepancy at z^" << d.zexp << " q^" << d.qexp << ": "
                    << d.lhs_side << " = " << d.lhs << " vs " << d.rhs_side << " = " << d.rhs;
            }
            out << "\n";
        }
    }
    return qident::all_pass(reports) ? kExitOk : kExitVerifyFailed;
}

int run_series(const CommonArgs& args, const std::string& side) {
    check_order_cap(args.order, args.force);
    const qident::Family family = qident::family_from_name(args.family_name);
    qident::Series s(args.order);
    if (side == "enum") {
        s = qident::admissible_gf(qident::ArrayShape(family, args.ell, args.i), args.order);
    } else if (side == "multisum") {
        s = qident::tail_multisum(args.i, args.ell, family == qident::Family::AB, args.order);
    } else {
        s = qident::product_side(family, args.ell, args.i, args.order);
    }
    std::ofstream file;
    std::ostream& out = open_output(file, args.out_path);
    if (args.json)
        out << qident::to_json(s) << "\n";
    else
        print_series_text(out, s);
    return kExitOk;
}

int run_enumerate(const CommonArgs& args, int n, bool force) {
    check_order_cap(n, force);
    const qident::Family family = qident::family_from_name(args.family_name);
    const auto arrays =
        qident::admissible_arrays(qident::ArrayShape(family, args.ell, args.i), n);
    std::ofstream file;
    std::ostream& out = open_output(file, args.out_path);
    for (const auto& fa : arrays) out << qident::enumeration_line(fa) << "\n";
    return kExitOk;
}

int run_fixtures(const CommonArgs& args, int value_max, bool certificates) {
    std::ofstream file;
    std::ostream& out = open_output(file, args.out_path);
    const qident::Family family = qident::family_from_name(args.family_name);
    if (certificates) {
        std::vector<qident::TelescopeCertificate> base{qident::base_certificate(family, args.ell)};
        std::vector<qident::TelescopeCertificate> shifted;
        for (int j = 1; j <= args.ell - 1; ++j)
            shifted.push_back(qident::shifted_certificate(family, args.ell, j));
        out << qident::to_json_certificates(base);
        out << qident::to_json_certificates(shifted);
        return kExitOk;
    }
    const auto fixture = qident::computed_forbidden_fixture(family, args.ell, value_max);
    if (args.json) {
        out << qident::to_json(fixture);
    } else {
        for (const auto& [i, cells] : fixture.cells_by_i) {
            out << "i=" << i << ":";
            for (const auto& [row, value] : cells) out << " (" << row << "," << value << ")";
            out << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of colored-partition / q-series identities"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string selector = "all";
    std::string side = "enum";
    int n = 0;
    int value_max = 8;
    bool certificates = false;

    auto add_common = [&](CLI::App* cmd, bool with_i) {
        cmd->add_option("--case", args.family_name, "array family: ag or ab")
            ->check(CLI::IsMember({"ag", "ab"}));
        cmd->add_option("--ell", args.ell, "number of colors (>= 2; ag allows 1)");
        if (with_i) cmd->add_option("--i", args.i, "hat index, 0 <= i <= ell");
        cmd->add_flag("--json", args.json, "JSON output");
        cmd->add_flag("--force", args.force, "override the order safety cap");
        cmd->add_option("--out", args.out_path, "write output to a file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run identity checks");
    add_common(verify, true);
    verify->add_option("--order", args.order, "truncation order (default QIDENT_ORDER or 12)");
    verify->add_option("--check", selector, "fe | main | product | classical | telescope | all")
        ->check(CLI::IsMember({"fe", "main", "product", "classical", "telescope", "all"}));

    CLI::App* series = app.add_subcommand("series", "print one generating function");
    add_common(series, true);
    series->add_option("--order", args.order, "truncation order");
    series->add_option("--side", side, "enum | multisum | product")
        ->check(CLI::IsMember({"enum", "multisum", "product"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream admissible arrays as JSON lines");
    add_common(enumerate, true);
    enumerate->add_option("--n", n, "target weight")->required();

    CLI::App* fixtures = app.add_subcommand("fixtures", "emit display patterns / certificates");
    add_common(fixtures, false);
    fixtures->add_option("--value-max", value_max, "largest part value in the pattern");
    fixtures->add_flag("--certificates", certificates, "emit telescoping certificates instead");

    try {
        args.order = default_order();
        app.parse(argc, argv);
        const bool has_i = app.get_subcommand()->count("--i") > 0;
        if (verify->parsed()) return run_verify(args, selector, has_i);
        if (series->parsed()) return run_series(args, side);
        if (enumerate->parsed()) return run_enumerate(args, n, args.force);
        if (fixtures->parsed()) return run_fixtures(args, value_max, certificates);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
