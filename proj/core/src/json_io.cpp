#include "qident/json_io.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qident {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::int64_t to_int64(const Int& value, const char* what) {
    if (value < std::numeric_limits<std::int64_t>::min() ||
        value > std::numeric_limits<std::int64_t>::max())
        throw std::range_error(std::string(what) + ": coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(value);
}

std::string vector_expr(const std::vector<int>& v) {
    // Shipped files use e/t/const expressions; re-emission uses the
    // unambiguous comma-joined entry form, which the loader also accepts.
    std::string out;
    for (std::size_t m = 0; m < v.size(); ++m) {
        if (m) out += ',';
        out += std::to_string(v[m]);
    }
    return out;
}

std::vector<int> vector_from_field(const json& field, int ell) {
    if (field.is_string()) {
        const auto text = field.get<std::string>();
        if (text.find(',') == std::string::npos) return parse_vector_expr(text, ell);
        std::vector<int> v;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
        if (static_cast<int>(v.size()) != ell)
            throw std::invalid_argument("certificate vector has wrong length");
        return v;
    }
    return field.get<std::vector<int>>();
}

} // namespace

std::string family_name(Family family) { return family == Family::AG ? "ag" : "ab"; }

Family family_from_name(const std::string& name) {
    if (name == "ag" || name == "AG") return Family::AG;
    if (name == "ab" || name == "AB") return Family::AB;
    throw std::invalid_argument("unknown family '" + name + "' (expected ag or ab)");
}

std::string to_json(const Series& s) {
    ordered_json out;
    out["qbound"] = s.qbound();
    auto& terms = out["terms"] = ordered_json::array();
    for (const auto& [k, c] : s.terms())
        terms.push_back({to_int64(c, "Series"), k.zexp, k.qexp});
    return out.dump();
}

Series series_from_json(const std::string& text) {
    const json in = json::parse(text);
    Series s(in.at("qbound").get<int>());
    for (const auto& term : in.at("terms"))
        s.add_term(term.at(1).get<int>(), term.at(2).get<int>(), Int(term.at(0).get<std::int64_t>()));
    return s;
}

std::string to_json(const FrequencyArray& fa) {
    const ArrayShape& shape = fa.shape();
    ordered_json out;
    out["case"] = family_name(shape.family());
    out["ell"] = shape.ell();
    out["i"] = shape.index();
    auto& cells = out["cells"] = ordered_json::array();
    for (const auto& [c, m] : fa.support()) cells.push_back({c.row, shape.value(c), m});
    return out.dump();
}

FrequencyArray frequency_array_from_json(const std::string& text) {
    const json in = json::parse(text);
    ArrayShape shape(family_from_name(in.at("case").get<std::string>()), in.at("ell").get<int>(),
                     in.at("i").get<int>());
    FrequencyArray fa(shape);
    for (const auto& cell : in.at("cells")) {
        const Cell c = shape.value_cell(cell.at(0).get<int>(), cell.at(1).get<int>());
        fa.set(c, fa.multiplicity(c) + cell.at(2).get<int>());
    }
    return fa;
}

std::string enumeration_line(const FrequencyArray& fa) {
    ordered_json out;
    out["n"] = fa.weight();
    out["j"] = fa.parts();
    auto& cells = out["cells"] = ordered_json::array();
    for (const auto& [c, m] : fa.support()) cells.push_back({c.row, fa.shape().value(c), m});
    return out.dump();
}

namespace {

ordered_json report_to_json(const CheckReport& report) {
    ordered_json out;
    out["check"] = report.check;
    ordered_json params;
    if (report.params.family) params["case"] = family_name(*report.params.family);
    params["ell"] = report.params.ell;
    if (report.params.i) params["i"] = *report.params.i;
    params["qbound"] = report.params.qbound;
    out["params"] = std::move(params);
    out["status"] = report.pass ? "pass" : "fail";
    if (report.first_discrepancy) {
        const Discrepancy& d = *report.first_discrepancy;
        ordered_json disc;
        disc["zexp"] = d.zexp;
        disc["qexp"] = d.qexp;
        disc["lhs"] = d.lhs.str();
        disc["rhs"] = d.rhs.str();
        disc["lhs_side"] = d.lhs_side;
        disc["rhs_side"] = d.rhs_side;
        out["discrepancy"] = std::move(disc);
    }
    out["millis"] = report.millis;
    return out;
}

} // namespace

std::string to_json(const CheckReport& report) { return report_to_json(report).dump(); }

std::string to_json(const std::vector<CheckReport>& reports) {
    ordered_json out;
    auto& list = out["reports"] = ordered_json::array();
    for (const auto& r : reports) list.push_back(report_to_json(r));
    out["all_pass"] = all_pass(reports);
    return out.dump(2);
}

ForbiddenFixture forbidden_fixture_from_json(const std::string& text) {
    const json in = json::parse(text);
    ForbiddenFixture fixture;
    fixture.family = family_from_name(in.at("case").get<std::string>());
    fixture.ell = in.at("ell").get<int>();
    fixture.value_max = in.at("value_max").get<int>();
    for (const auto& pattern : in.at("patterns")) {
        auto& cells = fixture.cells_by_i[pattern.at("i").get<int>()];
        for (const auto& cell : pattern.at("cells"))
            cells.emplace_back(cell.at(0).get<int>(), cell.at(1).get<int>());
    }
    return fixture;
}

std::string to_json(const ForbiddenFixture& fixture) {
    ordered_json out;
    out["case"] = family_name(fixture.family);
    out["ell"] = fixture.ell;
    out["value_max"] = fixture.value_max;
    auto& patterns = out["patterns"] = ordered_json::array();
    for (const auto& [i, cells] : fixture.cells_by_i) {
        ordered_json entry;
        entry["i"] = i;
        auto& list = entry["cells"] = ordered_json::array();
        for (const auto& [row, value] : cells) list.push_back({row, value});
        patterns.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

ForbiddenFixture computed_forbidden_fixture(Family family, int ell, int value_max) {
    ForbiddenFixture fixture{family, ell, value_max, {}};
    for (int i = 0; i <= ell; ++i) {
        ArrayShape shape(family, ell, i);
        auto& cells = fixture.cells_by_i[i];
        for (const Cell& c : forbidden_cells(shape, value_max))
            cells.emplace_back(c.row, shape.value(c));
    }
    return fixture;
}

std::vector<TelescopeCertificate> certificates_from_json(const std::string& text) {
    const json in = json::parse(text);
    const Family family = family_from_name(in.at("family").get<std::string>());
    const bool star = family == Family::AB;
    const std::string kind = in.at("kind").get<std::string>();
    std::vector<TelescopeCertificate> out;
    for (const auto& entry : in.at("entries")) {
        const int ell = entry.at("ell").get<int>();
        TelescopeCertificate cert{family_name(family) + "-" + kind,
                                  ell,
                                  star,
                                  std::nullopt,
                                  {},
                                  FormalSum(ell, star)};
        if (entry.contains("j")) cert.j = entry.at("j").get<int>();
        for (const auto& term : entry.at("combination")) {
            cert.combination.push_back({term.at("sign").get<int>(), term.at("i").get<int>(),
                                        vector_from_field(term.at("v"), ell)});
        }
        for (const auto& term : entry.at("claimed")) {
            cert.claimed.add(Int(term.at("coeff").get<std::int64_t>()),
                             term.at("zexp").get<int>(), term.at("qexp").get<int>(),
                             vector_from_field(term.at("v"), ell));
        }
        out.push_back(std::move(cert));
    }
    return out;
}

std::string to_json_certificates(const std::vector<TelescopeCertificate>& certificates) {
    if (certificates.empty()) throw std::invalid_argument("no certificates to serialize");
    ordered_json out;
    const std::string& name = certificates.front().name;
    const auto dash = name.find('-');
    out["family"] = name.substr(0, dash);
    out["kind"] = name.substr(dash + 1);
    auto& entries = out["entries"] = ordered_json::array();
    for (const auto& cert : certificates) {
        ordered_json entry;
        entry["ell"] = cert.ell;
        if (cert.j) entry["j"] = *cert.j;
        auto& comb = entry["combination"] = ordered_json::array();
        for (const auto& term : cert.combination) {
            ordered_json t;
            t["sign"] = term.sign;
            t["i"] = term.i;
            t["v"] = vector_expr(term.v);
            comb.push_back(std::move(t));
        }
        auto& claimed = entry["claimed"] = ordered_json::array();
        for (const auto& [key, coeff] : cert.claimed.terms()) {
            ordered_json t;
            t["coeff"] = to_int64(coeff, "certificate");
            t["zexp"] = key.zexp;
            t["qexp"] = key.qexp;
            t["v"] = vector_expr(key.v);
            claimed.push_back(std::move(t));
        }
        entries.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("QIDENT_DATA_DIR"); env && *env) return env;
#ifdef QIDENT_SOURCE_DATA_DIR
    return QIDENT_SOURCE_DATA_DIR;
#else
    return ".";
#endif
}

} // namespace qident
