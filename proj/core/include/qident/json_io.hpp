#pragma once

#include "qident/lattice.hpp"
#include "qident/multisum.hpp"
#include "qident/series.hpp"
#include "qident/verify.hpp"

#include <map>
#include <string>
#include <vector>

namespace qident {

std::string family_name(Family family); // "ag" / "ab"
Family family_from_name(const std::string& name);

/// {"qbound": N, "terms": [[coeff, zexp, qexp], ...]} with terms sorted by
/// (qexp, zexp). Coefficients are emitted as JSON integers and must fit in 64
/// bits (every series surfaced through this interface counts partitions at
/// desk scale).
std::string to_json(const Series& s);
Series series_from_json(const std::string& text);

/// {"case": ..., "ell": ..., "i": ..., "cells": [[row, value, mult], ...]}
std::string to_json(const FrequencyArray& fa);
FrequencyArray frequency_array_from_json(const std::string& text);

/// One JSON line per enumerated array: {"n":..., "j":..., "cells": [...]}.
std::string enumeration_line(const FrequencyArray& fa);

std::string to_json(const CheckReport& report);
std::string to_json(const std::vector<CheckReport>& reports);

/// Forbidden-cell display fixture: per-i lists of [row, value] pairs.
struct ForbiddenFixture {
    Family family = Family::AG;
    int ell = 0;
    int value_max = 0;
    std::map<int, std::vector<std::pair<int, int>>> cells_by_i;
};
ForbiddenFixture forbidden_fixture_from_json(const std::string& text);
std::string to_json(const ForbiddenFixture& fixture);
/// The same pattern computed from the geometry, for emission and tests.
ForbiddenFixture computed_forbidden_fixture(Family family, int ell, int value_max);

/// Telescope certificate files: {"family": "ag", "kind": "base"|"shifted",
/// "entries": [{"ell": ..., "j"?: ..., "combination": [{"sign", "i", "v"}],
/// "claimed": [{"coeff", "zexp", "qexp", "v"}]}]} where each "v" is a vector
/// expression over const/e/t primitives such as "2-e1+t3".
std::vector<TelescopeCertificate> certificates_from_json(const std::string& text);
std::string to_json_certificates(const std::vector<TelescopeCertificate>& certificates);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Directory holding the shipped data files: the QIDENT_DATA_DIR environment
/// variable when set, otherwise the build-time default.
std::string default_data_dir();

} // namespace qident
