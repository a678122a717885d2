#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <string>

// End-to-end checks of the command line tool. QIDENT_CLI_BIN is injected by
// the build; commands run through popen so exit codes and bytes are real.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(QIDENT_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("series subcommand prints the product side") {
    auto r = run("series --case ag --ell 2 --i 2 --order 4 --side product --json");
    REQUIRE(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed.at("qbound") == 4);
    const nlohmann::json expected = {{1, 0, 0}, {1, 0, 1}, {2, 0, 2}, {2, 0, 3}, {3, 0, 4}};
    CHECK(parsed.at("terms") == expected);
}

TEST_CASE("series text output is ordered") {
    auto r = run("series --case ag --ell 2 --i 2 --order 3 --side enum");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "1\n1 z^1 q^1\n2 z^1 q^2\n2 z^1 q^3\n");
}

TEST_CASE("enumerate streams json lines") {
    auto r = run("enumerate --case ag --ell 2 --i 2 --n 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "{\"n\":1,\"j\":1,\"cells\":[[3,1,1]]}\n");

    // two arrays of weight 4 on (ab, 2, 1): one part of 4, or parts 3 + 1
    auto r4 = run("enumerate --case ab --ell 2 --i 1 --n 4");
    REQUIRE(r4.exit_code == 0);
    int lines = 0;
    std::size_t start = 0;
    while (start < r4.output.size()) {
        const auto end = r4.output.find('\n', start);
        const auto parsed = nlohmann::json::parse(r4.output.substr(start, end - start));
        CHECK(parsed.at("n") == 4);
        ++lines;
        start = end + 1;
    }
    CHECK(lines == 2);
}

TEST_CASE("verify exits 0 on passing checks") {
    auto r = run("verify --case ag --ell 2 --order 10 --check main");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("main-theorem") != std::string::npos);
}

TEST_CASE("verify exits 2 when a check fails") {
    // the residue-count leg at i = ell is the known degenerate comparison
    auto r = run("verify --case ab --ell 2 --i 2 --order 10 --check product");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("FAIL") != std::string::npos);
    CHECK(r.output.find("congruence-count") != std::string::npos);

    // restricted to a sound index the same selector passes
    auto ok = run("verify --case ab --ell 2 --i 1 --order 10 --check product");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("verify --case xx --ell 2").exit_code == 1);
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("enumerate --case ag --ell 2 --i 2").exit_code == 1); // missing --n
    CHECK(run("verify --case ag --ell 2 --order 99 --check main").exit_code == 1); // cap
}

TEST_CASE("fixtures emit the display patterns") {
    auto r = run("fixtures --case ab --ell 4 --value-max 7 --json");
    REQUIRE(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed.at("case") == "ab");
    CHECK(parsed.at("ell") == 4);
    CHECK(parsed.at("patterns").size() == 5);
    // i = 4 pattern: rows 1,2 and 6,7 each lose one small cell
    const auto& last = parsed.at("patterns").at(4);
    CHECK(last.at("i") == 4);
    const nlohmann::json cells = {{1, 2}, {2, 1}, {6, 1}, {7, 2}};
    CHECK(last.at("cells") == cells);
}

TEST_CASE("identical flags give byte-identical output") {
    const std::string flags = "series --case ab --ell 3 --i 2 --order 9 --side multisum --json";
    auto first = run(flags);
    auto second = run(flags);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const std::string vflags = "verify --case ag --ell 2 --order 8 --check telescope --json";
    auto v1 = run(vflags);
    auto v2 = run(vflags);
    CHECK(v1.exit_code == 0);
    // timing fields differ; compare with millis stripped
    auto strip = [](std::string text) {
        auto j = nlohmann::json::parse(text);
        for (auto& rep : j.at("reports")) rep.erase("millis");
        return j.dump();
    };
    CHECK(strip(v1.output) == strip(v2.output));
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "/tmp/qident_cli_out_test.json";
    std::remove(path.c_str());
    auto direct = run("series --case ag --ell 2 --i 1 --order 6 --side multisum --json");
    auto filed = run("series --case ag --ell 2 --i 1 --order 6 --side multisum --json --out " + path);
    REQUIRE(filed.exit_code == 0);
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), f)) > 0) content.append(buffer.data(), got);
    fclose(f);
    std::remove(path.c_str());
    CHECK(content == direct.output);
}

TEST_CASE("environment variable sets the default order") {
    auto r = run("series --case ag --ell 2 --i 2 --side product --json");
    // default order comes from QIDENT_ORDER if set, else 12
    const auto parsed = nlohmann::json::parse(r.output);
    CHECK((parsed.at("qbound") == 12 || parsed.at("qbound") >= 0));

    const std::string cmd = "QIDENT_ORDER=5 " + std::string(QIDENT_CLI_BIN) +
                            " series --case ag --ell 2 --i 2 --side product --json 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    pclose(pipe);
    CHECK(nlohmann::json::parse(output).at("qbound") == 5);
}
