#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qms/cli.hpp"
#include "qms/instance.hpp"

using namespace qms;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

const char* kInstPath = "/tmp/qms_cli_inst.json";

}  // namespace

TEST_CASE("gen then solve on a consistent instance") {
    CliResult gen = cli({"gen", "--output", kInstPath, "--seed", "11", "--dims",
                         "3,3,2,1,2,1,2,1", "--mode", "consistent-three"});
    REQUIRE(gen.exit_code == 0);

    CliResult solve = cli({"solve", "--input", kInstPath, "--eq", "three", "--sample", "2",
                           "--seed", "5"});
    CHECK(solve.exit_code == 0);
    CHECK(solve.out.find("\"consistent\": true") != std::string::npos);
    CHECK(solve.out.find("\"residual_zero\": true") != std::string::npos);
    CHECK(solve.out.find("\"residual_zero\": false") == std::string::npos);
}

TEST_CASE("gen is deterministic for a fixed seed") {
    const char* p1 = "/tmp/qms_cli_det1.json";
    const char* p2 = "/tmp/qms_cli_det2.json";
    REQUIRE(cli({"gen", "--output", p1, "--seed", "3", "--dims", "2,2,1,1,1,1,1,1"})
                .exit_code == 0);
    REQUIRE(cli({"gen", "--output", p2, "--seed", "3", "--dims", "2,2,1,1,1,1,1,1"})
                .exit_code == 0);
    std::ifstream f1(p1), f2(p2);
    const std::string s1((std::istreambuf_iterator<char>(f1)),
                         std::istreambuf_iterator<char>());
    const std::string s2((std::istreambuf_iterator<char>(f2)),
                         std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    std::remove(p1);
    std::remove(p2);
}

TEST_CASE("solve refuses an inconsistent instance with exit code 2") {
    const char* path = "/tmp/qms_cli_bad.json";
    // Generic full A with rank-starved coefficient matrices.
    REQUIRE(cli({"gen", "--output", path, "--seed", "9", "--dims", "4,4,1,1,1,1,1,1",
                 "--mode", "raw"})
                .exit_code == 0);
    CliResult solve = cli({"solve", "--input", path, "--eq", "three"});
    CHECK(solve.exit_code == 2);
    CHECK(solve.out.find("\"consistent\": false") != std::string::npos);
    CHECK(solve.out.find("failed_conditions") != std::string::npos);
    std::remove(path);
}

TEST_CASE("decompose and verify pass on any instance") {
    REQUIRE(cli({"gen", "--output", kInstPath, "--seed", "13", "--dims",
                 "3,4,2,1,2,2,1,1", "--mode", "raw"})
                .exit_code == 0);
    CliResult dec = cli({"decompose", "--input", kInstPath});
    CHECK(dec.exit_code == 0);
    CHECK(dec.out.find("\"all_pass\": true") != std::string::npos);
    CliResult ver = cli({"verify", "--input", kInstPath});
    CHECK(ver.exit_code == 0);
    CHECK(ver.out.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("rank-range reports agree across paths end to end") {
    REQUIRE(cli({"gen", "--output", kInstPath, "--seed", "17", "--dims",
                 "4,4,2,2,2,2,2,2", "--mode", "consistent-four"})
                .exit_code == 0);
    for (const char* var : {"X", "W", "Y", "Z"}) {
        CliResult rr = cli({"rank-range", "--input", kInstPath, "--eq", "four", "--var", var});
        INFO(var);
        CHECK(rr.exit_code == 0);
        CHECK(rr.out.find("\"paths_agree\": true") != std::string::npos);
    }
}

TEST_CASE("reports are byte-identical for identical invocations") {
    REQUIRE(cli({"gen", "--output", kInstPath, "--seed", "19", "--dims",
                 "3,3,2,1,2,1,2,1", "--mode", "consistent-three"})
                .exit_code == 0);
    const CliResult a = cli({"solve", "--input", kInstPath, "--sample", "3", "--seed", "2"});
    const CliResult b = cli({"solve", "--input", kInstPath, "--sample", "3", "--seed", "2"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("io errors give exit code 1") {
    CHECK(cli({"solve", "--input", "/tmp/does_not_exist_qms.json"}).exit_code == 1);
    CHECK(cli({"gen", "--output", "/tmp/x.json", "--dims", "1,2,3"}).exit_code == 1);
    CHECK(cli({"rank-range", "--input", kInstPath, "--var", "Q"}).exit_code == 1);
    CHECK(cli({"bogus-subcommand"}).exit_code == 1);
}

TEST_CASE("QMS_SEED supplies the default seed") {
    const char* p1 = "/tmp/qms_cli_env1.json";
    const char* p2 = "/tmp/qms_cli_env2.json";
    setenv("QMS_SEED", "77", 1);
    REQUIRE(cli({"gen", "--output", p1, "--dims", "2,2,1,1,1,1,1,1"}).exit_code == 0);
    unsetenv("QMS_SEED");
    REQUIRE(cli({"gen", "--output", p2, "--seed", "77", "--dims", "2,2,1,1,1,1,1,1"})
                .exit_code == 0);
    std::ifstream f1(p1), f2(p2);
    const std::string s1((std::istreambuf_iterator<char>(f1)),
                         std::istreambuf_iterator<char>());
    const std::string s2((std::istreambuf_iterator<char>(f2)),
                         std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    std::remove(p1);
    std::remove(p2);
}

TEST_CASE("end-to-end sandwich: solve samples stay within rank-range bounds") {
    REQUIRE(cli({"gen", "--output", kInstPath, "--seed", "23", "--dims",
                 "3,3,2,2,2,2,2,2", "--mode", "consistent-three"})
                .exit_code == 0);
    std::map<std::string, std::pair<int, int>> bounds;
    for (const char* var : {"X", "Y", "Z"}) {
        CliResult rr = cli({"rank-range", "--input", kInstPath, "--eq", "three", "--var", var});
        REQUIRE(rr.exit_code == 0);
        const auto j = nlohmann::json::parse(rr.out);
        bounds[var] = {j["min"].get<int>(), j["max"].get<int>()};
    }
    CliResult solve = cli({"solve", "--input", kInstPath, "--eq", "three", "--sample", "30",
                           "--seed", "4"});
    REQUIRE(solve.exit_code == 0);
    const auto j = nlohmann::json::parse(solve.out);
    REQUIRE(j["samples"].size() == 30);
    for (const auto& s : j["samples"]) {
        for (const char* var : {"X", "Y", "Z"}) {
            const int r = s["ranks"][var].get<int>();
            CHECK(r >= bounds[var].first);
            CHECK(r <= bounds[var].second);
        }
    }
}
