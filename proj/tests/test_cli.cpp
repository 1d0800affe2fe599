#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pis/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "pisgenus_cli_test";
    fs::create_directories(dir);
    fs::path out = dir / ("out" + std::to_string(counter));
    fs::path err = dir / ("err" + std::to_string(counter));
    ++counter;
    std::string cmd = std::string(PISGENUS_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path data_file(const char* name) {
    fs::path manifest(PISGENUS_SUITE_MANIFEST);
    return manifest.parent_path() / name;
}

} // namespace

TEST_CASE("ideals: chain ring lists five ideals") {
    RunResult r = run_cli("ideals \"Z/16\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"(2)\"") != std::string::npos);
    CHECK(r.out.find("\"(8)\"") != std::string::npos);
}

TEST_CASE("ideals: non prime power fails with a diagnostic") {
    RunResult r = run_cli("ideals \"Z/12\"");
    CHECK(r.exit_code != 0);
    CHECK(r.err.find("not a prime power") != std::string::npos);
}

TEST_CASE("graph: json and dot exports") {
    RunResult r = run_cli("graph \"Z/4 x Z/4\" --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(" -- ") != std::string::npos);

    r = run_cli("graph \"GF(2) x GF(3)\" --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"edges\": []") != std::string::npos);

    r = run_cli("graph \"GF(2)\" --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"vertices\": []") != std::string::npos);

    r = run_cli("graph \"Z/4 x Z/4\" --format xml");
    CHECK(r.exit_code != 0);
}

TEST_CASE("genus: accepts a graph file and emits certified bounds") {
    fs::path dir = fs::temp_directory_path() / "pisgenus_cli_test";
    fs::create_directories(dir);
    fs::path k5 = dir / "k5.json";
    {
        std::ofstream out(k5);
        out << pis::export_graph(pis::complete_graph(5), pis::GraphFormat::Json, "K5");
    }
    RunResult r = run_cli("genus " + k5.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"lower\": 1") != std::string::npos);
    CHECK(r.out.find("\"upper\": 1") != std::string::npos);
}

TEST_CASE("genus certificate round-trips through --verify-certificate") {
    fs::path dir = fs::temp_directory_path() / "pisgenus_cli_test";
    fs::create_directories(dir);
    fs::path graph = dir / "ring_graph.json";
    fs::path cert = dir / "ring_cert.json";
    RunResult r = run_cli("graph \"Z/16 x Z/4\" --format json");
    REQUIRE(r.exit_code == 0);
    {
        std::ofstream out(graph);
        out << r.out;
    }
    r = run_cli("genus \"Z/16 x Z/4\" --cert-out " + cert.string());
    REQUIRE(r.exit_code == 0);
    r = run_cli("--verify-certificate " + graph.string() + " " + cert.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("OK") != std::string::npos);
}

TEST_CASE("genus output is deterministic for fixed flags and seed") {
    RunResult a = run_cli("genus \"Z/8 x Z/4\" --seed 3");
    RunResult b = run_cli("genus \"Z/8 x Z/4\" --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify: confirmed ring exits zero") {
    RunResult r = run_cli("verify \"GF(2) x Z/8\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\": \"confirmed\"") != std::string::npos);
}

TEST_CASE("suite: ok manifest exits zero with a summary per case") {
    RunResult r = run_cli(std::string("suite ") + data_file("smoke_suite.json").string() +
                          " --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT: ok") != std::string::npos);
    CHECK(r.out.find("Z/8 x Z/4") != std::string::npos);
}

TEST_CASE("suite: empty manifest exits zero") {
    fs::path dir = fs::temp_directory_path() / "pisgenus_cli_test";
    fs::create_directories(dir);
    fs::path empty = dir / "empty.json";
    {
        std::ofstream out(empty);
        out << "[]";
    }
    RunResult r = run_cli("suite " + empty.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("RESULT: ok") != std::string::npos);
}

TEST_CASE("suite: the shipped acceptance manifest surfaces the one refutation") {
    RunResult r = run_cli(std::string("suite ") + PISGENUS_SUITE_MANIFEST + " --jobs 4");
    // Z/8 x Z/8 is classified at-least-three by the decision rules but its
    // graph carries certified genus-2 bounds, so the suite must exit nonzero
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("RESULT: mismatch") != std::string::npos);
    int mismatches = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line))
        if (line.find(", mismatch") != std::string::npos) {
            ++mismatches;
            CHECK(line.find("Z/8 x Z/8") != std::string::npos);
        }
    CHECK(mismatches == 1);
}

TEST_CASE("suite: an inconsistent expectation is a manifest error") {
    fs::path dir = fs::temp_directory_path() / "pisgenus_cli_test";
    fs::create_directories(dir);
    fs::path bad = dir / "bad.json";
    {
        std::ofstream out(bad);
        out << "[{\"spec\": \"Z/4 x Z/4\", \"expected\": \"Two\"}]";
    }
    RunResult r = run_cli("suite " + bad.string());
    CHECK(r.exit_code != 0);
    CHECK(r.err.find("decision rules") != std::string::npos);
}
