#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

// YM_CLI_PATH is injected by the build and points at the ymsolve binary.

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& stdin_text) {
    const std::string in_path = "/tmp/ym_cli_stdin.txt";
    {
        std::ofstream f(in_path, std::ios::binary | std::ios::trunc);
        f << stdin_text;
    }
    const std::string cmd =
        std::string("\"") + YM_CLI_PATH + "\" " + args + " < " + in_path + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

const std::string kWorkedJson =
    R"({"n": 3, "J": [[13, 0, 0], [0, 20, 0], [0, 0, 15]]})";

} // namespace

TEST_CASE("solve reports the worked current") {
    const CliResult r = run_cli("solve -", kWorkedJson);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["case"] == "all-distinct");
    CHECK(doc["rank"] == 3);
    REQUIRE(doc["solutions"].size() == 2);
    CHECK(doc["K"].get<double>() == doctest::Approx(std::cbrt(36.0)).epsilon(1e-12));
    const auto& a = doc["solutions"][0]["A"];
    CHECK(a[0][0].get<double>() == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(a[1][1].get<double>() == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(a[2][2].get<double>() == doctest::Approx(-3.0).epsilon(1e-10));
    CHECK(std::fabs(a[0][1].get<double>()) < 1e-10);
}

TEST_CASE("solve accepts bare comma-separated input") {
    const CliResult r = run_cli("solve -", "13,0,0\n0,20,0\n0,0,15\n");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["case"] == "all-distinct");
    CHECK(doc["n"] == 3);
}

TEST_CASE("solve reads a file path and emits csv on request") {
    const std::string path = "/tmp/ym_cli_doc.json";
    {
        std::ofstream f(path, std::ios::trunc);
        f << kWorkedJson;
    }
    const CliResult r = run_cli("solve " + path + " --format csv", "");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("case,all-distinct\n") != std::string::npos);
    CHECK(r.out.find("solutions,2\n") != std::string::npos);
}

TEST_CASE("verify accepts the worked pair and rejects its sign flip") {
    const std::string good =
        R"({"n": 3, "J": [[13,0,0],[0,20,0],[0,0,15]], "A": [[-1,0,0],[0,-2,0],[0,0,-3]]})";
    CHECK(run_cli("verify -", good).exit_code == 0);

    const std::string bad =
        R"({"n": 3, "J": [[13,0,0],[0,20,0],[0,0,15]], "A": [[1,0,0],[0,2,0],[0,0,3]]})";
    const CliResult r = run_cli("verify -", bad);
    CHECK(r.exit_code == 1);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == false);
    CHECK(doc["residual_max"].get<double>() == doctest::Approx(40.0).epsilon(1e-12));

    // a generous bound turns the same pair into a pass
    CHECK(run_cli("verify - --tol 50", bad).exit_code == 0);
}

TEST_CASE("verify accepts the zero pair") {
    const std::string doc =
        R"({"n": 3, "J": [[0,0,0],[0,0,0],[0,0,0]], "A": [[0,0,0],[0,0,0],[0,0,0]]})";
    CHECK(run_cli("verify -", doc).exit_code == 0);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run_cli("verify -", kWorkedJson).exit_code == 2); // no A field
    CHECK(run_cli("solve -", "hello\n").exit_code == 2);
    CHECK(run_cli("solve -", "").exit_code == 2);
    CHECK(run_cli("solve /tmp/ym_cli_no_such_file.json", "").exit_code == 2);
    CHECK(run_cli("solve - --format yaml", kWorkedJson).exit_code == 2);
    CHECK(run_cli("frobnicate -", "").exit_code == 2);
    CHECK(run_cli("solve --bogus-flag", kWorkedJson).exit_code == 2);
    CHECK(run_cli("", "").exit_code == 2); // a subcommand is required
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help", "").exit_code == 0);
    CHECK(run_cli("solve --help", "").exit_code == 0);
}

TEST_CASE("classify reports rank and expected count") {
    const CliResult r = run_cli("classify -", kWorkedJson);
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["rank"] == 3);
    CHECK(doc["case"] == "all-distinct");
    CHECK(doc["expected_solutions"] == "2");
    CHECK(doc["singular_values"][0].get<double>() == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("reported solutions round-trip through verification") {
    const CliResult solved = run_cli("solve -", kWorkedJson);
    REQUIRE(solved.exit_code == 0);
    const nlohmann::json rep = nlohmann::json::parse(solved.out);
    REQUIRE(rep["solutions"].size() == 2);
    for (const auto& sol : rep["solutions"]) {
        nlohmann::json doc;
        doc["n"] = rep["n"];
        doc["J"] = rep["J"];
        doc["A"] = sol["A"];
        CHECK(run_cli("verify -", doc.dump()).exit_code == 0);
    }
}

TEST_CASE("certification sweep passes") {
    const CliResult r = run_cli("certify --trials 50 --n 4 --seed 7", "");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["roundtrip"]["passes"] == 50);
    CHECK(doc["sweep"]["passes"] == 50);
    CHECK(doc["roundtrip"]["failures"].empty());
}
