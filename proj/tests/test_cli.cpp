#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "aitken/exact_core.hpp"

using json = nlohmann::json;
using namespace aitken;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

RunResult run(const std::string& args) {
    static int seq = 0;
    std::string tmp = "cli_out_" + std::to_string(seq++) + ".tmp";
    std::string cmd = std::string("\"") + AITKEN_CLI_PATH + "\" " + args +
                      " > " + tmp + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(tmp)};
    std::remove(tmp.c_str());
    return r;
}

// structural validation against the shipped schema: required keys, the
// command/verdict enums, and the per-key types it declares
void check_against_schema(const json& doc) {
    static json schema = json::parse(slurp(AITKEN_SCHEMA_PATH));
    REQUIRE(doc.is_object());
    for (const auto& req : schema.at("required"))
        CHECK(doc.contains(req.get<std::string>()));
    const auto& props = schema.at("properties");
    for (const auto& [key, val] : doc.items())
        CHECK(props.contains(key));  // additionalProperties: false
    bool cmd_ok = false;
    for (const auto& e : props.at("command").at("enum"))
        if (e == doc.at("command")) cmd_ok = true;
    CHECK(cmd_ok);
    bool verdict_ok = false;
    for (const auto& e : props.at("verdict").at("enum"))
        if (e == doc.at("verdict")) verdict_ok = true;
    CHECK(verdict_ok);
    CHECK(doc.at("failures").is_array());
    CHECK(doc.at("params").is_object());
}

}  // namespace

TEST_CASE("csv table reproduces the reference triangle") {
    auto r = run("table --n 7 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "n,k,A");
    auto tri = core::a_triangle(7);
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        unsigned long n, k;
        char val[64] = {0};
        REQUIRE(std::sscanf(line.c_str(), "%lu,%lu,%63s", &n, &k, val) == 3);
        REQUIRE(n <= 7);
        REQUIRE(k <= n);
        CHECK(tri.at(n, k) == mpz_class(val));
        ++rows;
    }
    CHECK(rows == 36);
}

TEST_CASE("json outputs conform to the shipped schema") {
    for (const char* args :
         {"table --n 5 --format json", "oracle-check --n 6",
          "dobinski --n 3 --k 2", "mod-verify --p 3 --rows 40",
          "period --p 3 --k 1", "zero-string --p 3 --k 1",
          "identities --grid 4 --poly-grid 3 --format json"}) {
        auto r = run(args);
        CHECK(r.exit_code == 0);
        check_against_schema(json::parse(r.out));
    }
}

TEST_CASE("output is deterministic across runs") {
    for (const char* args :
         {"table --n 9 --format json", "report --grid 4",
          "zero-string --p 3 --k 2 --direction k"}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("--out writes the same bytes as stdout") {
    auto to_stdout = run("table --n 6 --format csv");
    auto piped = run("table --n 6 --format csv --out cli_file.tmp");
    CHECK(piped.exit_code == 0);
    CHECK(piped.out.empty());
    CHECK(slurp("cli_file.tmp") == to_stdout.out);
    std::remove("cli_file.tmp");
}

TEST_CASE("exit codes: pass, verification failure, usage") {
    CHECK(run("oracle-check --n 6").exit_code == 0);
    CHECK(run("identities --grid 5 --poly-grid 3 --corrupt-entry 5,2")
              .exit_code == 1);
    CHECK(run("table --n 7 --corrupt-entry 99,0").exit_code == 2);
    CHECK(run("mod-verify --p 9 --rows 30").exit_code == 2);
    CHECK(run("period --p 3 --direction q").exit_code == 2);
    CHECK(run("table").exit_code == 2);         // missing --n
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("").exit_code == 2);              // subcommand required
    CHECK(run("period --p 11 --k 1").exit_code == 2);  // gated behind --slow
}

TEST_CASE("period report values for p=3") {
    auto r = run("period --p 3 --k 1");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("data").at("N_p") == "13");
    CHECK(j.at("data").at("minimal_period") == "13");
    CHECK(j.at("data").at("minimal_matches_N_p") == true);
    CHECK(j.at("params").at("p") == 3);
}

TEST_CASE("zero-string report values for p=3, k=1") {
    auto r = run("zero-string --p 3 --k 1");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("data").at("start") == 8);
    CHECK(j.at("data").at("length_found").get<long>() >= 2);
}

TEST_CASE("dobinski isolates the expected integer") {
    auto r = run("dobinski --n 3 --k 2");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("verdict") == "pass");
    REQUIRE(j.at("data").size() == 1);
    CHECK(j.at("data")[0].at("isolated") == "20");
}

TEST_CASE("report summarises and passes") {
    auto r = run("report --grid 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("identity catalog") != std::string::npos);
    CHECK(r.out.find("minimal period mod 5") != std::string::npos);
    CHECK(r.out.find("overall: pass") != std::string::npos);
}
