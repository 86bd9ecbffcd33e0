#include "egypt/rational.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;
using namespace egypt;

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run(const std::string& args) {
    std::string cmd = std::string(EGYPT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), out};
}

json run_json(const std::string& args) {
    CliResult r = run(args + " --format json");
    return json::parse(r.output);
}

}  // namespace

TEST_CASE("decompose modes and exit codes") {
    CliResult greedy = run("decompose 2/3 --mode greedy");
    CHECK(greedy.exit_code == 0);
    CHECK(greedy.output.find("result: [2,6]") != std::string::npos);

    CliResult full = run("decompose 3/2 --mode full");
    CHECK(full.exit_code == 0);
    CHECK(full.output.find("result: [2,3,4,5,6,20]") != std::string::npos);

    CHECK(run("decompose 0/2").exit_code != 0);
    CHECK(run("decompose 3/2 --mode greedy").exit_code == 1);
    CHECK(run("decompose -- -1/2").exit_code != 0);
}

TEST_CASE("decompose json round-trips into domain types") {
    json doc = run_json("decompose 2/3 --mode greedy");
    CHECK(doc["command"] == "decompose");
    CHECK(doc["status"] == "ok");
    CHECK(Rational::parse(doc["result"]["target"].get<std::string>()) ==
          Rational(2, 3));
    EgyptianRepr r;
    for (const auto& d : doc["result"]["denominators"])
        r.insert(Int(d.get<long>()));
    CHECK(repr_sum(r) == Rational(2, 3));
}

TEST_CASE("split subcommand") {
    CliResult basic = run("split 3 --rule basic");
    CHECK(basic.exit_code == 0);
    CHECK(basic.output.find("(3) -> (4,12)") != std::string::npos);

    json product =
        run_json("split 720 --rule product --factors 2,3,4,5,6");
    CHECK(product["status"] == "ok");
    CHECK(product["result"]["instance"]["produced"] ==
          json({2400, 2880, 3600, 4800, 7200}));

    CliResult odd3 = run("split 5 --rule odd3");
    CHECK(odd3.output.find("(5) -> (9,15,45)") != std::string::npos);

    CHECK(run("split 6 --rule product --factors 2,4").exit_code == 1);
    CHECK(run("split 3 --rule even").exit_code == 1);
}

TEST_CASE("rewrite subcommand") {
    CliResult r = run("rewrite --q 2 --d 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[6,10] <-> [5,15]") != std::string::npos);
    CHECK(r.output.find("odd-preserving: no") != std::string::npos);

    json j = run_json("rewrite --q 3 --d 2");
    CHECK(j["result"]["consumed"] == json({15, 39}));
    CHECK(j["result"]["produced"] == json({13, 65}));
    CHECK(j["result"]["odd_preserving"] == true);

    CHECK(run("rewrite --q 1 --d 1").exit_code == 1);
}

TEST_CASE("match and merge subcommands") {
    json m = run_json("match 6 10");
    CHECK(m["result"]["q"] == 2);
    CHECK(m["result"]["direction"] == "forward");
    CHECK(run("match 5 15 --format json").output.find("backward") !=
          std::string::npos);
    CHECK(run("match 7 11").exit_code == 2);

    json mg = run_json("merge 4 12");
    CHECK(mg["result"]["merged"] == 3);
    CHECK(run("merge 3 5").exit_code == 2);
}

TEST_CASE("search subcommand") {
    CliResult s = run("search 1 --max-terms 3 --max-denom 6");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("[2,3,6]") != std::string::npos);
    CHECK(s.output.find("count: 1") != std::string::npos);

    json odd = run_json("search 1/3 --max-terms 3 --max-denom 45 --parity odd");
    CHECK(odd["result"]["count"] == 2);  // the trivial {3}, then {5,9,45}
    CHECK(odd["result"]["representations"][0] == json({3}));
    CHECK(odd["result"]["representations"][1] == json({5, 9, 45}));

    // 2/3 is not a unit fraction, so a one-term budget finds nothing.
    CHECK(run("search 2/3 --max-terms 1 --max-denom 1000").exit_code == 2);
}

TEST_CASE("enumerate-one subcommand") {
    json j = run_json("enumerate-one --count 2");
    CHECK(j["result"]["representations"][0] == json({2, 3, 6}));
    CHECK(j["result"]["representations"][1] == json({3, 4, 5, 6, 20}));
}

TEST_CASE("verify subcommand") {
    CHECK(run("verify repr [3,5,7,9,11,15,35,45,231] 1").exit_code == 0);
    CliResult miss = run("verify repr [2,3,7] 1");
    CHECK(miss.exit_code == 3);
    CHECK(miss.output.find("41/42") != std::string::npos);

    CHECK(run("verify tables").exit_code == 0);
    CHECK(run("verify theorems").exit_code == 0);
    CHECK(run("verify repr").exit_code == 1);
}

TEST_CASE("identical invocations are byte-identical") {
    for (const char* args :
         {"search 1 --max-terms 4 --max-denom 20 --format json",
          "decompose 7/9 --mode greedy", "verify tables --format json"}) {
        CliResult a = run(args);
        CliResult b = run(args);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == b.exit_code);
    }
}
