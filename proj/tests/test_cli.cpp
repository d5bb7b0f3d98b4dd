#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef TORICGRAPH_CLI_PATH
#error "TORICGRAPH_CLI_PATH must point at the command line binary"
#endif
#ifndef TEST_DATA_DIR
#error "TEST_DATA_DIR must point at the graph corpus"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string cmd = std::string(TORICGRAPH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof(buffer), pipe))
        result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ideal: glued squares print both quadrics") {
    auto r = run_cli("ideal " + data("glued_squares.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=6 q=7\n"
          "order grevlex\n"
          "generators 2\n"
          "  e1*e5 - e6*e7\n"
          "  e2*e4 - e3*e7\n");
}

TEST_CASE("ideal: triangle reports the zero ideal") {
    auto r = run_cli("ideal " + data("k3.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=3 q=3\n"
          "order grevlex\n"
          "zero ideal\n");
}

TEST_CASE("ideal: extended bowtie prints one degree-five binomial") {
    auto r = run_cli("ideal " + data("extended_bowtie.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("generators 1\n  e1*e4^2*e6*e7 - e2*e3*e5^2*e8\n") != std::string::npos);
}

TEST_CASE("init: glued squares under the partial lex order") {
    auto r = run_cli("init " + data("glued_squares.graph") + " --order lex:e6,e3 --partial");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=6 q=7\n"
          "order lex:e6,e3,e1,e2,e4,e5,e7\n"
          "minimal generators 3\n"
          "  e6*e7\n"
          "  e3*e7\n"
          "  e2*e4*e6\n"
          "height 2\n");
}

TEST_CASE("init: trees have no initial ideal") {
    auto r = run_cli("init " + data("path4.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("zero ideal\nheight 0\n") != std::string::npos);
}

TEST_CASE("gb honours an explicit order") {
    auto r = run_cli("gb " + data("k4.graph") + " --order lex:e1,e2,e3,e4,e5,e6");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=4 q=6\n"
          "order lex:e1,e2,e3,e4,e5,e6\n"
          "generators 2\n"
          "  e2*e4 - e3*e6\n"
          "  e1*e5 - e3*e6\n");
}

TEST_CASE("kmy: K4 at the first edge") {
    auto r = run_cli("kmy " + data("k4.graph") + " --edge 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=4 q=6\n"
          "y e1\n"
          "order ytop:e1+grevlex\n"
          "degenerate no\n"
          "gb 2\n"
          "  e2*e4 - e3*e6 | d=0 q=e2*e4 - e3*e6\n"
          "  e1*e5 - e3*e6 | d=1 q=e5 r=e3*e6\n"
          "C 2\n"
          "  e2*e4 - e3*e6\n"
          "  e5\n"
          "N 1\n"
          "  e2*e4 - e3*e6\n");
}

TEST_CASE("kmy: degenerate pendant edge") {
    auto r = run_cli("kmy " + data("c4_pendant.graph") + " --edge 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("degenerate yes\n") != std::string::npos);
}

TEST_CASE("height: glued squares walk down in two steps") {
    auto r = run_cli("height " + data("glued_squares.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=6 q=7\n"
          "height formula=2 degeneration=2\n"
          "deletion sequence 2 steps\n"
          "  delete e1\n"
          "  delete e2\n");
}

TEST_CASE("height: forests report zero") {
    auto r = run_cli("height " + data("path4.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("height formula=0 degeneration=0\n"
                        "deletion sequence 0 steps\n") != std::string::npos);
}

TEST_CASE("chroma: glued squares certificate") {
    auto r = run_cli("chroma " + data("glued_squares.graph") + " --order lex:e6,e3 --partial");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=6 q=7\n"
          "order lex:e6,e3,e1,e2,e4,e5,e7\n"
          "init generators 3\n"
          "  e6*e7 covered by e7\n"
          "  e3*e7 covered by e7\n"
          "  e2*e4*e6 covered by e2\n"
          "cover { e2 e7 } size 2 minimum yes\n"
          "bound 5\n"
          "exact chromatic number 2\n"
          "delta plus one 4\n");
}

TEST_CASE("chroma: bowtie search reports the principal shortcut") {
    auto r = run_cli("chroma " + data("bowtie.graph") + " --search 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("bound 4\n") != std::string::npos);
    CHECK(r.output.find("exact chromatic number 3\n") != std::string::npos);
    CHECK(r.output.find("delta plus one 5\n") != std::string::npos);
    CHECK(r.output.find("principal shortcut 4\n") != std::string::npos);
}

TEST_CASE("graver: extended bowtie element with multiplicities") {
    auto r = run_cli("graver " + data("extended_bowtie.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "graph p=7 q=8\n"
          "graver basis 1 elements\n"
          "  e1*e4^2*e6*e7 - e2*e3*e5^2*e8 | two-odd-cycles | e1 e2 e3 e4:2 e5:2 e6 e7 e8\n");
}

TEST_CASE("verify: single graph battery passes") {
    auto r = run_cli("verify " + data("k4.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all 16 properties pass\n") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify: exhaustive sweep over small graphs") {
    auto r = run_cli("verify --exhaustive 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "p=1 classes=1 pass\n"
          "p=2 classes=1 pass\n"
          "p=3 classes=2 pass\n"
          "p=4 classes=6 pass\n"
          "all 10 graphs pass\n");
}

TEST_CASE("export-m2: script round") {
    auto r = run_cli("export-m2 " + data("k3.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "R = QQ[e1..e3];\n"
          "S = QQ[v1..v3];\n"
          "phi = map(S, R, {v1*v2, v2*v3, v1*v3});\n"
          "I = ker phi;\n"
          "gens gb I\n");
}

TEST_CASE("json output parses and matches the computation") {
    auto r = run_cli("ideal " + data("k4.graph") + " --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "ideal");
    CHECK(j["graph"]["p"] == 4);
    CHECK(j["graph"]["q"] == 6);
    CHECK(j["order"] == "grevlex");
    CHECK(j["zero"] == false);
    CHECK(j["generators"] ==
          nlohmann::json::array({"e1*e5 - e3*e6", "e2*e4 - e3*e6"}));
}

TEST_CASE("json kmy record carries the split fields") {
    auto r = run_cli("kmy " + data("k4.graph") + " --edge 1 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["y"] == "e1");
    CHECK(j["degenerate"] == false);
    REQUIRE(j["gb"].size() == 2);
    CHECK(j["gb"][0]["d"] == 0);
    CHECK(j["gb"][0]["r"].is_null());
    CHECK(j["gb"][1]["d"] == 1);
    CHECK(j["gb"][1]["q"] == "e5");
    CHECK(j["gb"][1]["r"] == "e3*e6");
    CHECK(j["C"] == nlohmann::json::array({"e2*e4 - e3*e6", "e5"}));
    CHECK(j["N"] == nlohmann::json::array({"e2*e4 - e3*e6"}));
}

TEST_CASE("json chroma certificate carries the witness map") {
    auto r = run_cli("chroma " + data("glued_squares.graph") +
                     " --order lex:e6,e3 --partial --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["cover"] == nlohmann::json::array({"e2", "e7"}));
    CHECK(j["bound"] == 5);
    CHECK(j["exact_chromatic_number"] == 2);
    CHECK(j["delta_plus_one"] == 4);
    CHECK(j["cover_is_minimum"] == true);
    CHECK(j["divisibility_witness"]["e6*e7"] == "e7");
    CHECK(j["divisibility_witness"]["e2*e4*e6"] == "e2");
    CHECK(j["principal_shortcut"].is_null());
}

TEST_CASE("json verify exhaustive summary") {
    auto r = run_cli("verify --exhaustive 3 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["all_pass"] == true);
    REQUIRE(j["levels"].size() == 3);
    CHECK(j["levels"][2]["classes"] == 2);
}

TEST_CASE("identical runs produce identical bytes") {
    for (const std::string args :
         {std::string("chroma ") + data("k4.graph") + " --search 4 --seed 11",
          std::string("verify ") + data("glued_squares.graph") + " --format json",
          std::string("graver ") + data("k4.graph") + " --format json"}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("parse errors exit with code 2 and a line number") {
    {
        std::ofstream out("/tmp/toricgraph_bad.graph");
        out << "4\n1 2\n1 2\n";
    }
    auto r = run_cli("ideal /tmp/toricgraph_bad.graph");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);

    {
        std::ofstream out("/tmp/toricgraph_loop.graph");
        out << "# comment\n3\n1 1\n";
    }
    auto loop = run_cli("height /tmp/toricgraph_loop.graph");
    CHECK(loop.exit_code == 2);
    CHECK(loop.output.find("line 3") != std::string::npos);
    CHECK(loop.output.find("self-loop") != std::string::npos);
}

TEST_CASE("computation errors exit with code 1") {
    auto missing_edge = run_cli("kmy " + data("k4.graph") + " --edge 9");
    CHECK(missing_edge.exit_code == 1);
    CHECK(missing_edge.output.find("e9") != std::string::npos);

    auto capped = run_cli("ideal " + data("k4.graph") + " --max-edges 3");
    CHECK(capped.exit_code == 1);
    CHECK(capped.output.find("--max-edges") != std::string::npos);

    auto bad_order = run_cli("gb " + data("k4.graph") + " --order lex:e9");
    CHECK(bad_order.exit_code == 1);
}

TEST_CASE("usage errors are reported by the parser") {
    CHECK(run_cli("no-such-command").exit_code != 0);
    CHECK(run_cli("ideal").exit_code != 0);                      // missing file
    CHECK(run_cli("kmy " + data("k4.graph")).exit_code != 0);    // missing --edge
    CHECK(run_cli("ideal " + data("k4.graph") + " --format yaml").exit_code != 0);
}

}  // TEST_SUITE
