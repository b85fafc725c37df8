#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* bin = std::getenv("MSKIT_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

std::string golden_dir() {
    const char* dir = std::getenv("MSKIT_GOLDEN");
    REQUIRE(dir != nullptr);
    return dir;
}

std::string fixture_dir() {
    const char* dir = std::getenv("MSKIT_FIXTURES");
    REQUIRE(dir != nullptr);
    return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string temp_path(const std::string& name) {
    return "/tmp/mskit_cli_" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("gen + verify round trip on the hex family") {
    std::string path = temp_path("h4.json");
    auto gen = run("gen hex 4 -o " + path);
    CHECK(gen.exit_code == 0);

    auto verify = run("--json verify " + path);
    CHECK(verify.exit_code == 0);
    auto j = nlohmann::json::parse(verify.out);
    CHECK(j.at("verdict") == "pass");
    bool saw_theorem = false;
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("status") != "FAIL");
        if (c.at("name") == "theorem") {
            saw_theorem = true;
            CHECK(c.at("status") == "PASS");
        }
    }
    CHECK(saw_theorem);
    std::remove(path.c_str());
}

TEST_CASE("validate flags the square with diagonals") {
    std::string path = temp_path("square.json");
    spit(path, R"({"vertices": [[0,0],[1,0],[1,1],[0,1]],
                   "edges": [[0,1],[1,2],[2,3],[0,3],[0,2],[1,3]]})");
    auto res = run("--json validate " + path);
    CHECK(res.exit_code == 1);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("pass") == false);
    int non_unit = 0, crossing = 0;
    for (const auto& v : j.at("violations")) {
        if (v.at("kind") == "NON_UNIT_EDGE") ++non_unit;
        if (v.at("kind") == "PROPER_CROSSING") ++crossing;
    }
    CHECK(non_unit == 2);
    CHECK(crossing == 1);
    std::remove(path.c_str());
}

TEST_CASE("usage and input errors exit with 2") {
    CHECK(run("gen hex 1").exit_code == 2);
    CHECK(run("gen primitive not_a_shape").exit_code == 2);
    CHECK(run("verify /nonexistent/file.json").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    std::string path = temp_path("trunc.json");
    spit(path, "{\"vertices\": [[0,");
    CHECK(run("verify " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("report output is byte-identical to the committed goldens") {
    for (std::string name : {"h2", "h4", "rhombus_pendant"}) {
        CAPTURE(name);
        std::string input;
        if (name == "h2") {
            input = temp_path("golden_h2.json");
            REQUIRE(run("gen hex 2 -o " + input).exit_code == 0);
        } else if (name == "h4") {
            input = temp_path("golden_h4.json");
            REQUIRE(run("gen hex 4 -o " + input).exit_code == 0);
        } else {
            input = fixture_dir() + "/rhombus_pendant.json";
        }
        auto res = run("report " + input);
        CHECK(res.exit_code == 0);
        CHECK(res.out == slurp(golden_dir() + "/report_" + name + ".json"));
    }
}

TEST_CASE("MSKIT_EPS_LEN sets the default and the flag overrides it") {
    std::string path = temp_path("stretched.json");
    spit(path, R"({"vertices": [[0,0],[1.05,0]], "edges": [[0,1]]})");
    CHECK(run("validate " + path).exit_code == 1);
    CHECK(run("validate " + path, "MSKIT_EPS_LEN=0.1").exit_code == 0);
    CHECK(run("--eps-len 1e-9 validate " + path, "MSKIT_EPS_LEN=0.1")
              .exit_code == 1);
    std::remove(path.c_str());
}

TEST_CASE("discharge reports the ledger") {
    std::string path = fixture_dir() + "/rhombus_pendant.json";
    auto res = run("--json discharge " + path + " --per-element");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("total_initial") == -12.0);
    CHECK(j.at("total_final") == doctest::Approx(-12.0));
    CHECK(j.at("vertices").size() == 5);
    CHECK(j.at("faces").size() == 2);
}

TEST_CASE("svg renders to a file") {
    std::string in = temp_path("svg_h2.json");
    std::string out = temp_path("h2.svg");
    REQUIRE(run("gen hex 2 -o " + in).exit_code == 0);
    CHECK(run("svg " + in + " -o " + out + " --scale 40").exit_code == 0);
    std::string svg = slurp(out);
    CHECK(svg.find("<svg") != std::string::npos);
    std::remove(in.c_str());
    std::remove(out.c_str());
}

TEST_CASE("gen random is reproducible") {
    auto a = run("gen random --seed 42 --k 3 --prob 0.7");
    auto b = run("gen random --seed 42 --k 3 --prob 0.7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run("gen random --seed 43 --k 3 --prob 0.7");
    CHECK(a.out != c.out);
}
