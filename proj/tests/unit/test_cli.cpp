#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wradius/generate.hpp"
#include "wradius/matrix_io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path tmp_dir = [] {
    fs::path p(WRADIUS_TEST_TMP);
    fs::create_directories(p);
    return p;
}();

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + WRADIUS_CLI + "\" " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp(const char* name) { return (tmp_dir / name).string(); }

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run("--help > /dev/null") == 0);
    CHECK(run("") == 2);
    CHECK(run("bogus") == 2);
    CHECK(run("analyze --example nope") == 2);
    CHECK(run("analyze --kind ginibre --dim 0") == 2);
    CHECK(run("--format xml analyze --example e12") == 2);
    CHECK(run("--r 0.5 analyze --example e12") == 2);
    CHECK(run("search --bound nope --iters 10") == 2);
    CHECK(run("analyze /nonexistent/matrix.json") == 2);

    std::ofstream(tmp("broken.json")) << R"({"n":2,"entries":[[[1,0]]]})";
    CHECK(run("analyze " + tmp("broken.json")) == 2);
}

TEST_CASE("gen then analyze") {
    REQUIRE(run("gen --kind normal --dim 3 --seed 0x2a --out " + tmp("normal.json")) == 0);
    const auto m = wradius::read_matrix_file(tmp("normal.json"));
    wradius::GeneratorSpec spec;
    spec.kind = wradius::MatrixKind::normal;
    spec.n = 3;
    spec.seed = 42;
    CHECK(m == wradius::generate(spec));

    REQUIRE(run("--quiet analyze --no-timings " + tmp("normal.json") + " --out " + tmp("normal_report.json")) == 0);
    const auto j = nlohmann::json::parse(slurp(tmp("normal_report.json")));
    CHECK(j["all_pass"].get<bool>());
    CHECK_FALSE(j.contains("timings"));

    REQUIRE(run("--format csv analyze --example shift3 --out " + tmp("shift3.csv")) == 0);
    CHECK(slurp(tmp("shift3.csv")).find("upper_bounds,th13,0.75") != std::string::npos);
}

TEST_CASE("range and search") {
    REQUIRE(run("range --example e12 --points 16 --out " + tmp("e12.csv")) == 0);
    const std::string csv = slurp(tmp("e12.csv"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
    REQUIRE(run("range --example ex_ii --format svg --out " + tmp("ex_ii.svg")) == 0);
    CHECK(slurp(tmp("ex_ii.svg")).find("<polyline") != std::string::npos);
    CHECK(run("range --example e12 --points 4 --out -") == 2);

    REQUIRE(run("search --bound kittaneh_upper --iters 200 --out " + tmp("search.json") + " --save-matrix " +
                tmp("best.json")) == 0);
    const auto j = nlohmann::json::parse(slurp(tmp("search.json")));
    CHECK(j["ratio"].get<double>() <= 1.0 + 1e-7);
    CHECK(wradius::read_matrix_file(tmp("best.json")).dim() == 2);
}

TEST_CASE("small verify run") {
    REQUIRE(run("verify --count 12 --dims 2..3 --no-timings --out " + tmp("summary.json")) == 0);
    const auto j = nlohmann::json::parse(slurp(tmp("summary.json")));
    CHECK(j["matrices"].get<int>() == 12);
    CHECK(j["violations"].get<int>() == 0);
    CHECK(run("verify --count 2 --dims 3..2") == 2);
    CHECK(run("verify --count 2 --kinds wishart") == 2);
}
