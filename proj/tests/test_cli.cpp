#include "doctest.h"

#include "palf/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace palf;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
    args.insert(args.begin() + 1, "--json");
    const Run r = run(args);
    CHECK(r.code == expected_code);
    json j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == args[0]);
    CHECK(j["exit_code"] == expected_code);
    return j;
}

} // namespace

TEST_CASE("check-hs examples") {
    auto r = run({"check-hs", "--page", "4", "d1, 0/1, 1/0"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("homology sphere: true") != std::string::npos);
    auto j = run_json({"check-hs", "--page", "4", "d1, 0/1, 1/0"}, 0);
    CHECK(j["homology_sphere"] == true);
    CHECK(j["det_a"] == -1);

    j = run_json({"check-hs", "--page", "2", "{1}, {1}"}, 1);
    CHECK(j["homology_sphere"] == false);
    CHECK(j["h1_boundary"]["torsion"] == json::array({2}));
}

TEST_CASE("total example") {
    const auto r = run({"total", "d1, 0/1, 1/0"});
    CHECK(r.code == 0);
    CHECK(r.out == "delta=(1,0,0,0) word=A·B\n");
    const auto j = run_json({"total", "1/1"}, 0);
    CHECK(j["total"]["normal_form"] == "delta=(1,1,1,1) word=A^-1·B^-1");
}

TEST_CASE("verdict") {
    auto j = run_json({"verdict", "d1, 0/1, 1/0"}, 0);
    CHECK(j.dump().find("D4-or-Mazur") != std::string::npos);
    run_json({"verdict", "1/0, 1/0, 0/1"}, 1);
}

TEST_CASE("h1") {
    const auto j = run_json({"h1", "--page", "4", "d1, d2, 1/0"}, 0);
    CHECK(j["h1_total"]["free_rank"] == 1);
}

TEST_CASE("equiv and classify") {
    auto j = run_json({"equiv", "1/0, 0/1", "0/1, 1/2"}, 0);
    CHECK(j["verdict"] == "equivalent");
    j = run_json({"equiv", "1/0, 1/0", "1/0, 0/1"}, 1);
    CHECK(j["verdict"] == "distinguished");
    j = run_json({"classify", "d1, 0/1, 1/0", "0/1, d1, 1/0"}, 0);
    CHECK(j["verdict"] == "equivalent");
    j = run_json({"classify", "d1, 0/1, 5/2", "d1, -1/2, 2/1"}, 1);
    CHECK(j["proven_inequivalent"] == true);
    const auto r = run({"classify", "d1, 0/1, 5/2", "d1, -1/2, 2/1"});
    CHECK(r.out.rfind("not equivalent:", 0) == 0);
}

TEST_CASE("enum") {
    auto j = run_json({"enum", "--total-of", "d1, 0/1, 1/0", "--length", "3"}, 0);
    CHECK(j["count"].get<int>() > 0);
    j = run_json({"enum", "t(1/0)", "--length", "2"}, 1);
    CHECK(j["count"] == 0);
    j = run_json({"enum", "t(d1)", "--length", "1"}, 0);
    CHECK(j["factorizations"] == json::array({"d1"}));
}

TEST_CASE("snf and orbit") {
    auto j = run_json({"snf", "[[2,0],[0,3]]"}, 0);
    CHECK(j["divisors"] == json::array({1, 6}));
    j = run_json({"orbit", "--max", "5", "1/0, 0/1"}, 0);
    CHECK(j["count"] == 5);
}

TEST_CASE("errors exit with 2") {
    auto r = run({"total", "2/4"});
    CHECK(r.code == kExitError);
    CHECK(r.err.find("NonCoprime") != std::string::npos);
    const auto j = run_json({"total", "2/4"}, 2);
    CHECK(j["error"] == "NonCoprime");
    CHECK(run({"bogus"}).code == kExitError);
    CHECK(run({}).code == kExitError);
    CHECK(run({"total"}).code == kExitError);
    CHECK(run({"check-hs", "--page", "x", "d1"}).code == kExitError);
}

TEST_CASE("help exits with 0") {
    const auto r = run({"check-hs", "--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("--page") != std::string::npos);
}

TEST_CASE("inputs from a file") {
    const std::string path = "palf_cli_test_input.txt";
    {
        std::ofstream f(path);
        f << "d1, 0/1, 1/0\n\n0/1, d1, 1/0\n";
    }
    const auto r = run({"classify", "--file", path});
    std::remove(path.c_str());
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("equivalent", 0) == 0);
}
