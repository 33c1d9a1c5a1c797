#include "infcomp/cli.hpp"
#include "infcomp/error.hpp"
#include "infcomp/io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace infcomp;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = cli::main_entry(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("certify command") {
    const Run r = invoke({"certify", "--family", "geometric", "--s", "2", "--r0", "2"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["alpha"] == 1.0);
    CHECK(doc["safe_radius"] == 0.25);
    CHECK(doc["cn"].size() == 20);
    CHECK(doc["cn"][0] == 0.5);
    CHECK(doc["tail_formula"].is_string());
}

TEST_CASE("eval command") {
    const Run r = invoke({"eval", "--family", "geometric", "--s", "2", "--r0", "2", "--z", "1", "0", "--epsilon", "1e-9"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(std::abs(doc["value"][0].get<double>() - 3.194528049465) < 1e-9);
    CHECK(doc["value"][1] == 0.0);
    CHECK(doc["error_bound"].get<double>() <= 1e-9);
    CHECK(doc["N_used"].get<int>() >= doc["m1"].get<int>());
}

TEST_CASE("series and poincare commands") {
    const Run s = invoke({"series", "--family", "geometric", "--s", "4", "--degree", "3", "--epsilon", "1e-14"});
    REQUIRE(s.code == 0);
    const json series = json::parse(s.out);
    CHECK(series["coefficients"].size() == 4);
    CHECK(std::abs(series["coefficients"][2][0].get<double>() - 1.0 / 3.0) < 1e-12);

    const Run p = invoke({"poincare", "--s", "2", "0", "--z", "3", "0", "--epsilon", "1e-6"});
    REQUIRE(p.code == 0);
    const json poincare = json::parse(p.out);
    CHECK(poincare["k"].get<int>() >= 3);
    CHECK(std::abs(poincare["value"][0].get<double>() - 0.5 * std::expm1(6.0)) < 1e-6);
}

TEST_CASE("explicit families come from JSON") {
    const std::string family = R"({"kind":"explicit","factors":[[[0,0],[1,0],[0.5,0]],[[0,0],[1,0],[0,0],[0.1,0.2]]]})";
    const Run r = invoke({"eval", "--family-json", family, "--z", "0.3", "0.1"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["error_bound"] == 0.0);

    const std::string path = "cli_test_family.json";
    std::ofstream(path) << R"({"kind":"power_law","p":3.0,"r0":3})";
    const Run c = invoke({"certify", "--family-file", path});
    std::remove(path.c_str());
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["family"]["kind"] == "power_law");
}

TEST_CASE("family JSON round trip") {
    for (const char *text : {R"({"kind":"geometric","s":[1.5,1.5],"r0":3})", R"({"kind":"power_law","p":4.5,"r0":2})",
                             R"({"kind":"explicit","factors":[[[0,0],[1,0],[0.25,-1]]]})"}) {
        const json doc = json::parse(text);
        const json again = io::family_to_json(io::family_from_json(doc));
        CHECK(io::family_to_json(io::family_from_json(again)) == again);
        CHECK(again["kind"] == doc["kind"]);
    }
    CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"kind":"geometric","s":2,"r0":2})")), ValidationError);
    CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"kind":"spiral"})")), ValidationError);
    CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"kind":"explicit","factors":[[[1,0],[1,0]]]})")),
                    ValidationError);
}

TEST_CASE("exit statuses") {
    SUBCASE("validation") {
        CHECK(invoke({"eval", "--family", "geometric", "--s", "0.5", "--z", "1", "0"}).code == cli::kExitValidation);
        CHECK(invoke({"eval", "--family", "geometric", "--s", "2"}).code == cli::kExitValidation);
        CHECK(invoke({"frobnicate"}).code == cli::kExitValidation);
        CHECK(invoke({"eval", "--family-json", "{not json", "--z", "1", "0"}).code == cli::kExitValidation);
        CHECK(invoke({"grid", "--family", "geometric", "--s", "2", "--grid", "-1", "1", "-1", "1", "1"}).code ==
              cli::kExitValidation);
        const Run r = invoke({"eval", "--family", "geometric", "--s", "2", "--z", "1", "0", "--epsilon", "-1"});
        CHECK(r.code == cli::kExitValidation);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    SUBCASE("certification") {
        const Run r = invoke({"certify", "--family", "power_law", "--p", "1", "--r0", "2"});
        CHECK(r.code == cli::kExitCertification);
        CHECK(r.err.find("diverges") != std::string::npos);
    }
    SUBCASE("budget and overflow") {
        CHECK(invoke({"eval", "--family", "power_law", "--p", "3", "--r0", "3", "--z", "1", "0", "--epsilon", "1e-12",
                      "--max-factors", "1000"})
                  .code == cli::kExitBudget);
        CHECK(invoke({"poincare", "--s", "2", "--z", "1000", "0"}).code == cli::kExitBudget);
    }
}

TEST_CASE("identical configs produce identical bytes") {
    const std::vector<std::vector<std::string>> configs = {
        {"eval", "--family", "geometric", "--s", "1.5", "1.5", "--z", "0.7", "-0.3"},
        {"series", "--family", "geometric", "--s", "2", "--degree", "10"},
        {"grid", "--family", "geometric", "--s", "-2", "--grid", "-1", "1", "-1", "1", "5", "--format", "csv"},
        {"verify"},
    };
    for (const auto &args : configs) {
        const Run a = invoke(args);
        const Run b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("grid CSV layout") {
    const Run r = invoke({"grid", "--family", "geometric", "--s", "2", "--grid", "-1", "1", "-0.5", "0.5", "4", "--format",
                          "csv"});
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 1 + 16);
    CHECK(lines[0] == "re,im,f_re,f_im,error_bound");
    CHECK(r.out.find("nan") == std::string::npos);
    CHECK(r.out.find("inf") == std::string::npos);
    // Row order: im index outer, re index inner.
    CHECK(lines[1].rfind("-1,-0.5,", 0) == 0);
    CHECK(lines[2].rfind("-0.33333333333333337,-0.5,", 0) == 0);
    CHECK(lines[5].rfind("-1,-0.16666666666666669,", 0) == 0);
    // Values are the certified composition.
    std::istringstream row(lines[16]);
    std::string cell;
    std::vector<double> v;
    while (std::getline(row, cell, ',')) {
        v.push_back(std::stod(cell));
    }
    REQUIRE(v.size() == 5);
    const std::complex<double> z(v[0], v[1]);
    CHECK(std::abs(std::complex<double>(v[2], v[3]) - 0.5 * (std::exp(2.0 * z) - 1.0)) <= v[4] + 1e-13);
}

TEST_CASE("grid marks overflow cells") {
    const Run r = invoke({"grid", "--family", "geometric", "--s", "2", "--grid", "0", "400", "0", "0", "3", "--format",
                          "csv"});
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 1 + 9);
    CHECK(lines[1].find("overflow") == std::string::npos);
    CHECK(lines[3] == "400,0,overflow,overflow,overflow");
}

TEST_CASE("output to a file") {
    const std::string path = "cli_test_output.json";
    const Run r = invoke({"certify", "--family", "geometric", "--s", "3", "--output", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(path.c_str());
    CHECK(json::parse(buf.str())["alpha"] == 0.5);
}

TEST_CASE("verify command") {
    const Run r = invoke({"verify"});
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["all_passed"] == true);
    CHECK(doc["checks"].size() == 11);
}
