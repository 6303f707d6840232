#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "vb1/cli.hpp"
#include "vb1/errors.hpp"

using namespace vb1;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("field descriptor parsing") {
    CHECK(parse_field("Q") == FieldDescriptor::rationals());
    CHECK(parse_field("F7") == FieldDescriptor::prime(7));
    CHECK(parse_field("GF(2^3)") == FieldDescriptor::extension(2, 3));
    CHECK(parse_field("GF(5)") == FieldDescriptor::prime(5));
    CHECK_THROWS_WITH_AS(parse_field("R"), doctest::Contains("'R'"), invalid_input);
    CHECK_THROWS_AS(parse_field("F6"), invalid_input);
    CHECK_THROWS_AS(parse_field(""), invalid_input);
}

TEST_CASE("variable list parsing") {
    CHECK(parse_variables("x,y") == std::vector<std::string>{"x", "y"});
    CHECK(parse_variables(" a , b2 ") == std::vector<std::string>{"a", "b2"});
    CHECK_THROWS_AS(parse_variables("x,x"), invalid_input);
    CHECK_THROWS_AS(parse_variables("x,,y"), invalid_input);
    CHECK_THROWS_AS(parse_variables("2x"), invalid_input);
    CHECK_THROWS_AS(parse_variables("a,b,c,d,e"), invalid_input); // rank cap 4
}

TEST_CASE("subgroup descriptor parsing") {
    CHECK(parse_subgroup("m:4", 2) == congruence_lattice(4, 2));
    CHECK(parse_subgroup("prop53:2,2", 2) == kernel_lattice_prop53(2, 2));
    // generator-vector form: "3,0;-2,1" spans {(3,0),(-2,1)}
    CHECK(parse_subgroup("3,0;-2,1", 2) == kernel_lattice_prop53(2, 2));
    CHECK_THROWS_AS(parse_subgroup("m:0", 2), invalid_input);
    CHECK_THROWS_AS(parse_subgroup("1,2", 2), invalid_input);     // one vector, rank 2
    CHECK_THROWS_AS(parse_subgroup("1,2;2,4", 2), invalid_input); // singular
    CHECK_THROWS_AS(parse_subgroup("prop53:2,2", 3), invalid_input);
}

TEST_CASE("betti subcommand reproduces the characteristic-2 value") {
    Run r = run({"betti", "--field", "F2", "--vars", "x,y", "--ideal", "y - x^2 + x - 1",
                 "--subgroup", "m:2", "--format", "json", "--no-timing"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["betti"] == 4);
    CHECK(j["index"] == 4);
    CHECK(j["dim"] == 2);
    CHECK(j["schema_version"] == 1);
    CHECK(j.count("millis") == 0);
}

TEST_CASE("sigma subcommand emits the complement triple") {
    Run r = run({"sigma", "--field", "F2", "--vars", "x,y", "--ideal", "y - x^2 + x - 1",
                 "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["complement"] == nlohmann::json::parse("[[-1,-2],[0,1],[1,0]]"));
    CHECK(j["two_tame"] == true);
    CHECK(j["finitely_presented"] == true);
    CHECK(j["antipodal_pairs"].empty());
}

TEST_CASE("demo wreath emits m + 1") {
    Run r = run({"demo", "wreath", "--m", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("betti       8") != std::string::npos);
}

TEST_CASE("scan csv has one row per scanned m") {
    Run r = run({"scan", "--field", "Q", "--vars", "x,y", "--ideal", "y - x^2 + x - 1",
                 "--limit", "9", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "m,index,dim");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 9);
}

TEST_CASE("stabilize json carries claim2 and the verdict") {
    Run r = run({"stabilize", "--field", "Q", "--vars", "x,y", "--ideal", "y - x^2 + x - 1",
                 "--limit", "12", "--format", "json", "--no-timing"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "stabilized");
    CHECK(j["argmax"] == 4);
    CHECK(j["sup_observed"] == 3);
    REQUIRE(j["claim2"].size() == 2);
    CHECK(j["claim2"][0]["equal"] == true);
    CHECK(j["claim2"][1]["equal"] == true);
    CHECK(j["dims"].size() == 12);
}

TEST_CASE("m0 outputs match the hand enumeration") {
    Run r = run({"m0", "--d", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["feasible_orders"] == nlohmann::json::parse("[1,2,4,6]"));
    CHECK(j["b"] == 6);
    CHECK(j["m0_factorial"] == "720");
    CHECK(j["m0_lcm"] == "12");
}

TEST_CASE("gb subcommand prints a basis and its staircase") {
    Run r = run({"gb", "--field", "Q", "--vars", "x,y", "--ideal", "y - x^2 + x - 1",
                 "--subgroup", "m:4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("staircase   3") != std::string::npos);

    Run j = run({"gb", "--field", "Q", "--vars", "x,y", "--ideal", "y - x^2 + x - 1",
                 "--format", "json"});
    REQUIRE(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["staircase"] == "infinite");
    CHECK(parsed["order"] == "elimination(2)");
}

TEST_CASE("crosscheck subcommand succeeds on an agreeing instance") {
    Run r = run({"crosscheck", "--field", "F3", "--vars", "x,y", "--ideal", "y - x^2 + x - 1",
                 "--subgroup", "m:3", "--format", "json", "--no-timing"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim_coinvariants"] == 3);
    CHECK(j["dim_groebner"] == 3);
    CHECK(j["agree"] == true);
}

TEST_CASE("exit code 2 on malformed input") {
    CHECK(run({"betti", "--field", "F6", "--ideal", "x", "--subgroup", "m:2"}).code == 2);
    CHECK(run({"betti", "--field", "Q", "--ideal", "x +", "--subgroup", "m:2"}).code == 2);
    CHECK(run({"betti", "--field", "Q", "--ideal", "x", "--subgroup", "m:x"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"betti", "--field", "Q", "--ideal", "x - 1"}).code == 2); // missing subgroup
    Run r = run({"sigma", "--field", "Q", "--vars", "x,y", "--ideal", "z - 1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("'z'") != std::string::npos);
}

TEST_CASE("exit code 3 on resource caps") {
    Run r = run({"betti", "--field", "Q", "--vars", "x,y", "--ideal", "x - 1", "--subgroup",
                 "m:100", "--max-cosets", "100"});
    CHECK(r.code == 3);
    CHECK(r.err.find("10000") != std::string::npos);
}

TEST_CASE("help is exit 0 and documents the conventions") {
    Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3,0;-2,1") != std::string::npos);
    CHECK(r.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical without timing") {
    std::vector<std::vector<std::string>> cases = {
        {"betti", "--field", "F2", "--vars", "x,y", "--ideal", "y - x^2 + x - 1", "--subgroup",
         "m:2", "--format", "json", "--no-timing"},
        {"stabilize", "--field", "Q", "--vars", "x,y", "--ideal", "x - 1", "--limit", "5",
         "--format", "json", "--no-timing"},
        {"sigma", "--field", "F5", "--vars", "x,y", "--ideal", "x + y + 1 + x*y", "--format",
         "json"},
        {"m0", "--d", "3", "--format", "csv"},
    };
    for (const auto& args : cases) {
        Run a = run(args);
        Run b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}
