#include "arrpoin/cli.hpp"
#include "arrpoin/spec_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace arrpoin;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("arrpoin_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::vector<std::string> row_of(const json& grid, std::size_t p)
{
    return grid.at(p).get<std::vector<std::string>>();
}

} // namespace

TEST_CASE("parse_spec")
{
    const auto braid = parse_spec(R"({"ell":3,"forms":[[1,-1,0],[0,1,-1],[1,0,-1]]})");
    CHECK(braid.arrangement.ell() == 3);
    CHECK(braid.arrangement.size() == 3);
    CHECK_FALSE(braid.exponents);

    const auto line = parse_spec(R"({"ell":1,"forms":[[1]],"name":"line"})");
    CHECK(line.arrangement.size() == 1);
    CHECK(line.name == "line");

    const auto frac = parse_spec(R"({"ell":2,"forms":[["2/3","-1"],[0,1]],"exponents":[1,1]})");
    CHECK(frac.arrangement.form(0).coefficients == std::vector<Rational>{1, make_rational(-3, 2)});
    REQUIRE(frac.exponents);
    CHECK(frac.exponents->exponents == std::vector<unsigned long>{1, 1});

    try {
        parse_spec(R"({"ell":2,"forms":[[1,0],["1/2",0]]})");
        FAIL("expected ProportionalPair");
    } catch (const InputError& e) {
        CHECK(e.code() == "ProportionalPair");
        CHECK(std::string(e.what()) == "forms 1 and 2 are proportional");
    }
    CHECK_THROWS_AS(parse_spec(R"({"ell":2,"forms":[[0.5,1]]})"), InputError);
    CHECK_THROWS_AS(parse_spec(R"({"ell":2,"forms":[[1,1]],"exponents":[1]})"), InputError);
    CHECK_THROWS_AS(parse_spec(R"({"ell":2,"forms":[[1,1,1]]})"), std::exception);
    CHECK_THROWS_AS(parse_spec(R"({"ell":2)"), InputError);
    CHECK_THROWS_AS(parse_spec(R"({"forms":[[1]]})"), InputError);
    CHECK_THROWS_AS(parse_spec(R"({"ell":1,"forms":[["1/0"]]})"), InputError);
}

TEST_CASE("families")
{
    const auto b3 = family("braid", 3);
    CHECK(b3.arrangement.size() == 3);
    REQUIRE(b3.exponents);
    CHECK(b3.exponents->exponents == std::vector<unsigned long>{0, 1, 2});

    const auto b2 = family("braid", 2);
    REQUIRE(b2.arrangement.size() == 1);
    CHECK(b2.arrangement.form_polynomial(0).to_string() == "x1 - x2");

    const auto bool2 = family("boolean", 2);
    REQUIRE(bool2.arrangement.size() == 2);
    CHECK(bool2.arrangement.form_polynomial(0).to_string() == "x1");
    CHECK(bool2.arrangement.form_polynomial(1).to_string() == "x2");
    CHECK_FALSE(bool2.exponents);

    CHECK_THROWS_AS(family("coxeter", 3), InputError);
    CHECK_THROWS_AS(family("braid", 0), InputError);
    CHECK(family_names() == std::vector<std::string>{"braid", "boolean"});
    CHECK(parse_exponents("0, 1,2").exponents == std::vector<unsigned long>{0, 1, 2});
    CHECK_THROWS_AS(parse_exponents("0,x"), InputError);
}

TEST_CASE("series command")
{
    const auto r = run({"series", "--family", "braid", "--ell", "3", "--max-p", "4", "--max-q", "4", "--json"});
    REQUIRE(r.code == cli::Success);
    const auto doc = json::parse(r.out);
    const auto& grid = doc["grid"]["rbar"];
    CHECK(row_of(grid, 0) == std::vector<std::string>{"1", "3", "5", "7", "9"});
    std::vector<std::string> column;
    for (std::size_t p = 0; p <= 4; ++p)
        column.push_back(grid[p][0].get<std::string>());
    CHECK(column == std::vector<std::string>{"1", "3", "6", "10", "15"});
    CHECK(doc["grid"]["exponent_check"]["match"] == true);
    CHECK(doc["meta"]["command"] == "series");

    const auto text = run({"series", "--family", "braid", "--ell", "3", "--max-p", "4", "--max-q", "4"});
    REQUIRE(text.code == cli::Success);
    CHECK(text.out.find("\n  0   1   3   5   7   9\n") != std::string::npos);
    CHECK(text.out.find("exponents (0,1,2): match") != std::string::npos);

    const auto cum = run({"series", "--family", "boolean", "--ell", "1", "--max-p", "2", "--max-q", "2",
                          "--cumulative", "--json"});
    REQUIRE(cum.code == cli::Success);
    CHECK(row_of(json::parse(cum.out)["grid"]["cumulative"], 2) == std::vector<std::string>{"3", "4", "5"});

    const auto wrong = run({"series", "--family", "braid", "--ell", "3", "--max-p", "2", "--max-q", "2",
                            "--exponents", "1,1,1"});
    CHECK(wrong.code == cli::VerificationMismatch);
    CHECK(wrong.out.find("mismatch") != std::string::npos);
}

TEST_CASE("poincare and lattice commands")
{
    const auto r = run({"poincare", "--family", "boolean", "--ell", "2"});
    CHECK(r.code == cli::Success);
    CHECK(r.out == "1 + 2 t + 1 t^2\n");

    const auto j = run({"poincare", "--family", "braid", "--ell", "3", "--json"});
    const auto doc = json::parse(j.out);
    CHECK(doc["polynomial"]["text"] == "1 + 3 t + 2 t^2");
    CHECK(doc["polynomial"]["exponents"] == json::array({0, 1, 2}));

    const auto l = run({"lattice", "--family", "braid", "--ell", "3", "--json"});
    const auto flats = json::parse(l.out)["flats"];
    REQUIRE(flats.size() == 5);
    CHECK(flats[4]["moebius"] == "2");
    CHECK(flats[4]["forms"] == json::array({1, 2, 3}));
}

TEST_CASE("cseries, dims and verify commands")
{
    const auto c = run({"cseries", "--family", "braid", "--ell", "3", "--max-q", "3", "--json"});
    REQUIRE(c.code == cli::Success);
    CHECK(json::parse(c.out)["total"] == json::array({"1", "3", "5", "7"}));

    const auto d = run({"dims", "--family", "braid", "--ell", "3", "--max-p", "1", "--max-q", "2", "--json", "--by-flat"});
    REQUIRE(d.code == cli::Success);
    const auto grid = json::parse(d.out)["grid"];
    CHECK(grid["dim_R"][1][2] == "26");
    CHECK(grid["dim_Rbar"][1][2] == "8");
    CHECK(grid["by_flat"].size() == 6);

    const auto v = run({"verify", "--family", "braid", "--ell", "3", "--max-p", "2", "--max-q", "2"});
    CHECK(v.code == cli::Success);
    CHECK(v.out.find("verdict: pass") != std::string::npos);
    CHECK(v.err.empty());

    const auto vj = run({"verify", "--family", "boolean", "--ell", "2", "--max-p", "1", "--max-q", "1", "--json"});
    CHECK(vj.code == cli::Success);
    CHECK(json::parse(vj.out)["report"]["verdict"] == "pass");

    const auto bad = run({"verify", "--family", "braid", "--ell", "3", "--max-p", "1", "--max-q", "1",
                          "--exponents", "0,1,3"});
    CHECK(bad.code == cli::VerificationMismatch);
    CHECK(bad.out.find("verdict: fail") != std::string::npos);
}

TEST_CASE("decompose command")
{
    const auto r = run({"decompose", "--family", "braid", "--ell", "3", "--numerator", "x1 + 2*x2 - x3 + 3",
                        "--denominator", "(x1 - x3)*(x2 - x3)"});
    REQUIRE(r.code == cli::Success);
    CHECK(r.out.find("in cell (1,2)") != std::string::npos);
    CHECK(r.out.find("basis: 8 elements") != std::string::npos);

    const std::string basis = write_temp("basis.json", R"j([
        {"numerator": "x1", "denominator": "(x1 - x2)*(x1 - x3)"},
        {"numerator": "x1", "denominator": "(x1 - x2)*(x2 - x3)"},
        {"numerator": "x1", "denominator": "(x1 - x2)^2"},
        {"numerator": "x3", "denominator": "(x1 - x2)^2"},
        {"numerator": "x1", "denominator": "(x2 - x3)^2"},
        {"numerator": "x2", "denominator": "(x2 - x3)^2"},
        {"numerator": "x1", "denominator": "(x1 - x3)^2"},
        {"numerator": "x2", "denominator": "(x1 - x3)^2"}
    ])j");
    const auto j = run({"decompose", "--family", "braid", "--ell", "3", "--numerator", "x1 + 2*x2 - x3 + 3",
                        "--denominator", "(x1 - x3)*(x2 - x3)", "--basis-file", basis, "--json"});
    REQUIRE(j.code == cli::Success);
    std::vector<std::string> coords;
    const auto doc = json::parse(j.out);
    for (const auto& item : doc["report"]["coordinates"])
        coords.push_back(item["coefficient"].get<std::string>());
    CHECK(coords == std::vector<std::string>{"-2", "2", "0", "0", "0", "0", "0", "0"});

    const auto f = run({"decompose", "--family", "braid", "--ell", "3", "--numerator", "1",
                        "--denominator", "x1*x2"});
    CHECK(f.code == cli::InputFailure);
    CHECK(f.err.rfind("error: FactorOverDelta:", 0) == 0);
    CHECK(f.out.empty());
}

TEST_CASE("file input")
{
    const std::string path = write_temp("braid.json", R"({"name":"b3","ell":3,"forms":[[1,-1,0],[0,1,-1],[1,0,-1]],"exponents":[0,1,2]})");
    const auto r = run({"verify", "--file", path, "--max-p", "1", "--max-q", "1"});
    CHECK(r.code == cli::Success);
    CHECK(r.out.rfind("verify: b3,", 0) == 0);
    CHECK(r.out.find("exponents (0,1,2): match") != std::string::npos);
}

TEST_CASE("error paths")
{
    const auto check_error = [](const Result& r, int code, const std::string& tag) {
        CAPTURE(r.err);
        CHECK(r.code == code);
        CHECK(r.out.empty());
        CHECK(r.err.rfind("error: " + tag + ":", 0) == 0);
    };
    check_error(run({"series"}), cli::InputFailure, "MissingArrangement");
    check_error(run({"series", "--family", "nope", "--ell", "2"}), cli::InputFailure, "UnknownFamily");
    check_error(run({"series", "--family", "braid", "--ell", "0"}), cli::InputFailure, "InvalidEll");
    check_error(run({"series", "--file", "/nonexistent/a.json"}), cli::InputFailure, "FileNotFound");
    check_error(run({"frobnicate"}), cli::InputFailure, "Usage");
    check_error(run({}), cli::InputFailure, "Usage");

    const std::string prop = write_temp("prop.json", R"({"ell":2,"forms":[[1,0],["1/2",0]]})");
    check_error(run({"lattice", "--file", prop}), cli::InputFailure, "ProportionalPair");
    const std::string flt = write_temp("float.json", R"({"ell":2,"forms":[[1.5,0]]})");
    check_error(run({"lattice", "--file", flt}), cli::InputFailure, "MalformedSpec");
    const std::string zero = write_temp("zero.json", R"({"ell":2,"forms":[[1,0],[0,0]]})");
    check_error(run({"lattice", "--file", zero}), cli::InputFailure, "ZeroForm");
    check_error(run({"series", "--family", "braid", "--ell", "3", "--exponents", "0,1"}), cli::InputFailure,
                "ExponentsLength");
    check_error(run({"decompose", "--family", "braid", "--ell", "3", "--numerator", "x4"}), cli::InputFailure,
                "ExpressionError");
}

TEST_CASE("byte-stable output")
{
    const std::vector<std::vector<std::string>> commands{
        {"lattice", "--family", "braid", "--ell", "4"},
        {"series", "--family", "braid", "--ell", "3", "--cumulative", "--json"},
        {"cseries", "--family", "boolean", "--ell", "3"},
        {"dims", "--family", "braid", "--ell", "3", "--max-p", "1", "--max-q", "1", "--by-flat"},
        {"family-list", "--json"},
    };
    for (const auto& c : commands) {
        const auto a = run(c);
        const auto b = run(c);
        CHECK(a.code == cli::Success);
        CHECK(a.out == b.out);
    }
    const auto t1 = run({"series", "--family", "braid", "--ell", "4", "--threads", "1"});
    const auto t4 = run({"series", "--family", "braid", "--ell", "4", "--threads", "4"});
    CHECK(t1.out == t4.out);
}
