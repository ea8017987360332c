#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "fixtures.hpp"
#include "pcx/errors.hpp"
#include "pcx/scenario.hpp"

using namespace pcx;
namespace fs = std::filesystem;

namespace {

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return "(no error)";
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return Json::parse(in);
}

std::string write_temp(const std::string& stem, const Json& doc) {
    const fs::path dir = fs::temp_directory_path() / "pcx_scenario_tests";
    fs::create_directories(dir);
    const fs::path file = dir / (stem + ".json");
    std::ofstream out(file);
    out << doc.dump(2);
    return file.string();
}

} // namespace

TEST_CASE("every builtin scenario loads and passes its checks") {
    const auto names = list_scenarios();
    REQUIRE(names.size() == 6);
    for (const auto& name : names) {
        const Scenario s = load_scenario(find_scenario(name));
        CHECK(s.name == name);
        const ScenarioReport rep = run_scenario(s);
        for (const auto& c : rep.checks)
            CHECK_MESSAGE(c.passed, name, "/", c.name, ": ", c.detail);
        CHECK(rep.all_passed);
    }
}

TEST_CASE("scenario files resolve by name, file name, and path") {
    const std::string by_name = find_scenario("euler_so3");
    const std::string by_file = find_scenario("euler_so3.json");
    CHECK(by_name == by_file);
    CHECK(find_scenario(by_name) == by_name);
    CHECK(load_scenario(by_name).name == "euler_so3");
    CHECK(code_of([] { find_scenario("no_such_scenario"); }) == "io_error");
    CHECK(code_of([] { load_scenario("/no/such/file.json"); }) == "io_error");
}

TEST_CASE("malformed scenario files are rejected with the offending item named") {
    const std::string base = find_scenario("clebsch_kirchhoff");

    SUBCASE("unparseable text") {
        const auto path = write_temp("broken_syntax", Json());
        std::ofstream(path) << "{ not json";
        CHECK(code_of([&] { load_scenario(path); }) == "bad_scenario");
    }

    SUBCASE("wrong schema version") {
        Json doc = read_json(base);
        doc["schema"] = 2;
        CHECK(code_of([&] { load_scenario(write_temp("broken_schema", doc)); }) ==
              "bad_scenario");
    }

    SUBCASE("structure matrix must be antisymmetric") {
        Json doc = read_json(base);
        doc["structure"]["data"][0][4] = "p3";
        CHECK(code_of([&] { load_scenario(write_temp("broken_antisym", doc)); }) ==
              "bad_scenario");
    }

    SUBCASE("integral that the flow does not conserve") {
        Json doc = read_json(base);
        doc["integrals"][2]["poly"] = "3*m1^2 + m2^2 + 1/2*m3^2 - p1^2 - 3*p2^2 + 6*p3^2";
        const auto path = write_temp("broken_integral", doc);
        CHECK(code_of([&] { load_scenario(path); }) == "bad_scenario");
        CHECK_THROWS_WITH_AS(load_scenario(path), doctest::Contains("I"), Error);
    }

    SUBCASE("unknown check type") {
        Json doc = read_json(base);
        doc["checks"].push_back({{"type", "frobnicate"}});
        CHECK(code_of([&] { load_scenario(write_temp("broken_check", doc)); }) ==
              "bad_scenario");
    }

    SUBCASE("singular transformation") {
        Json doc = read_json(find_scenario("euler_so3"));
        doc["transforms"][0]["matrix"][2][2] = "0";
        CHECK(code_of([&] { load_scenario(write_temp("broken_transform", doc)); }) ==
              "bad_scenario");
    }
}

TEST_CASE("a flipped sign in frozen data fails the run with the check named") {
    Json doc = read_json(find_scenario("euler_so3"));
    doc["expected"]["poissonoid:inertia_rescale"]["pulled_structure"][0][1] = "1/9*m3";
    doc["expected"]["poissonoid:inertia_rescale"]["pulled_structure"][1][0] = "-1/9*m3";
    const Scenario s = load_scenario(write_temp("flipped_sign", doc));
    const ScenarioReport rep = run_scenario(s);
    CHECK_FALSE(rep.all_passed);
    bool found = false;
    for (const auto& c : rep.checks) {
        if (c.name == "poissonoid:inertia_rescale") {
            found = true;
            CHECK_FALSE(c.passed);
            CHECK(c.detail.find("pulled_structure") != std::string::npos);
        } else {
            CHECK(c.passed);
        }
    }
    CHECK(found);

    const Json out = scenario_report_to_json(rep);
    CHECK(out.at("passed") == false);
    CHECK(out.at("scenario") == "euler_so3");
    CHECK(out.at("checks").size() == rep.checks.size());
}

TEST_CASE("environment override redirects the scenario directory") {
    Json doc = read_json(find_scenario("euler_so3"));
    doc["name"] = "relocated";
    const std::string path = write_temp("relocated", doc);
    const std::string dir = fs::path(path).parent_path().string();

    setenv("PCX_SCENARIO_DIR", dir.c_str(), 1);
    CHECK(scenario_dir() == dir);
    const auto names = list_scenarios();
    CHECK(std::find(names.begin(), names.end(), "relocated") != names.end());
    CHECK(load_scenario(find_scenario("relocated")).name == "relocated");
    unsetenv("PCX_SCENARIO_DIR");

    CHECK(scenario_dir() != dir);
}

TEST_CASE("scenario accessors reject unknown names") {
    const Scenario s = load_scenario(find_scenario("harmonic_oscillator_2d"));
    CHECK(s.transform("mixing").matrix(0, 2) == Rational(2));
    CHECK(s.named_poly("H") == s.hamiltonian);
    CHECK(s.integral("W1") == s.named_poly("W1"));
    CHECK(s.form("E1")(0, 1) == Rational(1));
    CHECK(code_of([&] { s.transform("nope"); }) == "bad_scenario");
    CHECK(code_of([&] { s.integral("nope"); }) == "bad_scenario");
    CHECK(code_of([&] { s.form("nope"); }) == "bad_scenario");
    CHECK(code_of([&] { s.param("nope"); }) == "bad_scenario");
}
