#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>

#include "rcwall/config_io.hpp"

using namespace rcwall;

namespace {

const char* mu20_text = R"(# Mu 20, one-sided
name = Mu 20
height_m = 2.86
span_m = 4.70
thickness_m = 0.20
rebar_diameter_mm = 10
rebar_spacing_m = 0.20
cover_m = 0.024
exposure = one_side
n_ult_tf = 41.2
m_ult_tfm = 2.26
load_ratio = 1.0
)";

int error_line(const std::string& text) {
  try {
    parse_scenario(text, "t");
  } catch (const ScenarioParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("file with the reference values equals the built-in") {
  CHECK(parse_scenario(mu20_text) == *find_builtin("Mu 20"));
}

TEST_CASE("round trip") {
  for (const auto& s : builtin_scenarios()) CHECK(parse_scenario(serialize_scenario(s)) == s);
  WallScenario odd = *find_builtin("Mu 20");
  odd.name = "odd wall";
  odd.height = 0.1 + 0.2;
  odd.cover = 1.0 / 37.0;
  odd.load_ratio = 2.0 / 3.0;
  odd.concrete_strength_char = 27.3e6;
  odd.steel_yield_char = 457.5e6;
  odd.exposure = Exposure::TwoSides;
  CHECK(parse_scenario(serialize_scenario(odd)) == odd);
}

TEST_CASE("shortest round-trip numbers") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(12) == "12");
  CHECK(format_number(1e-300) == "1e-300");
  double v = 0.1 + 0.2;
  CHECK(std::stod(format_number(v)) == v);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(error_line("name = a\nbogus = 3\n") == 2);
  CHECK(error_line("name = a\n\n# c\nspan_m = x\n") == 4);
  CHECK(error_line("span_m 4\n") == 1);
  CHECK(error_line("span_m = 4\nspan_m = 5\n") == 2);
  CHECK(error_line("exposure = sideways\n") == 1);
  CHECK(error_line("span_m =\n") == 1);
  CHECK(error_line("span_m = 4.7 m\n") == 1);
}

TEST_CASE("invariant violations name the field") {
  try {
    parse_scenario(std::string(mu20_text) + "fck_mpa = 25\n" + "fyk_mpa = 400\n" + "strip_width_m = 0.2\n" +
                   "# cover past mid-thickness\n");
  } catch (...) {
    FAIL("valid file rejected");
  }
  std::string bad = mu20_text;
  bad.replace(bad.find("cover_m = 0.024"), 15, "cover_m = 0.100");
  try {
    parse_scenario(bad);
    FAIL("cover beyond mid-thickness accepted");
  } catch (const InvalidScenario& e) {
    CHECK(e.field() == "cover_m");
  }
}

TEST_CASE("reading from disk") {
  auto path = std::filesystem::temp_directory_path() / "rcwall_test_scenario.txt";
  {
    std::ofstream out(path);
    out << mu20_text;
  }
  CHECK(parse_scenario_file(path) == *find_builtin("Mu 20"));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_scenario_file(path), ScenarioParseError);
}
