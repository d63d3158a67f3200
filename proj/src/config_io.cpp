#include "rcwall/config_io.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace rcwall {

ScenarioParseError::ScenarioParseError(std::string source, int line, const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         what),
      source_(std::move(source)),
      line_(line) {}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct Key {
  const char* name;
  std::function<void(WallScenario&, double)> set_number;
  std::function<double(const WallScenario&)> get_number;
};

const std::vector<Key>& numeric_keys() {
  static const std::vector<Key> keys = {
      {"height_m", [](WallScenario& s, double v) { s.height = v; }, [](const WallScenario& s) { return s.height; }},
      {"span_m", [](WallScenario& s, double v) { s.span = v; }, [](const WallScenario& s) { return s.span; }},
      {"thickness_m", [](WallScenario& s, double v) { s.thickness = v; }, [](const WallScenario& s) { return s.thickness; }},
      {"rebar_diameter_mm", [](WallScenario& s, double v) { s.rebar_diameter_mm = v; }, [](const WallScenario& s) { return s.rebar_diameter_mm; }},
      {"rebar_spacing_m", [](WallScenario& s, double v) { s.rebar_spacing = v; }, [](const WallScenario& s) { return s.rebar_spacing; }},
      {"cover_m", [](WallScenario& s, double v) { s.cover = v; }, [](const WallScenario& s) { return s.cover; }},
      {"n_ult_tf", [](WallScenario& s, double v) { s.axial_load_tf = v; }, [](const WallScenario& s) { return s.axial_load_tf; }},
      {"m_ult_tfm", [](WallScenario& s, double v) { s.moment_tfm = v; }, [](const WallScenario& s) { return s.moment_tfm; }},
      {"load_ratio", [](WallScenario& s, double v) { s.load_ratio = v; }, [](const WallScenario& s) { return s.load_ratio; }},
      {"strip_width_m", [](WallScenario& s, double v) { s.strip_width = v; }, [](const WallScenario& s) { return s.strip_width; }},
      // Strengths are stored in Pa, written in MPa.
      {"fck_mpa", [](WallScenario& s, double v) { s.concrete_strength_char = v * 1.0e6; }, [](const WallScenario& s) { return s.concrete_strength_char / 1.0e6; }},
      {"fyk_mpa", [](WallScenario& s, double v) { s.steel_yield_char = v * 1.0e6; }, [](const WallScenario& s) { return s.steel_yield_char / 1.0e6; }},
  };
  return keys;
}

double parse_double(std::string_view text, const std::string& source, int line, std::string_view key) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ScenarioParseError(source, line,
                             "value for '" + std::string(key) + "' is not a number: '" + std::string(text) + "'");
  return v;
}

}  // namespace

WallScenario parse_scenario(std::string_view text, const std::string& source) {
  WallScenario s;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ScenarioParseError(source, line_no, "expected 'key = value'");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ScenarioParseError(source, line_no, "missing key");
    if (value.empty())
      throw ScenarioParseError(source, line_no, "missing value for '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second)
      throw ScenarioParseError(source, line_no, "repeated key '" + std::string(key) + "'");

    if (key == "name") {
      s.name = std::string(value);
      continue;
    }
    if (key == "exposure") {
      if (value == "one_side")
        s.exposure = Exposure::OneSide;
      else if (value == "two_sides")
        s.exposure = Exposure::TwoSides;
      else
        throw ScenarioParseError(source, line_no,
                                 "exposure must be one_side or two_sides, got '" + std::string(value) + "'");
      continue;
    }
    bool known = false;
    for (const auto& k : numeric_keys()) {
      if (key == k.name) {
        k.set_number(s, parse_double(value, source, line_no, key));
        known = true;
        break;
      }
    }
    if (!known) throw ScenarioParseError(source, line_no, "unknown key '" + std::string(key) + "'");
  }
  validate(s);
  return s;
}

WallScenario parse_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioParseError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

std::string serialize_scenario(const WallScenario& s) {
  if (s.name.find_first_of("#\n") != std::string::npos)
    throw std::invalid_argument("scenario name cannot contain '#' or a newline");
  std::string out;
  out += "name = " + s.name + "\n";
  const auto& keys = numeric_keys();
  // File order: geometry, reinforcement, exposure, loads, materials.
  for (const auto& k : keys) {
    if (std::string_view(k.name) == "n_ult_tf") out += "exposure = " + std::string(to_string(s.exposure)) + "\n";
    out += std::string(k.name) + " = " + format_number(k.get_number(s)) + "\n";
  }
  return out;
}

}  // namespace rcwall
