#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rcwall/scenario.hpp"

namespace rcwall {

class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(std::string source, int line, const std::string& what);
  const std::string& source() const noexcept { return source_; }
  /// 1-based, 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  std::string source_;
  int line_;
};

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

/// Flat `key = value` text. `#` starts a comment; blank lines are ignored.
/// Keys: name, height_m, span_m, thickness_m, rebar_diameter_mm,
/// rebar_spacing_m, cover_m, exposure (one_side | two_sides), n_ult_tf,
/// m_ult_tfm, load_ratio, strip_width_m, fck_mpa, fyk_mpa. Missing keys keep
/// their defaults. Unknown or repeated keys are errors. The result is
/// validated, so invariant violations surface as InvalidScenario.
WallScenario parse_scenario(std::string_view text, const std::string& source = "<string>");
WallScenario parse_scenario_file(const std::filesystem::path& path);

/// Writes every key, in the order listed above.
std::string serialize_scenario(const WallScenario& s);

}  // namespace rcwall
