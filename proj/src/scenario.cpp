#include "rcwall/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "rcwall/units.hpp"

namespace rcwall {

std::string_view to_string(Exposure e) {
  return e == Exposure::OneSide ? "one_side" : "two_sides";
}

double WallScenario::bar_area() const {
  const double d = rebar_diameter();
  return 0.25 * std::numbers::pi * d * d;
}

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw InvalidScenario(field, what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const WallScenario& s) {
  require(finite_positive(s.height), "height_m", "must be positive");
  require(finite_positive(s.span), "span_m", "must be positive");
  require(finite_positive(s.thickness), "thickness_m", "must be positive");
  require(finite_positive(s.strip_width), "strip_width_m", "must be positive");
  require(s.strip_width <= s.span, "strip_width_m", "must not exceed the span");
  require(finite_positive(s.rebar_diameter_mm), "rebar_diameter_mm", "must be positive");
  require(finite_positive(s.rebar_spacing), "rebar_spacing_m", "must be positive");
  require(std::isfinite(s.cover) && s.cover >= 0.0, "cover_m", "must be non-negative");
  require(s.bar_axis_depth() < 0.5 * s.thickness, "cover_m",
          "cover + bar radius must stay inside half the thickness");
  require(std::isfinite(s.axial_load_tf) && s.axial_load_tf >= 0.0, "n_ult_tf",
          "must be non-negative (compression)");
  require(std::isfinite(s.moment_tfm), "m_ult_tfm", "must be finite");
  require(std::isfinite(s.load_ratio) && s.load_ratio > 0.0 && s.load_ratio <= 1.0,
          "load_ratio", "must lie in (0, 1]");
  require(finite_positive(s.concrete_strength_char), "fck_mpa", "must be positive");
  require(finite_positive(s.steel_yield_char), "fyk_mpa", "must be positive");
}

double tonne_to_newton(double tonne_force) {
  return tonne_force * units::newton_per_tonne_force;
}

double tonne_metre_to_newton_metre(double tonne_force_metre) {
  return tonne_force_metre * units::newton_per_tonne_force;
}

StripResultants strip_resultants(const WallScenario& s) {
  if (!(s.strip_width <= s.span)) {
    throw InvalidScenario("strip_width_m", "must not exceed the span");
  }
  const double share = s.strip_width / s.span * s.load_ratio;
  return {tonne_to_newton(s.axial_load_tf) * share,
          tonne_metre_to_newton_metre(s.moment_tfm) * share};
}

std::vector<WallScenario> builtin_scenarios() {
  WallScenario mu20;
  mu20.name = "Mu 20";
  mu20.span = 4.70;
  mu20.rebar_diameter_mm = 10.0;
  mu20.cover = 0.024;
  mu20.exposure = Exposure::OneSide;
  mu20.axial_load_tf = 41.2;
  mu20.moment_tfm = 2.26;

  WallScenario muf20 = mu20;
  muf20.name = "MuF 20";
  muf20.exposure = Exposure::TwoSides;

  WallScenario mu12 = mu20;
  mu12.name = "Mu (12)20";
  mu12.span = 3.50;
  mu12.rebar_diameter_mm = 12.0;
  mu12.cover = 0.030;
  mu12.axial_load_tf = 26.32;
  mu12.moment_tfm = 0.14;

  WallScenario much12 = mu12;
  much12.name = "MuCH (12)20";
  much12.axial_load_tf = mu20.axial_load_tf;
  much12.moment_tfm = mu20.moment_tfm;

  return {mu20, muf20, mu12, much12};
}

namespace {

std::string squash(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

}  // namespace

const WallScenario* find_builtin(std::string_view name) {
  static const std::vector<WallScenario> all = builtin_scenarios();
  const std::string key = squash(name);
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const WallScenario& s) { return squash(s.name) == key; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace rcwall
