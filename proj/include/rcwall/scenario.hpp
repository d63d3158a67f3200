#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcwall {

enum class Exposure { OneSide, TwoSides };

std::string_view to_string(Exposure e);

/// Thrown when a scenario violates one of its geometric or loading invariants.
/// `field()` names the offending field using the scenario file key.
class InvalidScenario : public std::invalid_argument {
 public:
  InvalidScenario(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// One load-bearing wall: geometry, reinforcement, fire exposure and the
/// cold-design resultants for the full span. Lengths in metres except the bar
/// diameter (mm); loads in tonne-force as they appear in design tables.
struct WallScenario {
  std::string name;
  double height = 2.86;
  double span = 4.70;
  double thickness = 0.20;
  double rebar_diameter_mm = 10.0;
  double rebar_spacing = 0.20;
  /// Clear cover, face to bar surface.
  double cover = 0.024;
  Exposure exposure = Exposure::OneSide;
  double axial_load_tf = 0.0;
  double moment_tfm = 0.0;
  double load_ratio = 1.0;
  double strip_width = 0.20;
  double concrete_strength_char = 25.0e6;
  double steel_yield_char = 400.0e6;

  double rebar_diameter() const { return rebar_diameter_mm * 1.0e-3; }
  /// Distance from either face to the bar axis.
  double bar_axis_depth() const { return cover + 0.5 * rebar_diameter(); }
  double bar_area() const;

  bool operator==(const WallScenario&) const = default;
};

/// Throws InvalidScenario on the first violated invariant.
void validate(const WallScenario& s);

/// Axial force and moment carried by one analysis strip. Compression positive.
struct StripResultants {
  double axial_load = 0.0;  // N
  double moment = 0.0;      // N m
};

double tonne_to_newton(double tonne_force);
double tonne_metre_to_newton_metre(double tonne_force_metre);

/// Shares the span resultants out over one strip and scales by the load ratio.
StripResultants strip_resultants(const WallScenario& s);

/// The four reference walls: Mu 20, MuF 20, Mu (12)20, MuCH (12)20.
std::vector<WallScenario> builtin_scenarios();

/// Looks up a built-in by name, ignoring whitespace and case ("mu (12) 20"
/// finds "Mu (12)20"). Returns nullptr when nothing matches.
const WallScenario* find_builtin(std::string_view name);

}  // namespace rcwall
