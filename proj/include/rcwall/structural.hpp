#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "rcwall/scenario.hpp"
#include "rcwall/section.hpp"
#include "rcwall/thermal.hpp"

namespace rcwall {

/// Wall strip as a column of 10 three-node beam elements over 21 nodes, node 1
/// at the base, node 11 at mid-height and node 21 at the top. End nodes of
/// each element carry (vertical u, horizontal w, rotation); the middle node
/// carries u only, so axial displacement is quadratic and lateral displacement
/// cubic over each element. Base pinned, top guided vertically, rotations free.
struct BeamModel {
  static constexpr int node_count = 21;
  static constexpr int element_count = 10;

  double height = 0.0;
  std::array<double, node_count> node_height{};
  /// Equation numbers per node, -1 when the DOF is absent or restrained.
  std::array<int, node_count> eq_u{};
  std::array<int, node_count> eq_w{};
  std::array<int, node_count> eq_rot{};
  int equation_count = 0;

  /// Nodes (1-based) of element e (0-based): 2e+1, 2e+2, 2e+3.
  static std::array<int, 3> element_nodes(int e) { return {2 * e + 1, 2 * e + 2, 2 * e + 3}; }
  double element_length() const { return height / element_count; }
};

BeamModel build_beam_model(double height);

/// Nodal displacements. Horizontal w is positive towards face 1 (the fire
/// side for one-sided exposure); vertical u is positive upwards.
struct SolutionState {
  std::vector<double> dofs;
  bool converged = false;
  int iterations = 0;

  static SolutionState zero(const BeamModel& model);
};

double horizontal_displacement(const BeamModel& model, const SolutionState& s, int node);
double vertical_displacement(const BeamModel& model, const SolutionState& s, int node);
double rotation(const BeamModel& model, const SolutionState& s, int node);

/// Which face the applied end moment compresses.
enum class MomentSense { CompressesExposedFace, CompressesUnexposedFace };

struct NodalLoads {
  double top_axial = 0.0;  // compression positive, N
  double end_moment = 0.0; // N m, equal at both ends (single curvature)
  MomentSense sense = MomentSense::CompressesUnexposedFace;
};

NodalLoads nodal_loads(const StripResultants& r, MomentSense sense);

struct StaticSettings {
  int max_iterations = 40;
  /// Relative residual tolerance on forces (and moments over the thickness).
  double tolerance = 1.0e-7;
  /// Lateral displacement at which an iteration is abandoned as runaway.
  double divergence_displacement = 1.0;
};

/// Newton equilibrium on the deformed geometry (moderate rotations) from
/// `initial`. Returns the last iterate with converged = false on failure.
SolutionState solve_static(const BeamModel& model, const HeatedSection& section,
                           const NodalLoads& loads, const SolutionState& initial,
                           const StaticSettings& settings = {});

/// Internal force vector and residual norm, exposed for tests.
struct EquilibriumCheck {
  std::vector<double> residual;
  double relative_norm = 0.0;
};
EquilibriumCheck check_equilibrium(const BeamModel& model, const HeatedSection& section,
                                   const NodalLoads& loads, const SolutionState& state,
                                   double thickness);

enum class FailureMode { Nonconvergence, RunawayDeflection };
std::string_view to_string(FailureMode m);

struct FireResistanceResult {
  /// Empty when the temperature history ended before failure.
  std::optional<double> fire_resistance;
  std::optional<FailureMode> failure_mode;
  double horizon = 0.0;
  std::vector<double> times;
  /// [node - 1][step]
  std::vector<std::vector<double>> horizontal;
  std::vector<std::vector<double>> vertical;
  StripResultants loads;

  bool failed() const { return fire_resistance.has_value(); }
  /// Mid-height horizontal displacement with the largest magnitude.
  double peak_midheight_horizontal() const;
  double final_top_vertical() const;
};

struct StructuralSettings {
  StaticSettings statics;
  int load_increments = 10;
  /// Thermal substeps are halved down to this length before failure is declared.
  double min_substep = 1.0;
  double runaway_rate = 1.0e-3;  // m/s at mid-height
  int runaway_steps = 3;
  MomentSense moment_sense = MomentSense::CompressesUnexposedFace;
  ConcreteLaw concrete{};
  SteelLaw steel{};
};

class NoColdEquilibrium : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the strip loads at ambient temperature, then marches through the
/// thermal history re-solving equilibrium until it can no longer be found.
/// Concrete and steel strengths are taken from the scenario.
FireResistanceResult run_to_failure(const WallScenario& s, const TemperatureHistory& history,
                                    const StructuralSettings& settings = {});

enum class Component { Horizontal, Vertical };

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
};

/// Node is 1-based, 1..21.
TimeSeries displacement_history(const FireResistanceResult& r, int node, Component c);

}  // namespace rcwall
