#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcwall/scenario.hpp"

namespace rcwall {

enum class WallRole {
  Bearing,
  Separating,
  UnreinforcedPanel,
  ReinforcedLoadBearing,
  ReinforcedNonLoadBearing,
};

std::string_view to_string(WallRole r);

/// Prescriptive firewall degree, in ascending order.
enum class FireDegree { HalfHour, OneHour, OneHourThirty, TwoHours, ThreeHours, FourHours };

std::string_view to_string(FireDegree d);
double rating_minutes(FireDegree d);

/// Highest degree whose tabulated depth is met (floor lookup). Empty below the
/// smallest tabulated depth. Only Bearing and Separating have a table.
std::optional<FireDegree> firewall_degree(double depth_cm, WallRole role);

/// Required depth in cm for a degree, as tabulated.
double required_depth_cm(FireDegree d, WallRole role);

/// Maximum height of a cellular-concrete firewall; linear between the listed
/// thicknesses 15, 20 and 25 cm.
double cellular_height_limit(double thickness_cm);

enum class CheckOutcome { Pass, Fail, NotApplicable };
std::string_view to_string(CheckOutcome c);

/// Threshold in mm for the roles that have one, empty otherwise.
std::optional<double> min_thickness_mm(WallRole role);
CheckOutcome min_thickness_check(double thickness_mm, WallRole role);

inline constexpr double max_slenderness = 50.0;

struct SlendernessCheck {
  double slenderness = 0.0;
  bool pass = false;
};

/// Effective length H over the radius of gyration of the gross section, e / sqrt(12).
SlendernessCheck slenderness_check(const WallScenario& s);

inline constexpr double max_segment_length = 3.5;
inline constexpr double min_segment_length = 1.5;

struct SpanReduction {
  double reduction_factor = 1.0;  // K_r = 3.5 / L above 3.5 m
  double reduced_span = 0.0;      // K_r L, which is 3.5 m whenever the rule applies
  int columns_to_add = 0;
  double segment_length = 0.0;    // L / (columns + 1)
};

SpanReduction span_reduction(double span);

struct ComplianceItem {
  std::string check;
  CheckOutcome outcome = CheckOutcome::NotApplicable;
  std::string detail;
};

struct ComplianceReport {
  std::string scenario;
  std::vector<ComplianceItem> items;
  std::optional<FireDegree> bearing_degree;
  std::optional<FireDegree> separating_degree;
  SpanReduction span;
  double slenderness = 0.0;

  /// No applicable check failed.
  bool all_pass() const;
};

/// Every prescriptive check once, in a fixed order. The wall is treated as a
/// reinforced load-bearing wall for the minimum thickness.
ComplianceReport check_compliance(const WallScenario& s);

}  // namespace rcwall
