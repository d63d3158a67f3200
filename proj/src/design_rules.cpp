#include "rcwall/design_rules.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rcwall {

namespace {

constexpr std::array<FireDegree, 6> degrees = {
    FireDegree::HalfHour,   FireDegree::OneHour,    FireDegree::OneHourThirty,
    FireDegree::TwoHours,   FireDegree::ThreeHours, FireDegree::FourHours,
};

// Depth in cm per degree, same order as `degrees`.
constexpr std::array<double, 6> bearing_depths = {10.0, 11.0, 12.0, 15.0, 20.0, 25.0};
constexpr std::array<double, 6> separating_depths = {6.0, 7.0, 9.0, 11.0, 15.0, 17.5};

const std::array<double, 6>& depth_table(WallRole role) {
  switch (role) {
    case WallRole::Bearing: return bearing_depths;
    case WallRole::Separating: return separating_depths;
    default: break;
  }
  throw std::invalid_argument("no firewall degree table for role " + std::string(to_string(role)));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(WallRole r) {
  switch (r) {
    case WallRole::Bearing: return "bearing";
    case WallRole::Separating: return "separating";
    case WallRole::UnreinforcedPanel: return "unreinforced_panel";
    case WallRole::ReinforcedLoadBearing: return "reinforced_load_bearing";
    case WallRole::ReinforcedNonLoadBearing: return "reinforced_non_load_bearing";
  }
  return "?";
}

std::string_view to_string(FireDegree d) {
  switch (d) {
    case FireDegree::HalfHour: return "1/2h";
    case FireDegree::OneHour: return "1h";
    case FireDegree::OneHourThirty: return "1h30";
    case FireDegree::TwoHours: return "2h";
    case FireDegree::ThreeHours: return "3h";
    case FireDegree::FourHours: return "4h";
  }
  return "?";
}

double rating_minutes(FireDegree d) {
  switch (d) {
    case FireDegree::HalfHour: return 30.0;
    case FireDegree::OneHour: return 60.0;
    case FireDegree::OneHourThirty: return 90.0;
    case FireDegree::TwoHours: return 120.0;
    case FireDegree::ThreeHours: return 180.0;
    case FireDegree::FourHours: return 240.0;
  }
  return 0.0;
}

std::optional<FireDegree> firewall_degree(double depth_cm, WallRole role) {
  if (!(depth_cm > 0.0)) throw std::invalid_argument("wall depth must be positive");
  const auto& table = depth_table(role);
  std::optional<FireDegree> best;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (depth_cm >= table[i]) best = degrees[i];
  return best;
}

double required_depth_cm(FireDegree d, WallRole role) {
  return depth_table(role)[static_cast<std::size_t>(d)];
}

double cellular_height_limit(double thickness_cm) {
  if (!(thickness_cm >= 15.0 && thickness_cm <= 25.0))
    throw std::out_of_range("cellular wall thickness " + fmt(thickness_cm) +
                            " cm outside [15, 25] cm");
  if (thickness_cm <= 20.0) return 17.0 + (thickness_cm - 15.0) * (22.0 - 17.0) / 5.0;
  return 22.0 + (thickness_cm - 20.0) * (28.0 - 22.0) / 5.0;
}

std::string_view to_string(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::optional<double> min_thickness_mm(WallRole role) {
  switch (role) {
    case WallRole::UnreinforcedPanel: return 200.0;
    case WallRole::ReinforcedLoadBearing: return 140.0;
    case WallRole::ReinforcedNonLoadBearing: return 120.0;
    default: return std::nullopt;
  }
}

CheckOutcome min_thickness_check(double thickness_mm, WallRole role) {
  if (!(thickness_mm > 0.0)) throw std::invalid_argument("thickness must be positive");
  auto t = min_thickness_mm(role);
  if (!t) return CheckOutcome::NotApplicable;
  return thickness_mm >= *t ? CheckOutcome::Pass : CheckOutcome::Fail;
}

SlendernessCheck slenderness_check(const WallScenario& s) {
  validate(s);
  double radius = s.thickness / std::sqrt(12.0);
  SlendernessCheck c;
  c.slenderness = s.height / radius;
  c.pass = c.slenderness <= max_slenderness;
  return c;
}

SpanReduction span_reduction(double span) {
  if (!(span > 0.0)) throw std::invalid_argument("span must be positive");
  SpanReduction r;
  if (span <= max_segment_length) {
    r.reduction_factor = 1.0;
    r.reduced_span = span;
    r.columns_to_add = 0;
    r.segment_length = span;
    return r;
  }
  r.reduction_factor = max_segment_length / span;
  r.reduced_span = r.reduction_factor * span;
  int segments = static_cast<int>(std::ceil(span / max_segment_length - 1e-12));
  r.columns_to_add = segments - 1;
  r.segment_length = span / segments;
  if (r.segment_length < min_segment_length || r.segment_length > max_segment_length + 1e-12)
    throw std::logic_error("segment length outside [1.5, 3.5] m");
  return r;
}

bool ComplianceReport::all_pass() const {
  for (const auto& i : items)
    if (i.outcome == CheckOutcome::Fail) return false;
  return true;
}

ComplianceReport check_compliance(const WallScenario& s) {
  validate(s);
  ComplianceReport rep;
  rep.scenario = s.name;
  double depth_cm = s.thickness * 100.0;

  rep.bearing_degree = firewall_degree(depth_cm, WallRole::Bearing);
  rep.separating_degree = firewall_degree(depth_cm, WallRole::Separating);
  auto degree_item = [&](const char* name, const std::optional<FireDegree>& d) {
    ComplianceItem it{name, d ? CheckOutcome::Pass : CheckOutcome::Fail,
                      d ? std::string(to_string(*d)) : std::string("none")};
    rep.items.push_back(it);
  };
  degree_item("firewall_degree_bearing", rep.bearing_degree);
  degree_item("firewall_degree_separating", rep.separating_degree);

  double thickness_mm = s.thickness * 1000.0;
  rep.items.push_back({"min_thickness", min_thickness_check(thickness_mm, WallRole::ReinforcedLoadBearing),
                       fmt(thickness_mm) + " mm vs " +
                           fmt(*min_thickness_mm(WallRole::ReinforcedLoadBearing)) + " mm"});

  auto sl = slenderness_check(s);
  rep.slenderness = sl.slenderness;
  rep.items.push_back({"slenderness", sl.pass ? CheckOutcome::Pass : CheckOutcome::Fail,
                       fmt(sl.slenderness) + " vs " + fmt(max_slenderness)});

  rep.span = span_reduction(s.span);
  // Advisory: a long span is reported with the columns it needs, not failed.
  rep.items.push_back({"span_rule", CheckOutcome::Pass,
                       std::to_string(rep.span.columns_to_add) + " column(s), segment " +
                           fmt(rep.span.segment_length) + " m"});
  return rep;
}

}  // namespace rcwall
