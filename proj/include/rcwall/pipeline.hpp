#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rcwall/design_rules.hpp"
#include "rcwall/fire.hpp"
#include "rcwall/materials.hpp"
#include "rcwall/scenario.hpp"
#include "rcwall/structural.hpp"
#include "rcwall/thermal.hpp"

namespace rcwall {

enum ExitCode : int {
  exit_success = 0,
  exit_usage = 1,
  exit_solver_error = 2,
  exit_no_failure = 3,
  /// `check`: at least one applicable prescriptive check failed.
  exit_check_failed = 4,
};

/// Model choices that are not part of the wall description.
struct ModelOptions {
  ExposureConfig boundary{};
  Aggregate aggregate = Aggregate::Siliceous;
  ConductivityLimit conductivity = ConductivityLimit::Upper;
  MomentSense moment_sense = MomentSense::CompressesUnexposedFace;
};

struct RunConfig {
  /// Built-in name or path to a scenario file.
  std::string scenario;
  double dt = 12.0;
  double t_end = 86400.0;
  std::size_t n_through = 40;
  std::size_t n_width = 4;
  std::optional<Exposure> exposure;
  /// Overrides the scenario load ratio for `run`.
  std::optional<double> load_ratio;
  std::vector<double> ratios{1.0, 0.7, 0.5, 0.3};
  std::filesystem::path out_dir = "out";
  bool dump_field = false;
  ModelOptions model{};
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws UsageError on bad settings (non-positive steps, ratios outside (0, 1], ...).
void validate(const RunConfig& cfg, bool sweeping);

/// Built-in lookup first, then a scenario file; overrides applied and validated.
WallScenario resolve_scenario(const RunConfig& cfg);

ThermalSettings thermal_settings(const RunConfig& cfg);
StructuralSettings structural_settings(const RunConfig& cfg);

TemperatureHistory thermal_analysis(const WallScenario& s, const RunConfig& cfg);

struct Analysis {
  WallScenario scenario;
  TemperatureHistory history;
  FireResistanceResult result;
};

Analysis analyse(const WallScenario& s, const RunConfig& cfg);

enum class SweepStatus { Failed, NoFailure, Error };
std::string_view to_string(SweepStatus s);

struct SweepRow {
  double ratio = 0.0;
  SweepStatus status = SweepStatus::Error;
  std::optional<double> fire_resistance;  // s
  std::optional<FailureMode> failure_mode;
  double horizon = 0.0;
  double peak_midheight_horizontal = 0.0;
  double final_top_vertical = 0.0;
  std::string message;
  /// Rf when found, else the horizon, which Rf is known to exceed.
  double rf_lower_bound() const { return fire_resistance ? *fire_resistance : horizon; }
};

/// One thermal solve shared by all ratios, then one structural analysis per
/// ratio, run concurrently. Rows come back sorted by descending ratio.
std::vector<SweepRow> run_sweep(const WallScenario& s, const RunConfig& cfg,
                                std::vector<Analysis>* analyses = nullptr);

std::string summary_text(const Analysis& a, const RunConfig& cfg);
std::string temperatures_csv(const TemperatureHistory& h);
/// Nodes 3, 11 and 21, horizontal and vertical.
std::string displacements_csv(const FireResistanceResult& r);
std::string sweep_csv(const WallScenario& s, const std::vector<SweepRow>& rows);
std::string compliance_csv(const ComplianceReport& rep);

/// Writes next to the target and renames over it.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Writes summary.txt, temperatures.csv, displacements.csv (and field.csv
/// when asked) into `dir`.
void write_run_outputs(const std::filesystem::path& dir, const Analysis& a, const RunConfig& cfg);

int cmd_run(const RunConfig& cfg, std::ostream& log);
int cmd_sweep(const RunConfig& cfg, std::ostream& log);
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_list_scenarios(std::ostream& out, bool full);

}  // namespace rcwall
