#include "rcwall/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "rcwall/config_io.hpp"

namespace rcwall {

namespace fs = std::filesystem;

void validate(const RunConfig& cfg, bool sweeping) {
  if (cfg.scenario.empty()) throw UsageError("no scenario given");
  if (!(cfg.dt > 0.0)) throw UsageError("dt must be positive");
  if (!(cfg.t_end > cfg.dt)) throw UsageError("t_end must exceed dt");
  if (cfg.n_through < min_cells_through)
    throw UsageError("mesh needs at least " + std::to_string(min_cells_through) +
                     " cells through the thickness");
  if (cfg.n_width < 1) throw UsageError("mesh needs at least one cell across the width");
  if (cfg.load_ratio && !(*cfg.load_ratio > 0.0 && *cfg.load_ratio <= 1.0))
    throw UsageError("load ratio must lie in (0, 1]");
  if (sweeping) {
    if (cfg.ratios.empty()) throw UsageError("sweep needs at least one ratio");
    for (double r : cfg.ratios)
      if (!(r > 0.0 && r <= 1.0)) throw UsageError("sweep ratio " + format_number(r) + " outside (0, 1]");
  }
  try {
    validate(cfg.model.boundary);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

WallScenario resolve_scenario(const RunConfig& cfg) {
  WallScenario s;
  if (const auto* b = find_builtin(cfg.scenario))
    s = *b;
  else if (fs::exists(cfg.scenario))
    s = parse_scenario_file(cfg.scenario);
  else
    throw UsageError("'" + cfg.scenario + "' is neither a built-in scenario nor a readable file");
  if (cfg.exposure) s.exposure = *cfg.exposure;
  if (cfg.load_ratio) s.load_ratio = *cfg.load_ratio;
  validate(s);
  return s;
}

ThermalSettings thermal_settings(const RunConfig& cfg) {
  ThermalSettings t;
  t.dt = cfg.dt;
  t.t_end = cfg.t_end;
  t.n_through = cfg.n_through;
  t.n_width = cfg.n_width;
  t.concrete.aggregate = cfg.model.aggregate;
  t.concrete.conductivity_limit = cfg.model.conductivity;
  return t;
}

StructuralSettings structural_settings(const RunConfig& cfg) {
  StructuralSettings st;
  st.moment_sense = cfg.model.moment_sense;
  st.concrete.aggregate = cfg.model.aggregate;
  st.concrete.conductivity_limit = cfg.model.conductivity;
  return st;
}

TemperatureHistory thermal_analysis(const WallScenario& s, const RunConfig& cfg) {
  return solve_thermal(s, Iso834{}, exposure_for(s, cfg.model.boundary), thermal_settings(cfg));
}

Analysis analyse(const WallScenario& s, const RunConfig& cfg) {
  auto h = thermal_analysis(s, cfg);
  auto r = run_to_failure(s, h, structural_settings(cfg));
  return Analysis{s, std::move(h), std::move(r)};
}

std::string_view to_string(SweepStatus s) {
  switch (s) {
    case SweepStatus::Failed: return "failed";
    case SweepStatus::NoFailure: return "no_failure_within_horizon";
    case SweepStatus::Error: return "error";
  }
  return "?";
}

std::vector<SweepRow> run_sweep(const WallScenario& s, const RunConfig& cfg,
                                std::vector<Analysis>* analyses) {
  std::vector<double> ratios = cfg.ratios;
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());

  // Temperatures do not depend on the load, so one history serves every ratio.
  const auto history = thermal_analysis(s, cfg);
  const auto settings = structural_settings(cfg);

  std::vector<std::future<FireResistanceResult>> jobs;
  for (double r : ratios) {
    WallScenario sr = s;
    sr.load_ratio = r;
    jobs.push_back(std::async(std::launch::async, [sr, &history, &settings] {
      return run_to_failure(sr, history, settings);
    }));
  }

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    SweepRow row;
    row.ratio = ratios[i];
    row.horizon = history.t_end();
    try {
      auto res = jobs[i].get();
      row.fire_resistance = res.fire_resistance;
      row.failure_mode = res.failure_mode;
      row.peak_midheight_horizontal = res.peak_midheight_horizontal();
      row.final_top_vertical = res.final_top_vertical();
      row.status = res.failed() ? SweepStatus::Failed : SweepStatus::NoFailure;
      if (analyses) {
        WallScenario sr = s;
        sr.load_ratio = row.ratio;
        analyses->push_back(Analysis{sr, history, std::move(res)});
      }
    } catch (const std::exception& e) {
      row.status = SweepStatus::Error;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : "none"; }

// Commas and newlines would break a CSV cell.
std::string csv_safe(std::string s) {
  for (auto& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

}  // namespace

std::string summary_text(const Analysis& a, const RunConfig& cfg) {
  const auto& r = a.result;
  const auto& s = a.scenario;
  std::ostringstream o;
  o << "scenario = " << s.name << "\n";
  o << "exposure = " << to_string(s.exposure) << "\n";
  o << "load_ratio = " << format_number(s.load_ratio) << "\n";
  o << "axial_load_N = " << format_number(r.loads.axial_load) << "\n";
  o << "moment_Nm = " << format_number(r.loads.moment) << "\n";
  o << "dt_s = " << format_number(cfg.dt) << "\n";
  o << "t_end_s = " << format_number(cfg.t_end) << "\n";
  o << "mesh_through = " << cfg.n_through << "\n";
  o << "mesh_width = " << cfg.n_width << "\n";
  o << "status = " << (r.failed() ? "failed" : "no_failure_within_horizon") << "\n";
  o << "fire_resistance_s = " << opt_number(r.fire_resistance) << "\n";
  o << "fire_resistance_min = "
    << opt_number(r.fire_resistance ? std::optional<double>(*r.fire_resistance / 60.0) : std::nullopt) << "\n";
  o << "failure_mode = " << (r.failure_mode ? std::string(to_string(*r.failure_mode)) : "none") << "\n";
  o << "horizon_s = " << format_number(a.history.t_end()) << "\n";
  o << "peak_midheight_horizontal_m = " << format_number(r.peak_midheight_horizontal()) << "\n";
  o << "final_top_vertical_m = " << format_number(r.final_top_vertical()) << "\n";
  return o.str();
}

std::string temperatures_csv(const TemperatureHistory& h) {
  std::ostringstream o;
  o << "time_s,face1_surface_C,face2_surface_C,mid_depth_C,rebar_face1_C,rebar_face2_C\n";
  for (const auto& f : h.fields()) {
    o << format_number(f.time);
    for (Probe p : {Probe::Face1Surface, Probe::Face2Surface, Probe::MidDepth, Probe::RebarFace1,
                    Probe::RebarFace2})
      o << ',' << format_number(probe_temperature(h.mesh(), f, p));
    o << '\n';
  }
  return o.str();
}

std::string displacements_csv(const FireResistanceResult& r) {
  constexpr int nodes[] = {3, 11, 21};
  std::ostringstream o;
  o << "time_s";
  for (int n : nodes) o << ",node" << n << "_horizontal_m,node" << n << "_vertical_m";
  o << '\n';
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    o << format_number(r.times[k]);
    for (int n : nodes)
      o << ',' << format_number(r.horizontal[n - 1][k]) << ',' << format_number(r.vertical[n - 1][k]);
    o << '\n';
  }
  return o.str();
}

std::string sweep_csv(const WallScenario& s, const std::vector<SweepRow>& rows) {
  std::ostringstream o;
  o << "scenario,ratio,status,fire_resistance_s,fire_resistance_min,failure_mode,horizon_s,"
       "peak_midheight_horizontal_m,final_top_vertical_m,message\n";
  for (const auto& r : rows) {
    o << csv_safe(s.name) << ',' << format_number(r.ratio) << ',' << to_string(r.status) << ','
      << opt_number(r.fire_resistance) << ','
      << opt_number(r.fire_resistance ? std::optional<double>(*r.fire_resistance / 60.0) : std::nullopt)
      << ',' << (r.failure_mode ? std::string(to_string(*r.failure_mode)) : "none") << ','
      << format_number(r.horizon) << ',' << format_number(r.peak_midheight_horizontal) << ','
      << format_number(r.final_top_vertical) << ',' << csv_safe(r.message) << '\n';
  }
  return o.str();
}

std::string compliance_csv(const ComplianceReport& rep) {
  std::ostringstream o;
  o << "check,outcome,detail\n";
  for (const auto& i : rep.items)
    o << i.check << ',' << to_string(i.outcome) << ',' << csv_safe(i.detail) << '\n';
  return o.str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_run_outputs(const fs::path& dir, const Analysis& a, const RunConfig& cfg) {
  write_file_atomic(dir / "summary.txt", summary_text(a, cfg));
  write_file_atomic(dir / "temperatures.csv", temperatures_csv(a.history));
  write_file_atomic(dir / "displacements.csv", displacements_csv(a.result));
  if (cfg.dump_field) {
    std::ostringstream o;
    write_history_table(o, a.history);
    write_file_atomic(dir / "field.csv", o.str());
  }
}

namespace {

// Maps exceptions to exit codes; input problems are usage errors, anything
// raised while solving is a solver error.
template <class F>
int guarded(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    log << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ScenarioParseError& e) {
    log << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidScenario& e) {
    log << "error: invalid scenario: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    log << "solver error: " << e.what() << "\n";
    return exit_solver_error;
  }
}

WallScenario prepare(const RunConfig& cfg, bool sweeping) {
  validate(cfg, sweeping);
  return resolve_scenario(cfg);
}

}  // namespace

int cmd_run(const RunConfig& cfg, std::ostream& log) {
  return guarded(log, [&] {
    auto s = prepare(cfg, false);
    log << "running " << s.name << " (ratio " << format_number(s.load_ratio) << ", horizon "
        << format_number(cfg.t_end) << " s)\n";
    auto a = analyse(s, cfg);
    write_run_outputs(cfg.out_dir, a, cfg);
    if (!a.result.failed()) {
      log << "no failure within horizon of " << format_number(a.result.horizon) << " s\n";
      return static_cast<int>(exit_no_failure);
    }
    log << "fire resistance " << format_number(*a.result.fire_resistance / 60.0) << " min ("
        << to_string(*a.result.failure_mode) << ")\n";
    return static_cast<int>(exit_success);
  });
}

int cmd_sweep(const RunConfig& cfg, std::ostream& log) {
  return guarded(log, [&] {
    auto s = prepare(cfg, true);
    log << "sweeping " << s.name << " over " << cfg.ratios.size() << " ratio(s)\n";
    std::vector<Analysis> analyses;
    auto rows = run_sweep(s, cfg, &analyses);
    for (const auto& a : analyses)
      write_run_outputs(cfg.out_dir / ("ratio_" + format_number(a.scenario.load_ratio)), a, cfg);
    write_file_atomic(cfg.out_dir / "sweep.csv", sweep_csv(s, rows));
    bool error = false, open = false;
    for (const auto& r : rows) {
      log << "  ratio " << format_number(r.ratio) << ": " << to_string(r.status);
      if (r.fire_resistance) log << " at " << format_number(*r.fire_resistance / 60.0) << " min";
      if (!r.message.empty()) log << " (" << r.message << ")";
      log << "\n";
      error |= r.status == SweepStatus::Error;
      open |= r.status == SweepStatus::NoFailure;
    }
    if (error) return static_cast<int>(exit_solver_error);
    return static_cast<int>(open ? exit_no_failure : exit_success);
  });
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    if (cfg.scenario.empty()) throw UsageError("no scenario given");
    auto s = resolve_scenario(cfg);
    auto rep = check_compliance(s);
    auto text = compliance_csv(rep);
    out << text;
    if (!cfg.out_dir.empty()) write_file_atomic(cfg.out_dir / "compliance.csv", text);
    return static_cast<int>(rep.all_pass() ? exit_success : exit_check_failed);
  });
}

int cmd_list_scenarios(std::ostream& out, bool full) {
  bool first = true;
  for (const auto& s : builtin_scenarios()) {
    if (full) {
      if (!first) out << '\n';
      out << serialize_scenario(s);
    } else {
      out << s.name << '\n';
    }
    first = false;
  }
  return exit_success;
}

}  // namespace rcwall
