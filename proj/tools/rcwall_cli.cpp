#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "rcwall/pipeline.hpp"

using namespace rcwall;

namespace {

// "40x4" -> cells through the thickness and across the strip width.
void parse_mesh(const std::string& text, RunConfig& cfg) {
  auto x = text.find('x');
  try {
    if (x == std::string::npos) {
      cfg.n_through = std::stoul(text);
    } else {
      cfg.n_through = std::stoul(text.substr(0, x));
      cfg.n_width = std::stoul(text.substr(x + 1));
    }
  } catch (const std::exception&) {
    throw UsageError("mesh must look like 40 or 40x4, got '" + text + "'");
  }
}

struct Options {
  RunConfig cfg;
  std::string mesh;
  std::string exposure;
  std::string aggregate;
  std::string conductivity;
  std::string moment_sense;
  bool full = false;
};

void add_scenario_options(CLI::App* cmd, Options& o, bool analysis) {
  cmd->add_option("-s,--scenario", o.cfg.scenario, "built-in name or scenario file")->required();
  cmd->add_option("--exposure", o.exposure, "override: one_side or two_sides")
      ->check(CLI::IsMember({"one_side", "two_sides"}));
  cmd->add_option("-o,--out", o.cfg.out_dir, "output directory");
  if (!analysis) return;
  cmd->add_option("--t-end", o.cfg.t_end, "analysis horizon, s")->capture_default_str();
  cmd->add_option("--dt", o.cfg.dt, "thermal time step, s")->capture_default_str();
  cmd->add_option("--mesh", o.mesh, "cells through x across, e.g. 40x4");
  cmd->add_option("--aggregate", o.aggregate, "siliceous or calcareous")
      ->check(CLI::IsMember({"siliceous", "calcareous"}));
  cmd->add_option("--conductivity", o.conductivity, "lower or upper limit")
      ->check(CLI::IsMember({"lower", "upper"}));
  cmd->add_option("--moment-sense", o.moment_sense, "face compressed by the end moments")
      ->check(CLI::IsMember({"exposed", "unexposed"}));
  cmd->add_option("--emissivity", o.cfg.model.boundary.emissivity, "exposed-face emissivity")
      ->capture_default_str();
  cmd->add_option("--h-exposed", o.cfg.model.boundary.h_exposed, "W/m2K")->capture_default_str();
  cmd->add_option("--h-unexposed", o.cfg.model.boundary.h_unexposed, "W/m2K")->capture_default_str();
  cmd->add_flag("--dump-field", o.cfg.dump_field, "also write every cell temperature");
}

void apply(Options& o) {
  if (!o.mesh.empty()) parse_mesh(o.mesh, o.cfg);
  if (!o.exposure.empty())
    o.cfg.exposure = o.exposure == "two_sides" ? Exposure::TwoSides : Exposure::OneSide;
  if (!o.aggregate.empty())
    o.cfg.model.aggregate = o.aggregate == "calcareous" ? Aggregate::Calcareous : Aggregate::Siliceous;
  if (!o.conductivity.empty())
    o.cfg.model.conductivity =
        o.conductivity == "lower" ? ConductivityLimit::Lower : ConductivityLimit::Upper;
  if (!o.moment_sense.empty())
    o.cfg.model.moment_sense = o.moment_sense == "exposed" ? MomentSense::CompressesExposedFace
                                                           : MomentSense::CompressesUnexposedFace;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fire resistance of reinforced concrete walls under ISO 834 exposure"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "thermal and structural analysis of one wall");
  add_scenario_options(run, o, true);
  run->add_option("--load-ratio", o.cfg.load_ratio, "override the scenario load ratio, in (0, 1]");

  auto* sweep = app.add_subcommand("sweep", "fire resistance over several load ratios");
  add_scenario_options(sweep, o, true);
  sweep->add_option("--ratios", o.cfg.ratios, "comma separated, each in (0, 1]")
      ->delimiter(',')
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "prescriptive design checks");
  add_scenario_options(check, o, false);

  auto* list = app.add_subcommand("list-scenarios", "print the built-in walls");
  list->add_flag("--full", o.full, "print every field as a scenario file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    apply(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  if (run->parsed()) return cmd_run(o.cfg, std::cerr);
  if (sweep->parsed()) return cmd_sweep(o.cfg, std::cerr);
  if (check->parsed()) {
    if (!check->count("--out")) o.cfg.out_dir.clear();
    return cmd_check(o.cfg, std::cout, std::cerr);
  }
  return cmd_list_scenarios(std::cout, o.full);
}
