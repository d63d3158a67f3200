#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "rcwall/config_io.hpp"
#include "rcwall/pipeline.hpp"

using namespace rcwall;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("rcwall_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::string& args) {
  std::string cmd = std::string("\"") + RCWALL_CLI + "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.scenario = "Mu 20";
  CHECK_NOTHROW(validate(cfg, true));
  cfg.ratios = {1.0, 0.0};
  CHECK_THROWS_AS(validate(cfg, true), UsageError);
  cfg.ratios = {};
  CHECK_THROWS_AS(validate(cfg, true), UsageError);
  CHECK_NOTHROW(validate(cfg, false));
  cfg.dt = -1;
  CHECK_THROWS_AS(validate(cfg, false), UsageError);
}

TEST_CASE("run writes the artifacts and is deterministic") {
  RunConfig cfg;
  cfg.scenario = "MuF 20";
  cfg.t_end = 4 * 3600.0;
  std::ostringstream log;
  cfg.out_dir = scratch("run_a");
  CHECK(cmd_run(cfg, log) == exit_success);
  auto a = cfg.out_dir;
  cfg.out_dir = scratch("run_b");
  CHECK(cmd_run(cfg, log) == exit_success);
  for (const char* f : {"summary.txt", "temperatures.csv", "displacements.csv"}) {
    CAPTURE(f);
    REQUIRE(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(cfg.out_dir / f));
  }
  auto summary = slurp(a / "summary.txt");
  CHECK(summary.find("status = failed\n") != std::string::npos);
  CHECK(summary.find("failure_mode = nonconvergence") != std::string::npos);
  CHECK(slurp(a / "displacements.csv").rfind("time_s,node3_horizontal_m,node3_vertical_m,node11_horizontal_m", 0) == 0);
  CHECK(slurp(a / "temperatures.csv").rfind("time_s,face1_surface_C,face2_surface_C,mid_depth_C", 0) == 0);
  fs::remove_all(a);
  fs::remove_all(cfg.out_dir);
}

TEST_CASE("short horizon is its own outcome") {
  RunConfig cfg;
  cfg.scenario = "Mu 20";
  cfg.t_end = 600.0;
  cfg.out_dir = scratch("short");
  std::ostringstream log;
  CHECK(cmd_run(cfg, log) == exit_no_failure);
  CHECK(slurp(cfg.out_dir / "summary.txt").find("fire_resistance_s = none") != std::string::npos);
  fs::remove_all(cfg.out_dir);
}

TEST_CASE("sweep rows are ordered and Rf falls with load") {
  RunConfig cfg;
  cfg.scenario = "MuF 20";
  cfg.t_end = 8 * 3600.0;
  cfg.ratios = {0.5, 1.0, 0.7};
  auto s = resolve_scenario(cfg);
  auto rows = run_sweep(s, cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].ratio == 1.0);
  CHECK(rows[1].ratio == 0.7);
  CHECK(rows[2].ratio == 0.5);
  for (const auto& r : rows) REQUIRE(r.status == SweepStatus::Failed);
  CHECK(*rows[0].fire_resistance < *rows[1].fire_resistance);
  CHECK(*rows[1].fire_resistance < *rows[2].fire_resistance);
  auto csv = sweep_csv(s, rows);
  CHECK(csv.rfind("scenario,ratio,status,fire_resistance_s", 0) == 0);
}

TEST_CASE("sweep writes per-ratio outputs and the merged table") {
  RunConfig cfg;
  cfg.scenario = "MuF 20";
  cfg.t_end = 3 * 3600.0;
  cfg.ratios = {1.0, 0.3};
  cfg.out_dir = scratch("sweep");
  std::ostringstream log;
  CHECK(cmd_sweep(cfg, log) == exit_no_failure);  // ratio 0.3 outlasts 3 h
  CHECK(fs::exists(cfg.out_dir / "ratio_1" / "summary.txt"));
  CHECK(fs::exists(cfg.out_dir / "ratio_0.3" / "summary.txt"));
  auto csv = slurp(cfg.out_dir / "sweep.csv");
  CHECK(csv.find("MuF 20,1,failed,") != std::string::npos);
  CHECK(csv.find("MuF 20,0.3,no_failure_within_horizon,none,none,none,10800,") != std::string::npos);
  for (auto& e : fs::recursive_directory_iterator(cfg.out_dir)) CHECK(e.path().extension() != ".tmp");
  fs::remove_all(cfg.out_dir);
}

TEST_CASE("check command") {
  RunConfig cfg;
  cfg.scenario = "Mu 20";
  cfg.out_dir.clear();
  std::ostringstream out, log;
  CHECK(cmd_check(cfg, out, log) == exit_success);
  CHECK(out.str().find("span_rule,pass,1 column(s); segment 2.35 m") != std::string::npos);
  CHECK(out.str().find("min_thickness,pass") != std::string::npos);

  auto file = scratch("slender.txt");
  WallScenario tall = *find_builtin("Mu 20");
  tall.height = 3.0;
  std::ofstream(file) << serialize_scenario(tall);
  cfg.scenario = file.string();
  std::ostringstream out2;
  CHECK(cmd_check(cfg, out2, log) == exit_check_failed);
  CHECK(out2.str().find("slenderness,fail") != std::string::npos);
  fs::remove(file);
}

TEST_CASE("list scenarios") {
  std::ostringstream out;
  CHECK(cmd_list_scenarios(out, false) == 0);
  CHECK(out.str() == "Mu 20\nMuF 20\nMu (12)20\nMuCH (12)20\n");
  std::ostringstream full;
  cmd_list_scenarios(full, true);
  CHECK(full.str().find("n_ult_tf = 41.2") != std::string::npos);
}

TEST_CASE("command line exit codes") {
  auto out = scratch("cli");
  CHECK(cli("list-scenarios") == 0);
  CHECK(cli("check -s \"Mu 20\"") == 0);
  CHECK(cli("run -s \"Mu 20\" --t-end 600 --out " + out.string()) == exit_no_failure);
  CHECK(fs::exists(out / "summary.txt"));
  CHECK(cli("run -s \"MuF 20\" --t-end 14400 --mesh 20x2 --out " + out.string()) == exit_success);
  CHECK(cli("run -s nowhere --out " + out.string()) == exit_usage);
  CHECK(cli("run") == exit_usage);
  CHECK(cli("frobnicate") == exit_usage);
  CHECK(cli("run -s \"Mu 20\" --dt 0 --out " + out.string()) == exit_usage);
  CHECK(cli("run -s \"Mu 20\" --mesh 4x4 --out " + out.string()) == exit_usage);
  CHECK(cli("run -s \"Mu 20\" --mesh abc --out " + out.string()) == exit_usage);
  CHECK(cli("sweep -s \"Mu 20\" --ratios 1,1.5 --out " + out.string()) == exit_usage);

  auto bad = scratch("bad.txt");
  std::ofstream(bad) << "name = x\nwidth = 3\n";
  CHECK(cli("run -s " + bad.string() + " --out " + out.string()) == exit_usage);
  // Far beyond the cold capacity of the section: no equilibrium at t = 0.
  std::ofstream(bad) << "name = crushed\nn_ult_tf = 100000\n";
  CHECK(cli("run -s " + bad.string() + " --t-end 600 --out " + out.string()) == exit_solver_error);
  fs::remove(bad);
  fs::remove_all(out);
}
