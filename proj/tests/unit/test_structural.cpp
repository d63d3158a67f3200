#include <doctest.h>

#include <cmath>

#include "rcwall/structural.hpp"

using namespace rcwall;

namespace {

TemperatureField uniform(const SectionMesh& m, double T) {
  TemperatureField f;
  f.cells.assign(m.cell_count(), T);
  f.face1_surface.assign(m.n_width, T);
  f.face2_surface.assign(m.n_width, T);
  return f;
}

struct Rig {
  WallScenario s = *find_builtin("Mu 20");
  BeamModel model = build_beam_model(s.height);
  SectionMesh mesh = build_section_mesh(s, 40, 4);
  FiberSection fibers = build_fiber_section(mesh);
  ConcreteLaw concrete{};
  SteelLaw steel{};
};

TemperatureHistory fire_history(const WallScenario& s, double t_end) {
  ThermalSettings st;
  st.t_end = t_end;
  return solve_thermal(s, Iso834{}, exposure_for(s), st);
}

}  // namespace

TEST_CASE("beam model numbering") {
  auto m = build_beam_model(2.86);
  CHECK(BeamModel::node_count == 21);
  CHECK(BeamModel::element_count == 10);
  CHECK(m.node_height[0] == 0.0);
  CHECK(m.node_height[10] == doctest::Approx(1.43));
  CHECK(m.node_height[20] == doctest::Approx(2.86));
  CHECK(BeamModel::element_nodes(0) == std::array<int, 3>{1, 2, 3});
  CHECK(BeamModel::element_nodes(9) == std::array<int, 3>{19, 20, 21});
  // Base pinned, top guided: no equations for those translations.
  CHECK(m.eq_u[0] == -1);
  CHECK(m.eq_w[0] == -1);
  CHECK(m.eq_w[20] == -1);
  CHECK(m.eq_u[20] >= 0);
  CHECK(m.eq_rot[0] >= 0);
  CHECK(m.eq_rot[20] >= 0);
  // Mid nodes carry the axial DOF only.
  CHECK(m.eq_w[1] == -1);
  CHECK(m.eq_rot[1] == -1);
  CHECK(m.eq_u[1] >= 0);
}

TEST_CASE("elastic shortening matches N H / (E A)") {
  Rig r;
  HeatedSection sec(r.fibers, r.mesh, uniform(r.mesh, 20.0), r.concrete, r.steel);
  const double P = 0.01 * r.concrete.f_ck * 0.04;
  NodalLoads loads{P, 0.0, MomentSense::CompressesUnexposedFace};
  auto st = solve_static(r.model, sec, loads, SolutionState::zero(r.model));
  REQUIRE(st.converged);
  // Initial tangent of the concrete curve is 1.5 f_c / eps_c1.
  double Ec = 1.5 * r.concrete.f_ck / 0.0025;
  double As = 2 * r.s.bar_area();
  double EA = Ec * (0.04 - As) + r.steel.elastic_modulus_20C * As;
  double exact = -P * r.s.height / EA;
  double top = vertical_displacement(r.model, st, 21);
  CHECK(std::abs(top - exact) <= 0.01 * std::abs(exact));
  for (int n = 1; n <= 21; ++n) CHECK(std::abs(horizontal_displacement(r.model, st, n)) < 1e-12);
}

TEST_CASE("zero load at ambient gives zero displacement") {
  Rig r;
  HeatedSection sec(r.fibers, r.mesh, uniform(r.mesh, 20.0), r.concrete, r.steel);
  auto st = solve_static(r.model, sec, NodalLoads{}, SolutionState::zero(r.model));
  REQUIRE(st.converged);
  for (double d : st.dofs) CHECK(d == 0.0);
}

TEST_CASE("zero load under a uniform heated field: straight, uniformly strained") {
  Rig r;
  const double T = 400.0;
  HeatedSection sec(r.fibers, r.mesh, uniform(r.mesh, T), r.concrete, r.steel);
  auto st = solve_static(r.model, sec, NodalLoads{}, SolutionState::zero(r.model));
  REQUIRE(st.converged);
  double top = vertical_displacement(r.model, st, 21);
  double strain = top / r.s.height;
  double lo = std::min(free_thermal_strain(T, r.concrete), MaterialLibrary::standard().steel_thermal_strain(T));
  double hi = std::max(free_thermal_strain(T, r.concrete), MaterialLibrary::standard().steel_thermal_strain(T));
  CHECK(strain >= lo - 1e-9);
  CHECK(strain <= hi + 1e-9);
  for (int n = 1; n <= 21; ++n) {
    CAPTURE(n);
    CHECK(std::abs(horizontal_displacement(r.model, st, n)) < 1e-12);
    CHECK(vertical_displacement(r.model, st, n) == doctest::Approx(strain * r.model.node_height[n - 1]).epsilon(1e-9));
  }
}

TEST_CASE("small loads respond linearly") {
  Rig r;
  HeatedSection sec(r.fibers, r.mesh, uniform(r.mesh, 20.0), r.concrete, r.steel);
  auto base = strip_resultants(r.s);
  NodalLoads one{0.01 * base.axial_load, 0.01 * base.moment, MomentSense::CompressesUnexposedFace};
  NodalLoads two{2 * one.top_axial, 2 * one.end_moment, one.sense};
  auto s1 = solve_static(r.model, sec, one, SolutionState::zero(r.model));
  auto s2 = solve_static(r.model, sec, two, SolutionState::zero(r.model));
  REQUIRE(s1.converged);
  REQUIRE(s2.converged);
  for (int n : {3, 11, 21}) {
    double v1 = vertical_displacement(r.model, s1, n), v2 = vertical_displacement(r.model, s2, n);
    CHECK(v2 == doctest::Approx(2 * v1).epsilon(0.01));
  }
  double w1 = horizontal_displacement(r.model, s1, 11), w2 = horizontal_displacement(r.model, s2, 11);
  CHECK(w1 != 0.0);
  CHECK(w2 == doctest::Approx(2 * w1).epsilon(0.01));
}

TEST_CASE("converged states satisfy equilibrium") {
  Rig r;
  HeatedSection sec(r.fibers, r.mesh, uniform(r.mesh, 20.0), r.concrete, r.steel);
  auto loads = nodal_loads(strip_resultants(r.s), MomentSense::CompressesUnexposedFace);
  auto st = solve_static(r.model, sec, loads, SolutionState::zero(r.model));
  REQUIRE(st.converged);
  auto eq = check_equilibrium(r.model, sec, loads, st, r.s.thickness);
  CHECK(eq.relative_norm <= StaticSettings{}.tolerance);
}

TEST_CASE("moment sense decides the bending direction") {
  Rig r;
  HeatedSection sec(r.fibers, r.mesh, uniform(r.mesh, 20.0), r.concrete, r.steel);
  auto res = strip_resultants(r.s);
  auto a = solve_static(r.model, sec, nodal_loads(res, MomentSense::CompressesUnexposedFace), SolutionState::zero(r.model));
  auto b = solve_static(r.model, sec, nodal_loads(res, MomentSense::CompressesExposedFace), SolutionState::zero(r.model));
  double wa = horizontal_displacement(r.model, a, 11), wb = horizontal_displacement(r.model, b, 11);
  CHECK(wa > 0.0);  // compressing face 2 bows the wall towards face 1
  CHECK(wb == doctest::Approx(-wa).epsilon(1e-9));
}

TEST_CASE("one-sided heating bows the wall towards the fire") {
  auto s = *find_builtin("Mu 20");
  s.moment_tfm = 0.0;
  auto h = fire_history(s, 1800.0);
  auto r = run_to_failure(s, h);
  CHECK_FALSE(r.failed());
  auto w = displacement_history(r, 11, Component::Horizontal);
  CHECK(w.values.front() == doctest::Approx(0.0).epsilon(1e-12));
  for (std::size_t k = 1; k < w.values.size(); ++k) CHECK(w.values[k] > 0.0);
}

TEST_CASE("short horizon reports no failure") {
  auto s = *find_builtin("Mu 20");
  auto h = fire_history(s, 600.0);
  auto r = run_to_failure(s, h);
  CHECK_FALSE(r.failed());
  CHECK_FALSE(r.failure_mode.has_value());
  CHECK(r.horizon == doctest::Approx(600.0));
}

TEST_CASE("failure run: supports stay fixed, histories stop at Rf") {
  auto s = *find_builtin("MuF 20");
  auto h = fire_history(s, 5 * 3600.0);
  auto r = run_to_failure(s, h);
  REQUIRE(r.failed());
  CHECK(*r.fire_resistance > 0.0);
  CHECK(r.times.back() == *r.fire_resistance);
  for (auto c : {Component::Horizontal, Component::Vertical})
    for (double v : displacement_history(r, 1, c).values) CHECK(v == 0.0);
  for (double v : displacement_history(r, 21, Component::Horizontal).values) CHECK(v == 0.0);
  auto top = displacement_history(r, 21, Component::Vertical);
  for (std::size_t k = 1; k < top.values.size(); ++k) CHECK(top.values[k] > 0.0);
  CHECK_THROWS(displacement_history(r, 0, Component::Vertical));
  CHECK_THROWS(displacement_history(r, 22, Component::Vertical));
}

TEST_CASE("two-sided exposure fails first") {
  auto one = *find_builtin("Mu 20");
  auto two = one;
  two.exposure = Exposure::TwoSides;
  auto r1 = run_to_failure(one, fire_history(one, 6 * 3600.0));
  auto r2 = run_to_failure(two, fire_history(two, 6 * 3600.0));
  REQUIRE(r1.failed());
  REQUIRE(r2.failed());
  CHECK(*r2.fire_resistance < *r1.fire_resistance);
}

TEST_CASE("structural stage leaves the temperatures alone") {
  auto s = *find_builtin("Mu 20");
  auto h = fire_history(s, 1200.0);
  auto before = h.fields().back().cells;
  run_to_failure(s, h);
  CHECK(h.fields().back().cells == before);
}
