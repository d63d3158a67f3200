#include <doctest.h>

#include "rcwall/scenario.hpp"

using namespace rcwall;

TEST_CASE("tonne-force conversion uses 10 kN per tonne") {
  CHECK(tonne_to_newton(0.0) == 0.0);
  CHECK(tonne_to_newton(1.0) == 10000.0);
  CHECK(tonne_to_newton(41.2) == doctest::Approx(412000.0).epsilon(1e-15));
  CHECK(tonne_metre_to_newton_metre(2.26) == doctest::Approx(22600.0).epsilon(1e-15));
}

TEST_CASE("strip resultants of the reference walls") {
  auto mu20 = *find_builtin("Mu 20");
  auto r = strip_resultants(mu20);
  CHECK(r.axial_load == doctest::Approx(17532.0).epsilon(1e-4));
  CHECK(r.moment == doctest::Approx(961.7).epsilon(1e-4));

  auto mu12 = *find_builtin("Mu (12)20");
  r = strip_resultants(mu12);
  CHECK(r.axial_load == doctest::Approx(15040.0).epsilon(1e-12));
  CHECK(r.moment == doctest::Approx(80.0).epsilon(1e-12));
}

TEST_CASE("strip resultants are linear in the load ratio") {
  for (auto s : builtin_scenarios()) {
    auto full = strip_resultants(s);
    for (double k : {0.3, 0.5, 0.7}) {
      s.load_ratio = k;
      auto part = strip_resultants(s);
      CHECK(part.axial_load == doctest::Approx(k * full.axial_load).epsilon(1e-14));
      CHECK(part.moment == doctest::Approx(k * full.moment).epsilon(1e-14));
    }
  }
}

TEST_CASE("built-in walls") {
  auto all = builtin_scenarios();
  REQUIRE(all.size() == 4);
  for (const auto& s : all) {
    CHECK(s.thickness == 0.20);
    CHECK(s.height == 2.86);
    CHECK_NOTHROW(validate(s));
  }
  CHECK(find_builtin("MuF 20")->exposure == Exposure::TwoSides);
  CHECK(find_builtin("Mu 20")->exposure == Exposure::OneSide);
  CHECK(find_builtin("MuCH (12)20")->moment_tfm == 2.26);
  CHECK(find_builtin("MuCH (12)20")->span == 3.5);
  CHECK(find_builtin("mu (12) 20") == find_builtin("Mu (12)20"));
  CHECK(find_builtin("Mu 30") == nullptr);
}

TEST_CASE("bar geometry") {
  auto s = *find_builtin("Mu 20");
  CHECK(s.bar_axis_depth() == doctest::Approx(0.029));
  CHECK(s.bar_area() == doctest::Approx(7.853981633974483e-05).epsilon(1e-14));
}

TEST_CASE("invariant violations name the field") {
  auto check_field = [](WallScenario s, const char* field) {
    try {
      validate(s);
      FAIL("expected InvalidScenario for " << field);
    } catch (const InvalidScenario& e) {
      CHECK(e.field() == field);
    }
  };
  auto base = *find_builtin("Mu 20");
  auto s = base;
  s.thickness = 0.0;
  check_field(s, "thickness_m");
  s = base;
  s.cover = 0.096;  // axis at 0.101 > e/2
  check_field(s, "cover_m");
  s = base;
  s.load_ratio = 0.0;
  check_field(s, "load_ratio");
  s = base;
  s.load_ratio = 1.01;
  check_field(s, "load_ratio");
  s = base;
  s.strip_width = 5.0;
  check_field(s, "strip_width_m");
  s = base;
  s.height = -1.0;
  check_field(s, "height_m");
}
