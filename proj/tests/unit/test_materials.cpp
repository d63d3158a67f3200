#include <doctest.h>

#include <cmath>
#include <random>

#include "rcwall/materials.hpp"

using namespace rcwall;

namespace {

// Reference values typed in from EN 1992-1-2 Tables 3.1 and 3.2a.
struct Row {
  double T, kc, eps_c1, eps_cu1;
};
constexpr Row siliceous[] = {
    {20, 1.00, 0.0025, 0.0200},  {100, 1.00, 0.0040, 0.0225}, {200, 0.95, 0.0055, 0.0250},
    {300, 0.85, 0.0070, 0.0275}, {400, 0.75, 0.0100, 0.0300}, {500, 0.60, 0.0150, 0.0325},
    {600, 0.45, 0.0250, 0.0350}, {700, 0.30, 0.0250, 0.0375}, {800, 0.15, 0.0250, 0.0400},
    {900, 0.08, 0.0250, 0.0425}, {1000, 0.04, 0.0250, 0.0450}, {1100, 0.01, 0.0250, 0.0475},
};

std::vector<double> fixture_temperatures() {
  std::vector<double> ts;
  for (double t = 20; t <= 1200; t += 10) ts.push_back(t == 20 ? 20 : t);
  return ts;
}

}  // namespace

TEST_CASE("concrete tables against the standard") {
  ConcreteLaw law;
  for (const auto& r : siliceous) {
    CAPTURE(r.T);
    CHECK(concrete_strength(r.T, law) == doctest::Approx(r.kc * 25e6).epsilon(1e-12));
    CHECK(concrete_peak_strain(r.T) == doctest::Approx(r.eps_c1).epsilon(1e-12));
    CHECK(concrete_ultimate_strain(r.T) == doctest::Approx(r.eps_cu1).epsilon(1e-12));
  }
  CHECK(concrete_strength(20, law) == law.f_ck);
  CHECK(concrete_strength(1200, law) == 0.0);
  CHECK(concrete_peak_strain(20) == 0.0025);
}

TEST_CASE("calcareous strength is not below siliceous") {
  ConcreteLaw sil, cal;
  cal.aggregate = Aggregate::Calcareous;
  for (double T : fixture_temperatures()) CHECK(concrete_strength(T, cal) >= concrete_strength(T, sil));
  CHECK(concrete_strength(500, cal) == doctest::Approx(0.74 * 25e6));
  CHECK(concrete_strength(600, cal) == doctest::Approx(0.60 * 25e6));
}

TEST_CASE("monotonic tables") {
  ConcreteLaw law;
  auto ts = fixture_temperatures();
  for (std::size_t i = 1; i < ts.size(); ++i) {
    CAPTURE(ts[i]);
    CHECK(concrete_strength(ts[i - 1], law) >= concrete_strength(ts[i], law));
    CHECK(concrete_peak_strain(ts[i - 1]) <= concrete_peak_strain(ts[i]));
    CHECK(free_thermal_strain(ts[i - 1], law) <= free_thermal_strain(ts[i], law));
    CHECK(concrete_peak_strain(ts[i]) > 0.0);
  }
}

TEST_CASE("free thermal strain") {
  ConcreteLaw law;
  CHECK(free_thermal_strain(20, law) == 0.0);
  CHECK(free_thermal_strain(500, law) == doctest::Approx(-1.8e-4 + 9e-6 * 500 + 2.3e-11 * 125e6).epsilon(1e-9));
  CHECK(free_thermal_strain(1100, law) == free_thermal_strain(1200, law));
  CHECK(free_thermal_strain(1100, law) == doctest::Approx(14e-3));
}

TEST_CASE("mechanical strain bookkeeping") {
  ConcreteLaw law;
  CHECK(mechanical_strain(free_thermal_strain(500, law), 500, law) == 0.0);
  CHECK(mechanical_strain(0.0, 20, law) == 0.0);
  CHECK(mechanical_strain(-0.002, 20, law) == -0.002);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> T(20, 1200), e(-0.03, 0.02);
  for (int i = 0; i < 200; ++i) {
    double t = T(rng), tot = e(rng);
    auto st = MaterialLibrary::standard().strain_state(tot, t, law);
    CHECK(st.mechanical + st.thermal == doctest::Approx(tot).epsilon(1e-15));
  }
}

TEST_CASE("peak identity at every fixture temperature") {
  ConcreteLaw law;
  for (double T : fixture_temperatures()) {
    CAPTURE(T);
    CHECK(concrete_stress(concrete_peak_strain(T), T, law) == concrete_strength(T, law));
  }
}

TEST_CASE("ascending curve shape") {
  ConcreteLaw law;
  const double T = 400;
  double fc = concrete_strength(T, law), e1 = concrete_peak_strain(T);
  CHECK(concrete_stress(0.0, T, law) == 0.0);
  CHECK(concrete_stress(0.5 * e1, T, law) / fc == doctest::Approx(0.7058823529411765).epsilon(1e-12));
  CHECK(concrete_stress(e1, T, law) / fc == 1.0);

  for (double Tk : {20.0, 300.0, 650.0, 1000.0}) {
    double e1k = concrete_peak_strain(Tk), fk = concrete_strength(Tk, law);
    double ecu = concrete_ultimate_strain(Tk);
    for (int i = 1; i < 100; ++i) {
      double e = e1k * i / 100.0, h = e1k * 1e-6;
      CHECK(concrete_stress(e + h, Tk, law) > concrete_stress(e - h, Tk, law));
    }
    for (int i = 0; i <= 100; ++i) {
      double s = concrete_stress(ecu * i / 100.0, Tk, law);
      CHECK(s >= 0.0);
      CHECK(s <= fk);
    }
    CHECK(concrete_stress(ecu * 1.01, Tk, law) == 0.0);
  }
}

TEST_CASE("no tension by default, linear tension when asked") {
  ConcreteLaw law;
  CHECK(concrete_stress(-1e-4, 20, law) == 0.0);
  law.tensile_strength = 2e6;
  double s = concrete_stress(-1e-5, 20, law);
  CHECK(s < 0.0);
  CHECK(s > -2e6);
}

TEST_CASE("tangents match central differences") {
  const auto& lib = MaterialLibrary::standard();
  ConcreteLaw c;
  SteelLaw st;
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> T(20, 1150), u(0.02, 0.98);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    double t = T(rng);
    // Concrete, ascending and descending branches, away from the kinks.
    double e1 = lib.concrete_peak_strain(t), ecu = lib.concrete_ultimate_strain(t);
    double e = u(rng) < 0.5 ? u(rng) * e1 : e1 + u(rng) * (ecu - e1);
    double h = 1e-7 * e1;
    if (std::abs(e - e1) < 10 * h || std::abs(e - ecu) < 10 * h) continue;
    auto r = lib.concrete_response(e, t, c);
    double fd = (lib.concrete_response(e + h, t, c).stress - lib.concrete_response(e - h, t, c).stress) / (2 * h);
    double scale = std::max(std::abs(fd), lib.concrete_strength(t, c) / e1);
    CHECK(std::abs(r.tangent - fd) <= 1e-6 * scale);
    ++checked;

    // Steel, each branch.
    auto ss = lib.steel_state(t, st);
    double es = std::pow(10.0, -5.0 + 4.5 * u(rng));
    double hs = es * 1e-7;
    if (std::abs(es - ss.proportional_limit / ss.modulus) < 10 * hs || std::abs(es - 0.02) < 10 * hs ||
        std::abs(es - 0.15) < 10 * hs)
      continue;
    auto rs = lib.steel_response(es, t, st);
    double fds = (lib.steel_response(es + hs, t, st).stress - lib.steel_response(es - hs, t, st).stress) / (2 * hs);
    CHECK(std::abs(rs.tangent - fds) <= 1e-6 * std::max(std::abs(fds), ss.modulus));
  }
  CHECK(checked > 250);
}

TEST_CASE("steel law") {
  SteelLaw law;
  CHECK(steel_stress(0.0, 20, law) == 0.0);
  for (double T : {20.0, 350.0, 600.0, 900.0})
    for (double e : {1e-4, 1e-3, 0.01, 0.05, 0.17}) CHECK(steel_stress(-e, T, law) == -steel_stress(e, T, law));
  CHECK(steel_stress(0.05, 20, law) == doctest::Approx(law.f_yk).epsilon(1e-12));
  CHECK(steel_stress(0.0005, 20, law) == doctest::Approx(0.0005 * 200e9).epsilon(1e-12));
  CHECK(steel_stress(0.05, 500, law) == doctest::Approx(0.78 * law.f_yk).epsilon(1e-12));
  CHECK(steel_stress(0.21, 20, law) == 0.0);
}

TEST_CASE("thermal properties") {
  ConcreteLaw law;
  CHECK(density(20, law) >= 2300.0);
  CHECK(density(20, law) <= 2400.0);
  CHECK(density(1200, law) == doctest::Approx(0.88 * 2300));
  for (double T : fixture_temperatures()) {
    CHECK(conductivity(T, law) > 0.0);
    CHECK(specific_heat(T, 1.5) > 0.0);
  }
  CHECK(specific_heat(110, 1.5) > specific_heat(110, 0.0));
  CHECK(specific_heat(110, 1.5) == doctest::Approx(1470));
  CHECK(specific_heat(50, 1.5) == doctest::Approx(900));
  CHECK(specific_heat(300, 1.5) == doctest::Approx(1050));
  CHECK(specific_heat(800, 0.0) == doctest::Approx(1100));

  // Closed forms for the two conductivity limits.
  auto upper = [](double T) { return 2.0 - 0.2451 * (T / 100) + 0.0107 * (T / 100) * (T / 100); };
  auto lower = [](double T) { return 1.36 - 0.136 * (T / 100) + 0.0057 * (T / 100) * (T / 100); };
  ConcreteLaw lo = law;
  lo.conductivity_limit = ConductivityLimit::Lower;
  law.conductivity_limit = ConductivityLimit::Upper;
  for (double T : {100.0, 450.0, 1000.0}) {
    CHECK(conductivity(T, law) == doctest::Approx(upper(T)).epsilon(1e-9));
    CHECK(conductivity(T, lo) == doctest::Approx(lower(T)).epsilon(1e-9));
  }
}

TEST_CASE("out-of-range temperatures throw, solver clamp does not") {
  ConcreteLaw law;
  CHECK_THROWS_AS(concrete_strength(1250, law), OutOfRange);
  CHECK_THROWS_AS(concrete_strength(0, law), OutOfRange);
  CHECK(clamp_to_material_range(1300) == 1200);
  CHECK(clamp_to_material_range(5) == 20);
}

TEST_CASE("tables can be swapped for files on disk") {
  auto dir = std::filesystem::path(RCWALL_FIXTURE_DIR);
  auto set = FixtureSet::from_directory(dir);
  auto names = set.names();
  CHECK(names == FixtureSet::builtin().names());
  MaterialLibrary lib(set);
  ConcreteLaw law;
  CHECK(lib.concrete_strength(550, law) == MaterialLibrary::standard().concrete_strength(550, law));
}
