#pragma once

#include <filesystem>
#include <variant>

#include "rcwall/tabulated.hpp"
#include "rcwall/units.hpp"

namespace rcwall {

struct Iso834 {};
struct ConstantFire {
  double temperature = 20.0;
};
/// Gas temperature (C) against time (s); first row at t = 0.
struct TabulatedFire {
  Table1D table;
};

using FireCurve = std::variant<Iso834, ConstantFire, TabulatedFire>;

/// Builds a tabulated fire curve, checking that it starts at t = 0.
FireCurve tabulated_fire(Table1D table);
FireCurve load_fire_curve(const std::filesystem::path& path);

/// Gas temperature in C at time t (s). ISO 834 is 20 + 345 log10(8 t_min + 1).
double gas_temperature(const FireCurve& curve, double t);

enum class Face { Face1, Face2 };

/// Boundary heat exchange. Exposed faces see the fire gas through convection
/// and radiation; unexposed faces lose heat to the ambient through a single
/// convective coefficient that already lumps radiation in, unless
/// `radiate_unexposed` is set.
struct ExposureConfig {
  bool face1_exposed = true;
  bool face2_exposed = false;
  double h_exposed = 25.0;
  double h_unexposed = 9.0;
  double emissivity = 0.7;
  double stefan_boltzmann = units::stefan_boltzmann;
  double ambient = units::ambient_celsius;
  bool radiate_unexposed = false;

  bool exposed(Face f) const { return f == Face::Face1 ? face1_exposed : face2_exposed; }
};

void validate(const ExposureConfig& cfg);

/// Heat flux into the solid (W/m2): h (Tg - Ts) + sigma eps (Tg^4 - Ts^4),
/// temperatures in C and converted to kelvin for the radiative term.
double boundary_flux(double gas, double surface, double h, double emissivity,
                     double stefan_boltzmann = units::stefan_boltzmann);

/// Flux on one face. Exposed faces use h_exposed and radiation against `gas`;
/// unexposed faces use h_unexposed against the ambient.
double boundary_flux(double gas, double surface, const ExposureConfig& cfg, bool face_exposed);

/// Linearised exchange coefficient such that flux = coeff * (far - surface)
/// holds exactly at the given surface temperature.
double exchange_coefficient(double far, double surface, const ExposureConfig& cfg,
                            bool face_exposed);

}  // namespace rcwall
