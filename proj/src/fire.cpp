#include "rcwall/fire.hpp"

#include <cmath>
#include <stdexcept>

namespace rcwall {

FireCurve tabulated_fire(Table1D table) {
  if (table.x_min() != 0.0) {
    throw std::invalid_argument("tabulated fire curve must start at t = 0");
  }
  return TabulatedFire{std::move(table)};
}

FireCurve load_fire_curve(const std::filesystem::path& path) {
  return tabulated_fire(Table1D::load(path));
}

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

double gas_temperature(const FireCurve& curve, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("fire curve queried at negative time");
  return std::visit(
      overloaded{
          [&](const Iso834&) { return 20.0 + 345.0 * std::log10(8.0 * (t / 60.0) + 1.0); },
          [&](const ConstantFire& c) { return c.temperature; },
          [&](const TabulatedFire& tab) { return tab.table(t); },
      },
      curve);
}

void validate(const ExposureConfig& cfg) {
  if (!(cfg.emissivity > 0.0 && cfg.emissivity <= 1.0)) {
    throw std::invalid_argument("emissivity must lie in (0, 1]");
  }
  if (!(cfg.h_exposed > 0.0) || !(cfg.h_unexposed > 0.0) || !(cfg.stefan_boltzmann > 0.0)) {
    throw std::invalid_argument("exchange coefficients must be positive");
  }
  if (!cfg.face1_exposed && !cfg.face2_exposed) {
    throw std::invalid_argument("at least one face must be exposed to the fire");
  }
}

double boundary_flux(double gas, double surface, double h, double emissivity,
                     double stefan_boltzmann) {
  const double g = units::to_kelvin(gas);
  const double s = units::to_kelvin(surface);
  return h * (gas - surface) + stefan_boltzmann * emissivity * (g * g * g * g - s * s * s * s);
}

double boundary_flux(double gas, double surface, const ExposureConfig& cfg, bool face_exposed) {
  if (face_exposed) return boundary_flux(gas, surface, cfg.h_exposed, cfg.emissivity,
                                         cfg.stefan_boltzmann);
  const double eps = cfg.radiate_unexposed ? cfg.emissivity : 0.0;
  return boundary_flux(cfg.ambient, surface, cfg.h_unexposed, eps, cfg.stefan_boltzmann);
}

double exchange_coefficient(double far, double surface, const ExposureConfig& cfg,
                            bool face_exposed) {
  const double h = face_exposed ? cfg.h_exposed : cfg.h_unexposed;
  const double eps = (face_exposed || cfg.radiate_unexposed) ? cfg.emissivity : 0.0;
  const double g = units::to_kelvin(far);
  const double s = units::to_kelvin(surface);
  // g^4 - s^4 = (g^2 + s^2)(g + s)(g - s)
  return h + cfg.stefan_boltzmann * eps * (g * g + s * s) * (g + s);
}

}  // namespace rcwall
