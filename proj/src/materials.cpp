#include "rcwall/materials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rcwall {

namespace {

// Slack for round-off in solver temperatures that should sit exactly at 20 C.
constexpr double kAmbientSlack = 1.0e-6;

double checked(double T) {
  if (T < min_material_temperature && T >= min_material_temperature - kAmbientSlack) {
    return min_material_temperature;
  }
  if (!(T >= min_material_temperature && T <= max_material_temperature)) {
    std::ostringstream msg;
    msg << "material temperature " << T << " C outside [" << min_material_temperature << ", "
        << max_material_temperature << "]";
    throw OutOfRange(msg.str());
  }
  return T;
}

// Concrete tensile strength reduction (1 up to 100 C, zero from 600 C).
double tensile_reduction(double T) {
  if (T <= 100.0) return 1.0;
  if (T >= 600.0) return 0.0;
  return 1.0 - (T - 100.0) / 500.0;
}

constexpr double kSteelLimitStrain = 0.02;
constexpr double kSteelPlateauEnd = 0.15;
constexpr double kSteelUltimate = 0.20;

}  // namespace

double clamp_to_material_range(double T) {
  return std::clamp(T, min_material_temperature, max_material_temperature);
}

void validate(const ConcreteLaw& law) {
  if (!(law.f_ck > 0.0)) throw std::invalid_argument("concrete f_ck must be positive");
  if (!(law.moisture_pct >= 0.0 && law.moisture_pct <= 4.0)) {
    throw std::invalid_argument("concrete moisture must lie in [0, 4] %");
  }
  if (!(law.tensile_strength >= 0.0)) {
    throw std::invalid_argument("concrete tensile strength must be non-negative");
  }
  if (!(law.density_20 > 0.0)) throw std::invalid_argument("concrete density must be positive");
}

void validate(const SteelLaw& law) {
  if (!(law.f_yk > 0.0) || !(law.elastic_modulus_20C > 0.0)) {
    throw std::invalid_argument("steel f_yk and E must be positive");
  }
}

MaterialLibrary::MaterialLibrary(const FixtureSet& f)
    : k_c_siliceous_(&f.at("concrete_strength_siliceous")),
      k_c_calcareous_(&f.at("concrete_strength_calcareous")),
      eps_c1_(&f.at("concrete_peak_strain")),
      eps_cu1_(&f.at("concrete_ultimate_strain")),
      eps_th_siliceous_(&f.at("concrete_thermal_strain_siliceous")),
      eps_th_calcareous_(&f.at("concrete_thermal_strain_calcareous")),
      lambda_lower_(&f.at("concrete_conductivity_lower")),
      lambda_upper_(&f.at("concrete_conductivity_upper")),
      cp_dry_(&f.at("concrete_specific_heat_dry")),
      cp_peak_(&f.at("concrete_specific_heat_peak")),
      rho_ratio_(&f.at("concrete_density_ratio")),
      k_y_(&f.at("steel_yield_reduction")),
      k_p_(&f.at("steel_proportional_reduction")),
      k_E_(&f.at("steel_modulus_reduction")),
      eps_th_steel_(&f.at("steel_thermal_strain")) {}

const MaterialLibrary& MaterialLibrary::standard() {
  static const MaterialLibrary lib(FixtureSet::builtin());
  return lib;
}

double MaterialLibrary::concrete_strength(double T, const ConcreteLaw& law) const {
  const Table1D& k = law.aggregate == Aggregate::Siliceous ? *k_c_siliceous_ : *k_c_calcareous_;
  return law.f_ck * k(checked(T));
}

double MaterialLibrary::concrete_peak_strain(double T) const { return (*eps_c1_)(checked(T)); }

double MaterialLibrary::concrete_ultimate_strain(double T) const {
  return (*eps_cu1_)(checked(T));
}

double MaterialLibrary::free_thermal_strain(double T, const ConcreteLaw& law) const {
  const Table1D& e =
      law.aggregate == Aggregate::Siliceous ? *eps_th_siliceous_ : *eps_th_calcareous_;
  return e(checked(T));
}

double MaterialLibrary::mechanical_strain(double total, double T, const ConcreteLaw& law) const {
  return total - free_thermal_strain(T, law);
}

StrainState MaterialLibrary::strain_state(double total, double T, const ConcreteLaw& law) const {
  const double th = free_thermal_strain(T, law);
  return {total, th, total - th};
}

ConcreteState MaterialLibrary::concrete_state(double T, const ConcreteLaw& law) const {
  return {concrete_strength(T, law), concrete_peak_strain(T), concrete_ultimate_strain(T),
          free_thermal_strain(T, law), law.tensile_strength * tensile_reduction(checked(T))};
}

StressTangent MaterialLibrary::concrete_response(double eps_m, double T,
                                                 const ConcreteLaw& law) const {
  return concrete_curve(eps_m, concrete_state(T, law));
}

StressTangent concrete_curve(double eps_m, const ConcreteState& c) {
  const double f = c.strength;
  const double e1 = c.peak_strain;
  if (eps_m < 0.0) {
    const double ft = c.tensile_strength;
    if (ft <= 0.0) return {0.0, 0.0};
    const double e0 = 1.5 * f / e1;
    if (-eps_m * e0 < ft) return {eps_m * e0, e0};
    return {-ft, 0.0};
  }
  if (eps_m <= e1) {
    const double r = eps_m / e1;
    const double d = 2.0 + r * r * r;
    return {f * (3.0 * r / d), f / e1 * 6.0 * (1.0 - r * r * r) / (d * d)};
  }
  const double eu = c.ultimate_strain;
  if (eps_m < eu) {
    const double k = f / (eu - e1);
    return {k * (eu - eps_m), -k};
  }
  return {0.0, 0.0};
}

double MaterialLibrary::conductivity(double T, const ConcreteLaw& law) const {
  const Table1D& k =
      law.conductivity_limit == ConductivityLimit::Lower ? *lambda_lower_ : *lambda_upper_;
  return k(checked(T));
}

double MaterialLibrary::specific_heat(double T, double moisture_pct) const {
  T = checked(T);
  const double dry = (*cp_dry_)(T);
  if (moisture_pct <= 0.0 || T < 100.0 || T >= 200.0) return dry;
  const double peak = (*cp_peak_)(moisture_pct);
  if (T <= 115.0) return peak;
  return peak + (dry - peak) * (T - 115.0) / 85.0;
}

double MaterialLibrary::density(double T, const ConcreteLaw& law) const {
  return law.density_20 * (*rho_ratio_)(checked(T));
}

double MaterialLibrary::steel_yield_strength(double T, const SteelLaw& law) const {
  return law.f_yk * (*k_y_)(checked(T));
}

double MaterialLibrary::steel_proportional_limit(double T, const SteelLaw& law) const {
  return law.f_yk * (*k_p_)(checked(T));
}

double MaterialLibrary::steel_modulus(double T, const SteelLaw& law) const {
  return law.elastic_modulus_20C * (*k_E_)(checked(T));
}

double MaterialLibrary::steel_thermal_strain(double T) const {
  return (*eps_th_steel_)(checked(T));
}

SteelState MaterialLibrary::steel_state(double T, const SteelLaw& law) const {
  const double fy = steel_yield_strength(T, law);
  return {fy, std::min(steel_proportional_limit(T, law), fy), steel_modulus(T, law),
          steel_thermal_strain(T)};
}

StressTangent MaterialLibrary::steel_response(double eps, double T, const SteelLaw& law) const {
  return steel_curve(eps, steel_state(T, law));
}

StressTangent steel_curve(double eps, const SteelState& st) {
  const double fy = st.yield_strength;
  const double fp = st.proportional_limit;
  const double E = st.modulus;
  if (fy <= 0.0 || E <= 0.0) return {0.0, 0.0};

  const double sign = eps < 0.0 ? -1.0 : 1.0;
  const double x = std::abs(eps);
  const double ep = fp / E;
  StressTangent r;
  if (x <= ep) {
    r = {E * x, E};
  } else if (x < kSteelLimitStrain) {
    const double dy = kSteelLimitStrain - ep;
    const double c = (fy - fp) * (fy - fp) / (dy * E - 2.0 * (fy - fp));
    const double a = std::sqrt(dy * (dy + c / E));
    const double b = std::sqrt(c * dy * E + c * c);
    const double u = kSteelLimitStrain - x;
    const double root = std::sqrt(std::max(a * a - u * u, 0.0));
    r.stress = fp - c + (b / a) * root;
    r.tangent = root > 0.0 ? (b / a) * u / root : 0.0;
  } else if (x <= kSteelPlateauEnd) {
    r = {fy, 0.0};
  } else if (x < kSteelUltimate) {
    const double k = fy / (kSteelUltimate - kSteelPlateauEnd);
    r = {k * (kSteelUltimate - x), -k};
  } else {
    r = {0.0, 0.0};
  }
  // Odd in strain, so the tangent is even.
  return {sign * r.stress, r.tangent};
}

double concrete_strength(double T, const ConcreteLaw& law) {
  return MaterialLibrary::standard().concrete_strength(T, law);
}
double concrete_peak_strain(double T) { return MaterialLibrary::standard().concrete_peak_strain(T); }
double concrete_ultimate_strain(double T) {
  return MaterialLibrary::standard().concrete_ultimate_strain(T);
}
double free_thermal_strain(double T, const ConcreteLaw& law) {
  return MaterialLibrary::standard().free_thermal_strain(T, law);
}
double mechanical_strain(double total, double T, const ConcreteLaw& law) {
  return MaterialLibrary::standard().mechanical_strain(total, T, law);
}
double concrete_stress(double eps_m, double T, const ConcreteLaw& law) {
  return MaterialLibrary::standard().concrete_response(eps_m, T, law).stress;
}
double conductivity(double T, const ConcreteLaw& law) {
  return MaterialLibrary::standard().conductivity(T, law);
}
double specific_heat(double T, double moisture_pct) {
  return MaterialLibrary::standard().specific_heat(T, moisture_pct);
}
double density(double T, const ConcreteLaw& law) {
  return MaterialLibrary::standard().density(T, law);
}
double steel_stress(double eps, double T, const SteelLaw& law) {
  return MaterialLibrary::standard().steel_response(eps, T, law).stress;
}

}  // namespace rcwall
