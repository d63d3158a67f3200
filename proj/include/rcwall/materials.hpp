#pragma once

#include "rcwall/tabulated.hpp"

namespace rcwall {

enum class Aggregate { Siliceous, Calcareous };
enum class ConductivityLimit { Lower, Upper };

/// Normal-weight concrete at elevated temperature, implicit formulation: the
/// stress is a direct function of the mechanical strain, with transient creep
/// folded into the temperature-dependent peak strain and basic creep ignored.
struct ConcreteLaw {
  double f_ck = 25.0e6;
  Aggregate aggregate = Aggregate::Siliceous;
  double moisture_pct = 1.5;
  /// Tensile strength at 20 C. Zero means no-tension concrete.
  double tensile_strength = 0.0;
  ConductivityLimit conductivity_limit = ConductivityLimit::Upper;
  double density_20 = 2300.0;
};

struct SteelLaw {
  double f_yk = 400.0e6;
  double elastic_modulus_20C = 200.0e9;
};

void validate(const ConcreteLaw& law);
void validate(const SteelLaw& law);

/// Total = thermal + mechanical.
struct StrainState {
  double total = 0.0;
  double thermal = 0.0;
  double mechanical = 0.0;
};

struct StressTangent {
  double stress = 0.0;
  double tangent = 0.0;
};

inline constexpr double min_material_temperature = 20.0;
inline constexpr double max_material_temperature = 1200.0;

/// Solver-side policy: temperatures beyond the tabulated range (late ISO 834
/// surface cells run past 1200 C) use the end-of-table properties.
double clamp_to_material_range(double T);

/// Concrete curve parameters frozen at one temperature.
struct ConcreteState {
  double strength = 0.0;        // f_c,T
  double peak_strain = 0.0;     // eps_c1,T
  double ultimate_strain = 0.0; // eps_cu1,T
  double thermal_strain = 0.0;
  double tensile_strength = 0.0;
};

/// Steel curve parameters frozen at one temperature.
struct SteelState {
  double yield_strength = 0.0;
  double proportional_limit = 0.0;
  double modulus = 0.0;
  double thermal_strain = 0.0;
};

/// Ascending branch sigma = f 3r / (2 + r^3), r = eps / eps_c1; linear
/// descent to zero at eps_cu1; tension linear up to the tensile strength.
/// Compression-positive strain and stress.
StressTangent concrete_curve(double eps_m, const ConcreteState& c);
/// Linear, elliptic transition to the yield plateau at 2 %, plateau to 15 %,
/// linear loss to zero at 20 %. Tension positive, odd in eps.
StressTangent steel_curve(double eps, const SteelState& s);

/// Resolved fixture tables. `standard()` uses the tables compiled into the
/// library; any other FixtureSet with the same table names can be swapped in.
class MaterialLibrary {
 public:
  explicit MaterialLibrary(const FixtureSet& fixtures);
  static const MaterialLibrary& standard();

  double concrete_strength(double T, const ConcreteLaw& law) const;
  double concrete_peak_strain(double T) const;
  double concrete_ultimate_strain(double T) const;
  double free_thermal_strain(double T, const ConcreteLaw& law) const;
  double mechanical_strain(double total, double T, const ConcreteLaw& law) const;
  StrainState strain_state(double total, double T, const ConcreteLaw& law) const;

  ConcreteState concrete_state(double T, const ConcreteLaw& law) const;
  SteelState steel_state(double T, const SteelLaw& law) const;

  /// Compression-positive strain in, compression-positive stress out.
  StressTangent concrete_response(double eps_m, double T, const ConcreteLaw& law) const;

  double conductivity(double T, const ConcreteLaw& law) const;
  double specific_heat(double T, double moisture_pct) const;
  double density(double T, const ConcreteLaw& law) const;

  double steel_yield_strength(double T, const SteelLaw& law) const;
  double steel_proportional_limit(double T, const SteelLaw& law) const;
  double steel_modulus(double T, const SteelLaw& law) const;
  double steel_thermal_strain(double T) const;
  /// Tension positive, odd in eps.
  StressTangent steel_response(double eps, double T, const SteelLaw& law) const;

 private:
  const Table1D* k_c_siliceous_;
  const Table1D* k_c_calcareous_;
  const Table1D* eps_c1_;
  const Table1D* eps_cu1_;
  const Table1D* eps_th_siliceous_;
  const Table1D* eps_th_calcareous_;
  const Table1D* lambda_lower_;
  const Table1D* lambda_upper_;
  const Table1D* cp_dry_;
  const Table1D* cp_peak_;
  const Table1D* rho_ratio_;
  const Table1D* k_y_;
  const Table1D* k_p_;
  const Table1D* k_E_;
  const Table1D* eps_th_steel_;
};

// Free-function forms over MaterialLibrary::standard().

double concrete_strength(double T, const ConcreteLaw& law);
double concrete_peak_strain(double T);
double concrete_ultimate_strain(double T);
double free_thermal_strain(double T, const ConcreteLaw& law);
double mechanical_strain(double total, double T, const ConcreteLaw& law);
double concrete_stress(double eps_m, double T, const ConcreteLaw& law);
double conductivity(double T, const ConcreteLaw& law);
double specific_heat(double T, double moisture_pct);
double density(double T, const ConcreteLaw& law);
double steel_stress(double eps, double T, const SteelLaw& law);

}  // namespace rcwall
