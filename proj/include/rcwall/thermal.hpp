#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rcwall/fire.hpp"
#include "rcwall/materials.hpp"
#include "rcwall/scenario.hpp"

namespace rcwall {

/// Uniform grid over one analysis strip of the wall cross-section. `x` runs
/// through the thickness from face 1 (x = 0) to face 2; `z` runs across the
/// strip width. Cell (i, j) has index i * n_width + j.
struct SectionMesh {
  struct Rebar {
    Face face;
    double x;     // bar axis depth from face 1
    double z;
    double area;  // m2
    std::size_t cell;
  };

  double thickness = 0.0;
  double strip_width = 0.0;
  std::size_t n_through = 0;
  std::size_t n_width = 0;
  double dx = 0.0;
  double dz = 0.0;
  std::vector<Rebar> rebars;
  std::vector<std::size_t> face1_cells;
  std::vector<std::size_t> face2_cells;

  std::size_t cell_count() const { return n_through * n_width; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * n_width + j; }
  double x_centroid(std::size_t i) const { return (static_cast<double>(i) + 0.5) * dx; }
  double z_centroid(std::size_t j) const { return (static_cast<double>(j) + 0.5) * dz; }
  double cell_area() const { return dx * dz; }
};

inline constexpr std::size_t min_cells_through = 10;

/// One bar per face inside the strip, centred across the width, at
/// cover + diameter / 2 from its face.
SectionMesh build_section_mesh(const WallScenario& s, std::size_t n_through, std::size_t n_width);

struct TemperatureField {
  double time = 0.0;
  std::vector<double> cells;
  /// Surface temperatures, one per width column.
  std::vector<double> face1_surface;
  std::vector<double> face2_surface;
};

/// Temperature at depth x (from face 1) in width column j, interpolated
/// linearly between the surface values and the cell centroids.
double temperature_at_depth(const SectionMesh& mesh, const TemperatureField& field, double x,
                            std::size_t column);
/// Same, averaged over the strip width.
double temperature_at_depth(const SectionMesh& mesh, const TemperatureField& field, double x);
double rebar_temperature(const SectionMesh& mesh, const TemperatureField& field,
                         const SectionMesh::Rebar& bar);

class TemperatureHistory {
 public:
  TemperatureHistory(std::shared_ptr<const SectionMesh> mesh, std::vector<TemperatureField> fields);

  const SectionMesh& mesh() const { return *mesh_; }
  std::span<const TemperatureField> fields() const { return fields_; }
  double t_begin() const { return fields_.front().time; }
  double t_end() const { return fields_.back().time; }
  /// Linear in time between stored fields; throws OutOfRange outside the span.
  TemperatureField at(double t) const;

 private:
  std::shared_ptr<const SectionMesh> mesh_;
  std::vector<TemperatureField> fields_;
};

enum class Probe { Face1Surface, Face2Surface, MidDepth, RebarFace1, RebarFace2 };

double probe_temperature(const SectionMesh& mesh, const TemperatureField& field, Probe probe);
double sample_temperature(const TemperatureHistory& h, double t, Probe probe);

class ThermalConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThermalSettings {
  double dt = 12.0;
  double t_end = 3600.0;
  double output_interval = 60.0;
  /// Max-norm change between inner iterations, C.
  double tolerance = 0.1;
  int max_iterations = 60;
  int max_halvings = 6;
  std::size_t n_through = 40;
  std::size_t n_width = 4;
  ConcreteLaw concrete{};

  /// Test mode: both surfaces held at fixed temperatures (no fire curve).
  struct FixedSurfaces {
    double face1 = 20.0;
    double face2 = 20.0;
  };
  std::optional<FixedSurfaces> fixed_surfaces;
  /// Test mode: temperature-independent conductivity and volumetric heat.
  struct ConstantProperties {
    double conductivity = 1.0;
    double volumetric_heat = 2.0e6;
  };
  std::optional<ConstantProperties> constant_properties;
  double initial_temperature = units::ambient_celsius;
};

void validate(const ThermalSettings& settings);

/// Face flags for a scenario: face 1 always faces the fire, face 2 only for
/// two-sided exposure.
ExposureConfig exposure_for(const WallScenario& s, ExposureConfig base = {});

/// Implicit-Euler finite-volume conduction over the strip section with
/// temperature-dependent properties. Heat capacity enters through the
/// volumetric enthalpy, so each converged step conserves energy exactly up to
/// the inner tolerance. Lateral strip edges are adiabatic.
class ThermalSolver {
 public:
  ThermalSolver(const WallScenario& s, FireCurve curve, ExposureConfig cfg,
                ThermalSettings settings);

  const SectionMesh& mesh() const { return *mesh_; }
  std::shared_ptr<const SectionMesh> shared_mesh() const { return mesh_; }
  const TemperatureField& state() const { return state_; }

  /// Advances by dt, halving internally on inner non-convergence.
  void advance(double dt);

  /// Volumetric enthalpy integrated over the strip, J per metre of height.
  double stored_energy(const TemperatureField& field) const;
  /// Heat that entered through both faces during the last single substep.
  double last_boundary_heat() const { return last_boundary_heat_; }
  int last_iterations() const { return last_iterations_; }

 private:
  bool try_step(double dt);
  double enthalpy(double T) const;
  double volumetric_heat(double T) const;
  double cond(double T) const;
  double far_temperature(Face f, double t) const;

  std::shared_ptr<const SectionMesh> mesh_;
  FireCurve curve_;
  ExposureConfig cfg_;
  ThermalSettings settings_;
  const MaterialLibrary* lib_;
  TemperatureField state_;
  std::vector<double> enthalpy_table_;
  double last_boundary_heat_ = 0.0;
  int last_iterations_ = 0;
};

TemperatureHistory solve_thermal(const WallScenario& s, const FireCurve& curve,
                                 const ExposureConfig& cfg, const ThermalSettings& settings);

/// One row per (time, cell): time_s,cell,x_m,z_m,temperature_C
void write_history_table(std::ostream& out, const TemperatureHistory& h);

}  // namespace rcwall
