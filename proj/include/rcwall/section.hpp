#pragma once

#include <array>
#include <vector>

#include "rcwall/materials.hpp"
#include "rcwall/thermal.hpp"

namespace rcwall {

/// Strip cross-section split into fibres. Concrete fibres map 1:1 onto the
/// thermal cells; steel fibres are the two bars. `y` is measured from
/// mid-thickness, positive towards face 1, so y = thickness / 2 - x.
struct FiberSection {
  struct Fiber {
    double area = 0.0;
    double y = 0.0;
  };
  std::vector<Fiber> concrete;
  std::vector<Fiber> steel;
  double thickness = 0.0;
  double width = 0.0;

  double total_area() const;
};

/// The bar area is taken out of the concrete cells of the row holding the bar,
/// so fibre areas sum to the gross strip area.
FiberSection build_fiber_section(const SectionMesh& mesh);

/// N (tension positive), M = sum(sigma A y) and the 2x2 tangent
/// [dN/de, dN/dk; dM/de, dM/dk] for the plane-section strain e + k y.
struct SectionResponse {
  double axial_force = 0.0;
  double moment = 0.0;
  std::array<double, 4> tangent{};
};

/// Fibre section with every fibre's material curve frozen at one temperature
/// field. Cheap to evaluate repeatedly inside equilibrium iterations.
class HeatedSection {
 public:
  HeatedSection(const FiberSection& fibers, const SectionMesh& mesh, const TemperatureField& field,
                const ConcreteLaw& concrete, const SteelLaw& steel,
                const MaterialLibrary& lib = MaterialLibrary::standard());

  SectionResponse response(double axial_strain, double curvature) const;

  const FiberSection& fibers() const { return *fibers_; }
  std::span<const ConcreteState> concrete_states() const { return concrete_; }
  std::span<const SteelState> steel_states() const { return steel_; }

 private:
  const FiberSection* fibers_;
  std::vector<ConcreteState> concrete_;
  std::vector<SteelState> steel_;
};

SectionResponse section_response(const FiberSection& fibers, const SectionMesh& mesh,
                                 double axial_strain, double curvature,
                                 const TemperatureField& field, const ConcreteLaw& concrete,
                                 const SteelLaw& steel);

}  // namespace rcwall
