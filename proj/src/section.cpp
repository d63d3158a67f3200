#include "rcwall/section.hpp"

#include <stdexcept>

namespace rcwall {

double FiberSection::total_area() const {
  double a = 0.0;
  for (const auto& f : concrete) a += f.area;
  for (const auto& f : steel) a += f.area;
  return a;
}

FiberSection build_fiber_section(const SectionMesh& mesh) {
  FiberSection s;
  s.thickness = mesh.thickness;
  s.width = mesh.strip_width;
  s.concrete.resize(mesh.cell_count());
  for (std::size_t i = 0; i < mesh.n_through; ++i) {
    for (std::size_t j = 0; j < mesh.n_width; ++j) {
      s.concrete[mesh.index(i, j)] = {mesh.cell_area(), 0.5 * mesh.thickness - mesh.x_centroid(i)};
    }
  }
  for (const auto& bar : mesh.rebars) {
    const std::size_t row = bar.cell / mesh.n_width;
    const double share = bar.area / static_cast<double>(mesh.n_width);
    for (std::size_t j = 0; j < mesh.n_width; ++j) {
      auto& f = s.concrete[mesh.index(row, j)];
      f.area -= share;
      if (f.area <= 0.0) throw std::invalid_argument("bar larger than its row of concrete cells");
    }
    s.steel.push_back({bar.area, 0.5 * mesh.thickness - bar.x});
  }
  return s;
}

HeatedSection::HeatedSection(const FiberSection& fibers, const SectionMesh& mesh,
                             const TemperatureField& field, const ConcreteLaw& concrete,
                             const SteelLaw& steel, const MaterialLibrary& lib)
    : fibers_(&fibers) {
  if (field.cells.size() != fibers.concrete.size()) {
    throw std::invalid_argument("temperature field does not match the fibre section");
  }
  concrete_.reserve(field.cells.size());
  for (double T : field.cells) {
    concrete_.push_back(lib.concrete_state(clamp_to_material_range(T), concrete));
  }
  for (const auto& bar : mesh.rebars) {
    const double T = rebar_temperature(mesh, field, bar);
    steel_.push_back(lib.steel_state(clamp_to_material_range(T), steel));
  }
}

SectionResponse HeatedSection::response(double e, double k) const {
  SectionResponse r;
  auto add = [&r](double sigma, double et, double area, double y) {
    const double fa = sigma * area;
    const double ka = et * area;
    r.axial_force += fa;
    r.moment += fa * y;
    r.tangent[0] += ka;
    r.tangent[1] += ka * y;
    r.tangent[3] += ka * y * y;
  };
  const auto& fc = fibers_->concrete;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    const ConcreteState& c = concrete_[i];
    const double eps_m = e + k * fc[i].y - c.thermal_strain;
    // The curve is compression positive.
    const StressTangent st = concrete_curve(-eps_m, c);
    add(-st.stress, st.tangent, fc[i].area, fc[i].y);
  }
  const auto& fs = fibers_->steel;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const SteelState& s = steel_[i];
    const StressTangent st = steel_curve(e + k * fs[i].y - s.thermal_strain, s);
    add(st.stress, st.tangent, fs[i].area, fs[i].y);
  }
  r.tangent[2] = r.tangent[1];
  return r;
}

SectionResponse section_response(const FiberSection& fibers, const SectionMesh& mesh,
                                 double axial_strain, double curvature,
                                 const TemperatureField& field, const ConcreteLaw& concrete,
                                 const SteelLaw& steel) {
  return HeatedSection(fibers, mesh, field, concrete, steel).response(axial_strain, curvature);
}

}  // namespace rcwall
