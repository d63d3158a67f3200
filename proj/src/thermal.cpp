#include "rcwall/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "rcwall/banded.hpp"

namespace rcwall {

SectionMesh build_section_mesh(const WallScenario& s, std::size_t n_through, std::size_t n_width) {
  validate(s);
  if (n_through < min_cells_through) {
    throw std::invalid_argument("section mesh needs at least " +
                                std::to_string(min_cells_through) + " cells through the thickness");
  }
  if (n_width < 1) throw std::invalid_argument("section mesh needs at least one cell across");

  SectionMesh m;
  m.thickness = s.thickness;
  m.strip_width = s.strip_width;
  m.n_through = n_through;
  m.n_width = n_width;
  m.dx = s.thickness / static_cast<double>(n_through);
  m.dz = s.strip_width / static_cast<double>(n_width);
  for (std::size_t j = 0; j < n_width; ++j) {
    m.face1_cells.push_back(m.index(0, j));
    m.face2_cells.push_back(m.index(n_through - 1, j));
  }

  const double depth = s.bar_axis_depth();
  const double z = 0.5 * s.strip_width;
  auto cell_of = [&](double x) {
    const auto i = std::min(n_through - 1, static_cast<std::size_t>(x / m.dx));
    const auto j = std::min(n_width - 1, static_cast<std::size_t>(z / m.dz));
    return m.index(i, j);
  };
  m.rebars.push_back({Face::Face1, depth, z, s.bar_area(), cell_of(depth)});
  m.rebars.push_back({Face::Face2, s.thickness - depth, z, s.bar_area(), cell_of(s.thickness - depth)});
  return m;
}

double temperature_at_depth(const SectionMesh& m, const TemperatureField& f, double x,
                            std::size_t j) {
  const std::size_t n = m.n_through;
  const double first = m.x_centroid(0);
  const double last = m.x_centroid(n - 1);
  if (x <= first) {
    const double t = std::clamp(x / first, 0.0, 1.0);
    return f.face1_surface[j] + t * (f.cells[m.index(0, j)] - f.face1_surface[j]);
  }
  if (x >= last) {
    const double t = std::clamp((x - last) / (m.thickness - last), 0.0, 1.0);
    return f.cells[m.index(n - 1, j)] + t * (f.face2_surface[j] - f.cells[m.index(n - 1, j)]);
  }
  const double u = x / m.dx - 0.5;
  const auto i = std::min(n - 2, static_cast<std::size_t>(u));
  const double t = u - static_cast<double>(i);
  return f.cells[m.index(i, j)] + t * (f.cells[m.index(i + 1, j)] - f.cells[m.index(i, j)]);
}

double temperature_at_depth(const SectionMesh& m, const TemperatureField& f, double x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < m.n_width; ++j) sum += temperature_at_depth(m, f, x, j);
  return sum / static_cast<double>(m.n_width);
}

double rebar_temperature(const SectionMesh& m, const TemperatureField& f,
                         const SectionMesh::Rebar& bar) {
  return temperature_at_depth(m, f, bar.x, bar.cell % m.n_width);
}

TemperatureHistory::TemperatureHistory(std::shared_ptr<const SectionMesh> mesh,
                                       std::vector<TemperatureField> fields)
    : mesh_(std::move(mesh)), fields_(std::move(fields)) {
  if (fields_.empty()) throw std::invalid_argument("temperature history is empty");
  for (std::size_t k = 1; k < fields_.size(); ++k) {
    if (!(fields_[k].time > fields_[k - 1].time)) {
      throw std::invalid_argument("temperature history times must increase strictly");
    }
  }
}

TemperatureField TemperatureHistory::at(double t) const {
  if (!(t >= t_begin() && t <= t_end())) {
    std::ostringstream msg;
    msg << "temperature history queried at t = " << t << " s, outside [" << t_begin() << ", "
        << t_end() << "]";
    throw OutOfRange(msg.str());
  }
  auto it = std::lower_bound(fields_.begin(), fields_.end(), t,
                             [](const TemperatureField& f, double v) { return f.time < v; });
  if (it->time == t) return *it;
  const TemperatureField& b = *it;
  const TemperatureField& a = *(it - 1);
  const double w = (t - a.time) / (b.time - a.time);
  auto blend = [w](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + w * (y[k] - x[k]);
    return out;
  };
  return {t, blend(a.cells, b.cells), blend(a.face1_surface, b.face1_surface),
          blend(a.face2_surface, b.face2_surface)};
}

double probe_temperature(const SectionMesh& m, const TemperatureField& f, Probe probe) {
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  switch (probe) {
    case Probe::Face1Surface:
      return mean(f.face1_surface);
    case Probe::Face2Surface:
      return mean(f.face2_surface);
    case Probe::MidDepth:
      return temperature_at_depth(m, f, 0.5 * m.thickness);
    case Probe::RebarFace1:
      return rebar_temperature(m, f, m.rebars.at(0));
    case Probe::RebarFace2:
      return rebar_temperature(m, f, m.rebars.at(1));
  }
  return 0.0;
}

double sample_temperature(const TemperatureHistory& h, double t, Probe probe) {
  return probe_temperature(h.mesh(), h.at(t), probe);
}

void validate(const ThermalSettings& s) {
  if (!(s.dt > 0.0)) throw std::invalid_argument("thermal dt must be positive");
  if (!(s.t_end > s.dt)) throw std::invalid_argument("thermal t_end must exceed dt");
  if (!(s.output_interval > 0.0)) throw std::invalid_argument("output interval must be positive");
  if (!(s.tolerance > 0.0)) throw std::invalid_argument("thermal tolerance must be positive");
  if (s.n_through < min_cells_through)
    throw std::invalid_argument("thermal mesh needs at least " + std::to_string(min_cells_through) +
                                " cells through the thickness");
  if (s.n_width < 1) throw std::invalid_argument("thermal mesh needs at least one cell across the width");
  validate(s.concrete);
}

ExposureConfig exposure_for(const WallScenario& s, ExposureConfig base) {
  base.face1_exposed = true;
  base.face2_exposed = s.exposure == Exposure::TwoSides;
  return base;
}

namespace {

constexpr double kEnthalpyStep = 0.5;

}  // namespace

ThermalSolver::ThermalSolver(const WallScenario& s, FireCurve curve, ExposureConfig cfg,
                             ThermalSettings settings)
    : mesh_(std::make_shared<SectionMesh>(build_section_mesh(s, settings.n_through,
                                                             settings.n_width))),
      curve_(std::move(curve)),
      cfg_(cfg),
      settings_(std::move(settings)),
      lib_(&MaterialLibrary::standard()) {
  validate(settings_);
  if (!settings_.fixed_surfaces) validate(cfg_);

  const auto n = mesh_->cell_count();
  state_.time = 0.0;
  state_.cells.assign(n, settings_.initial_temperature);
  state_.face1_surface.assign(mesh_->n_width, settings_.initial_temperature);
  state_.face2_surface.assign(mesh_->n_width, settings_.initial_temperature);

  if (!settings_.constant_properties) {
    const auto steps = static_cast<std::size_t>(
        std::lround((max_material_temperature - min_material_temperature) / kEnthalpyStep));
    enthalpy_table_.resize(steps + 1);
    enthalpy_table_[0] = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
      const double mid = min_material_temperature + (static_cast<double>(k) + 0.5) * kEnthalpyStep;
      enthalpy_table_[k + 1] = enthalpy_table_[k] + kEnthalpyStep * volumetric_heat(mid);
    }
  }
}

double ThermalSolver::volumetric_heat(double T) const {
  if (settings_.constant_properties) return settings_.constant_properties->volumetric_heat;
  const double Tp = clamp_to_material_range(T);
  return lib_->density(Tp, settings_.concrete) *
         lib_->specific_heat(Tp, settings_.concrete.moisture_pct);
}

double ThermalSolver::cond(double T) const {
  if (settings_.constant_properties) return settings_.constant_properties->conductivity;
  return lib_->conductivity(clamp_to_material_range(T), settings_.concrete);
}

double ThermalSolver::enthalpy(double T) const {
  if (settings_.constant_properties) {
    return settings_.constant_properties->volumetric_heat * (T - min_material_temperature);
  }
  if (T <= min_material_temperature) {
    return volumetric_heat(min_material_temperature) * (T - min_material_temperature);
  }
  if (T >= max_material_temperature) {
    return enthalpy_table_.back() +
           volumetric_heat(max_material_temperature) * (T - max_material_temperature);
  }
  const double u = (T - min_material_temperature) / kEnthalpyStep;
  const auto k = std::min(enthalpy_table_.size() - 2, static_cast<std::size_t>(u));
  const double w = u - static_cast<double>(k);
  return enthalpy_table_[k] + w * (enthalpy_table_[k + 1] - enthalpy_table_[k]);
}

double ThermalSolver::far_temperature(Face f, double t) const {
  if (settings_.fixed_surfaces) {
    return f == Face::Face1 ? settings_.fixed_surfaces->face1 : settings_.fixed_surfaces->face2;
  }
  return cfg_.exposed(f) ? gas_temperature(curve_, t) : cfg_.ambient;
}

double ThermalSolver::stored_energy(const TemperatureField& field) const {
  double e = 0.0;
  for (double T : field.cells) e += enthalpy(T);
  return e * mesh_->cell_area();
}

bool ThermalSolver::try_step(double dt) {
  const SectionMesh& m = *mesh_;
  const std::size_t n = m.cell_count();
  const std::size_t nw = m.n_width;
  const double t1 = state_.time + dt;
  const double far1 = far_temperature(Face::Face1, t1);
  const double far2 = far_temperature(Face::Face2, t1);
  const double vol = m.cell_area();

  const std::vector<double>& T0 = state_.cells;
  std::vector<double> T = T0;
  std::vector<double> s1 = state_.face1_surface;
  std::vector<double> s2 = state_.face2_surface;
  std::vector<double> k(n), next(n);
  BandMatrix A(n, nw, nw);

  // Series conductance from the far temperature to a boundary cell centre.
  auto face_conductance = [&](Face f, double surface, double k_cell) {
    const double half = 0.5 * m.dx / k_cell;
    if (settings_.fixed_surfaces) return m.dz / half;
    const double far = f == Face::Face1 ? far1 : far2;
    const double h = exchange_coefficient(far, surface, cfg_, cfg_.exposed(f));
    return m.dz / (1.0 / h + half);
  };
  auto update_surfaces = [&] {
    for (std::size_t j = 0; j < nw; ++j) {
      const std::size_t c1 = m.index(0, j), c2 = m.index(m.n_through - 1, j);
      if (settings_.fixed_surfaces) {
        s1[j] = far1;
        s2[j] = far2;
        continue;
      }
      const double q1 = face_conductance(Face::Face1, s1[j], k[c1]) * (far1 - T[c1]) / m.dz;
      const double q2 = face_conductance(Face::Face2, s2[j], k[c2]) * (far2 - T[c2]) / m.dz;
      s1[j] = T[c1] + q1 * 0.5 * m.dx / k[c1];
      s2[j] = T[c2] + q2 * 0.5 * m.dx / k[c2];
    }
  };

  double change = 0.0;
  for (int iter = 1; iter <= settings_.max_iterations; ++iter) {
    for (std::size_t c = 0; c < n; ++c) k[c] = cond(T[c]);
    A.set_zero();
    for (std::size_t i = 0; i < m.n_through; ++i) {
      for (std::size_t j = 0; j < nw; ++j) {
        const std::size_t c = m.index(i, j);
        const double dT = T[c] - T0[c];
        const double cap =
            (std::abs(dT) > 1.0e-9 ? (enthalpy(T[c]) - enthalpy(T0[c])) / dT : volumetric_heat(T[c])) *
            vol / dt;
        double diag = cap;
        double rhs = cap * T0[c];
        auto couple = [&](std::size_t other, double area, double len) {
          const double g = area / (0.5 * len / k[c] + 0.5 * len / k[other]);
          diag += g;
          A(c, other) = -g;
        };
        if (i > 0) couple(m.index(i - 1, j), m.dz, m.dx);
        if (i + 1 < m.n_through) couple(m.index(i + 1, j), m.dz, m.dx);
        if (j > 0) couple(m.index(i, j - 1), m.dx, m.dz);
        if (j + 1 < nw) couple(m.index(i, j + 1), m.dx, m.dz);
        if (i == 0) {
          const double u = face_conductance(Face::Face1, s1[j], k[c]);
          diag += u;
          rhs += u * far1;
        }
        if (i + 1 == m.n_through) {
          const double u = face_conductance(Face::Face2, s2[j], k[c]);
          diag += u;
          rhs += u * far2;
        }
        A(c, c) = diag;
        next[c] = rhs;
      }
    }
    A.solve_in_place(next);
    change = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!std::isfinite(next[c])) return false;
      change = std::max(change, std::abs(next[c] - T[c]));
    }
    T.swap(next);
    update_surfaces();
    if (change < settings_.tolerance) {
      for (std::size_t c = 0; c < n; ++c) k[c] = cond(T[c]);
      update_surfaces();
      double heat = 0.0;
      for (std::size_t j = 0; j < nw; ++j) {
        const std::size_t c1 = m.index(0, j), c2 = m.index(m.n_through - 1, j);
        heat += face_conductance(Face::Face1, s1[j], k[c1]) * (far1 - T[c1]);
        heat += face_conductance(Face::Face2, s2[j], k[c2]) * (far2 - T[c2]);
      }
      last_boundary_heat_ = heat * dt;
      last_iterations_ = iter;
      state_.time = t1;
      state_.cells = std::move(T);
      state_.face1_surface = std::move(s1);
      state_.face2_surface = std::move(s2);
      return true;
    }
  }
  return false;
}

void ThermalSolver::advance(double dt) {
  struct Frame {
    double dt;
    int depth;
  };
  std::vector<Frame> stack{{dt, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (try_step(f.dt)) continue;
    if (f.depth >= settings_.max_halvings) {
      std::ostringstream msg;
      msg << "thermal inner iteration did not converge at t = " << state_.time
          << " s with substep " << f.dt << " s after " << settings_.max_iterations
          << " iterations (tolerance " << settings_.tolerance << " C)";
      throw ThermalConvergenceError(msg.str());
    }
    stack.push_back({0.5 * f.dt, f.depth + 1});
    stack.push_back({0.5 * f.dt, f.depth + 1});
  }
}

TemperatureHistory solve_thermal(const WallScenario& s, const FireCurve& curve,
                                 const ExposureConfig& cfg, const ThermalSettings& settings) {
  ThermalSolver solver(s, curve, cfg, settings);
  std::vector<TemperatureField> fields{solver.state()};
  const double eps = 1.0e-9 * settings.t_end;
  double next_output = settings.output_interval;
  while (solver.state().time < settings.t_end - eps) {
    const double t = solver.state().time;
    const double target = std::min(next_output, settings.t_end);
    const double step = std::min(settings.dt, target - t);
    solver.advance(step);
    if (solver.state().time >= target - eps) {
      TemperatureField f = solver.state();
      f.time = target;
      fields.push_back(std::move(f));
      if (target >= next_output - eps) next_output += settings.output_interval;
    }
  }
  return TemperatureHistory(solver.shared_mesh(), std::move(fields));
}

void write_history_table(std::ostream& out, const TemperatureHistory& h) {
  const SectionMesh& m = h.mesh();
  out << "time_s,cell,x_m,z_m,temperature_C\n";
  char buf[160];
  for (const auto& f : h.fields()) {
    for (std::size_t i = 0; i < m.n_through; ++i) {
      for (std::size_t j = 0; j < m.n_width; ++j) {
        const std::size_t c = m.index(i, j);
        std::snprintf(buf, sizeof buf, "%.3f,%zu,%.6f,%.6f,%.4f\n", f.time, c, m.x_centroid(i),
                      m.z_centroid(j), f.cells[c]);
        out << buf;
      }
    }
  }
}

}  // namespace rcwall
