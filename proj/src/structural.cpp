#include "rcwall/structural.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rcwall {

BeamModel build_beam_model(double height) {
  if (!(height > 0.0)) throw std::invalid_argument("beam height must be positive");
  BeamModel m;
  m.height = height;
  int eq = 0;
  for (int n = 1; n <= BeamModel::node_count; ++n) {
    const int k = n - 1;
    m.node_height[k] = height * k / (BeamModel::node_count - 1);
    const bool end_node = n % 2 == 1;
    const bool base = n == 1;
    const bool top = n == BeamModel::node_count;
    m.eq_u[k] = base ? -1 : eq++;
    m.eq_w[k] = (!end_node || base || top) ? -1 : eq++;
    m.eq_rot[k] = end_node ? eq++ : -1;
  }
  m.equation_count = eq;
  return m;
}

SolutionState SolutionState::zero(const BeamModel& model) {
  SolutionState s;
  s.dofs.assign(static_cast<std::size_t>(model.equation_count), 0.0);
  s.converged = true;
  return s;
}

namespace {

double dof(const SolutionState& s, int eq) {
  return eq < 0 ? 0.0 : s.dofs[static_cast<std::size_t>(eq)];
}

void check_node(int node) {
  if (node < 1 || node > BeamModel::node_count) {
    throw std::out_of_range("node index " + std::to_string(node) + " outside [1, 21]");
  }
}

}  // namespace

double horizontal_displacement(const BeamModel& m, const SolutionState& s, int node) {
  check_node(node);
  if (node % 2 == 1) return dof(s, m.eq_w[node - 1]);
  // Middle node: cubic Hermite interpolation at the element midpoint.
  const int a = node - 1, b = node + 1;
  const double L = m.element_length();
  return 0.5 * (dof(s, m.eq_w[a - 1]) + dof(s, m.eq_w[b - 1])) +
         L / 8.0 * (dof(s, m.eq_rot[a - 1]) - dof(s, m.eq_rot[b - 1]));
}

double vertical_displacement(const BeamModel& m, const SolutionState& s, int node) {
  check_node(node);
  return dof(s, m.eq_u[node - 1]);
}

double rotation(const BeamModel& m, const SolutionState& s, int node) {
  check_node(node);
  if (node % 2 == 1) return dof(s, m.eq_rot[node - 1]);
  const int a = node - 1, b = node + 1;
  const double L = m.element_length();
  return 1.5 * (dof(s, m.eq_w[b - 1]) - dof(s, m.eq_w[a - 1])) / L -
         0.25 * (dof(s, m.eq_rot[a - 1]) + dof(s, m.eq_rot[b - 1]));
}

NodalLoads nodal_loads(const StripResultants& r, MomentSense sense) {
  return {r.axial_load, r.moment, sense};
}

namespace {

constexpr std::array<double, 3> kGaussPoints = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr std::array<double, 3> kGaussWeights = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
constexpr int kElementDofs = 7;  // u_a u_m u_b w_a rot_a w_b rot_b

using ElementVector = std::array<double, kElementDofs>;

std::array<int, kElementDofs> element_equations(const BeamModel& m, int e) {
  const auto [a, mid, b] = BeamModel::element_nodes(e);
  return {m.eq_u[a - 1],   m.eq_u[mid - 1], m.eq_u[b - 1], m.eq_w[a - 1],
          m.eq_rot[a - 1], m.eq_w[b - 1],   m.eq_rot[b - 1]};
}

class Dense {
 public:
  explicit Dense(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  // Gaussian elimination with partial pivoting; false on a singular matrix.
  bool solve(std::vector<double>& b) {
    auto& A = *this;
    double scale = 0.0;
    for (double v : a_) scale = std::max(scale, std::abs(v));
    const double tiny = 1.0e-14 * scale;
    for (int k = 0; k < n_; ++k) {
      int p = k;
      for (int i = k + 1; i < n_; ++i) {
        if (std::abs(A(i, k)) > std::abs(A(p, k))) p = i;
      }
      if (!(std::abs(A(p, k)) > tiny)) return false;
      if (p != k) {
        for (int j = 0; j < n_; ++j) std::swap(A(k, j), A(p, j));
        std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(p)]);
      }
      for (int i = k + 1; i < n_; ++i) {
        const double f = A(i, k) / A(k, k);
        if (f == 0.0) continue;
        for (int j = k + 1; j < n_; ++j) A(i, j) -= f * A(k, j);
        b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
      }
    }
    for (int k = n_ - 1; k >= 0; --k) {
      double s = b[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < n_; ++j) s -= A(k, j) * b[static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(k)] = s / A(k, k);
    }
    return true;
  }

 private:
  int n_;
  std::vector<double> a_;
};

std::vector<double> external_forces(const BeamModel& m, const NodalLoads& loads) {
  std::vector<double> f(static_cast<std::size_t>(m.equation_count), 0.0);
  const int top = BeamModel::node_count - 1;
  f[static_cast<std::size_t>(m.eq_u[top])] -= loads.top_axial;
  // Equal end moments bending the strip in single curvature. A positive top
  // moment corresponds to the load acting eccentrically towards face 1.
  const double sign = loads.sense == MomentSense::CompressesExposedFace ? 1.0 : -1.0;
  f[static_cast<std::size_t>(m.eq_rot[top])] += sign * loads.end_moment;
  f[static_cast<std::size_t>(m.eq_rot[0])] -= sign * loads.end_moment;
  return f;
}

// Internal forces, and the tangent when `K` is given.
std::vector<double> internal_forces(const BeamModel& m, const HeatedSection& section,
                                    const SolutionState& s, Dense* K) {
  std::vector<double> f(static_cast<std::size_t>(m.equation_count), 0.0);
  const double L = m.element_length();
  for (int e = 0; e < BeamModel::element_count; ++e) {
    const auto eqs = element_equations(m, e);
    ElementVector q{};
    for (int i = 0; i < kElementDofs; ++i) q[i] = dof(s, eqs[i]);

    ElementVector fe{};
    std::array<std::array<double, kElementDofs>, kElementDofs> ke{};
    for (std::size_t g = 0; g < kGaussPoints.size(); ++g) {
      const double xi = kGaussPoints[g];
      const double w = kGaussWeights[g] * 0.5 * L;
      const double r = 0.5 * (xi + 1.0);

      const std::array<double, 3> dn = {(xi - 0.5) * 2.0 / L, -2.0 * xi * 2.0 / L,
                                        (xi + 0.5) * 2.0 / L};
      const std::array<double, 4> hp = {(-6.0 * r + 6.0 * r * r) / L, 1.0 - 4.0 * r + 3.0 * r * r,
                                        (6.0 * r - 6.0 * r * r) / L, -2.0 * r + 3.0 * r * r};
      const std::array<double, 4> hpp = {(-6.0 + 12.0 * r) / (L * L), (-4.0 + 6.0 * r) / L,
                                         (6.0 - 12.0 * r) / (L * L), (-2.0 + 6.0 * r) / L};
      double du = 0.0, dw = 0.0, ddw = 0.0;
      for (int i = 0; i < 3; ++i) du += dn[i] * q[i];
      for (int i = 0; i < 4; ++i) {
        dw += hp[i] * q[3 + i];
        ddw += hpp[i] * q[3 + i];
      }
      const double eps0 = du + 0.5 * dw * dw;
      const double chi = -ddw;
      const SectionResponse sr = section.response(eps0, chi);

      ElementVector b0{}, bk{};
      for (int i = 0; i < 3; ++i) b0[i] = dn[i];
      for (int i = 0; i < 4; ++i) {
        b0[3 + i] = dw * hp[i];
        bk[3 + i] = -hpp[i];
      }
      for (int i = 0; i < kElementDofs; ++i) fe[i] += w * (b0[i] * sr.axial_force + bk[i] * sr.moment);
      if (K) {
        const auto& D = sr.tangent;
        for (int i = 0; i < kElementDofs; ++i) {
          const double a0 = D[0] * b0[i] + D[2] * bk[i];
          const double ak = D[1] * b0[i] + D[3] * bk[i];
          for (int j = 0; j < kElementDofs; ++j) ke[i][j] += w * (a0 * b0[j] + ak * bk[j]);
        }
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) ke[3 + i][3 + j] += w * sr.axial_force * hp[i] * hp[j];
        }
      }
    }
    for (int i = 0; i < kElementDofs; ++i) {
      if (eqs[i] < 0) continue;
      f[static_cast<std::size_t>(eqs[i])] += fe[i];
      if (K) {
        for (int j = 0; j < kElementDofs; ++j) {
          if (eqs[j] >= 0) (*K)(eqs[i], eqs[j]) += ke[i][j];
        }
      }
    }
  }
  return f;
}

struct Scales {
  std::vector<double> per_equation;
};

Scales residual_scales(const BeamModel& m, const NodalLoads& loads, double thickness) {
  const double force = std::max(std::abs(loads.top_axial), 1.0e3);
  Scales s;
  s.per_equation.assign(static_cast<std::size_t>(m.equation_count), force);
  for (int k = 0; k < BeamModel::node_count; ++k) {
    if (m.eq_rot[k] >= 0) s.per_equation[static_cast<std::size_t>(m.eq_rot[k])] = force * thickness;
  }
  return s;
}

double relative_norm(const std::vector<double>& r, const Scales& sc) {
  double n = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) n = std::max(n, std::abs(r[i]) / sc.per_equation[i]);
  return n;
}

}  // namespace

EquilibriumCheck check_equilibrium(const BeamModel& m, const HeatedSection& section,
                                   const NodalLoads& loads, const SolutionState& state,
                                   double thickness) {
  auto r = external_forces(m, loads);
  const auto fi = internal_forces(m, section, state, nullptr);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= fi[i];
  return {r, relative_norm(r, residual_scales(m, loads, thickness))};
}

SolutionState solve_static(const BeamModel& m, const HeatedSection& section,
                           const NodalLoads& loads, const SolutionState& initial,
                           const StaticSettings& settings) {
  const double thickness = section.fibers().thickness;
  const Scales scales = residual_scales(m, loads, thickness);
  const auto fext = external_forces(m, loads);
  SolutionState s = initial;
  s.converged = false;
  s.iterations = 0;

  auto residual_of = [&](const SolutionState& st, Dense* K) {
    auto r = fext;
    const auto fi = internal_forces(m, section, st, K);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= fi[i];
    return r;
  };

  for (int it = 0; it <= settings.max_iterations; ++it) {
    Dense K(m.equation_count);
    auto r = residual_of(s, &K);
    const double norm = relative_norm(r, scales);
    s.iterations = it;
    if (!std::isfinite(norm)) return s;
    if (norm <= settings.tolerance) {
      s.converged = true;
      return s;
    }
    if (it == settings.max_iterations) break;
    std::vector<double> delta = r;
    if (!K.solve(delta)) return s;

    // Backtrack when the full Newton step increases the residual.
    double step = 1.0;
    SolutionState trial = s;
    for (int ls = 0; ls < 6; ++ls) {
      for (std::size_t i = 0; i < delta.size(); ++i) trial.dofs[i] = s.dofs[i] + step * delta[i];
      const double tn = relative_norm(residual_of(trial, nullptr), scales);
      if (std::isfinite(tn) && tn < norm) break;
      step *= 0.5;
    }
    s.dofs = trial.dofs;
    for (int k = 0; k < BeamModel::node_count; ++k) {
      if (std::abs(horizontal_displacement(m, s, k + 1)) > settings.divergence_displacement) {
        return s;
      }
    }
  }
  return s;
}

std::string_view to_string(FailureMode mode) {
  return mode == FailureMode::Nonconvergence ? "nonconvergence" : "runaway_deflection";
}

double FireResistanceResult::peak_midheight_horizontal() const {
  double peak = 0.0;
  for (double v : horizontal[10]) {
    if (std::abs(v) > std::abs(peak)) peak = v;
  }
  return peak;
}

double FireResistanceResult::final_top_vertical() const { return vertical[20].back(); }

FireResistanceResult run_to_failure(const WallScenario& s, const TemperatureHistory& history,
                                    const StructuralSettings& settings) {
  validate(s);
  const SectionMesh& mesh = history.mesh();
  const FiberSection fibers = build_fiber_section(mesh);
  ConcreteLaw concrete = settings.concrete;
  concrete.f_ck = s.concrete_strength_char;
  SteelLaw steel = settings.steel;
  steel.f_yk = s.steel_yield_char;
  validate(concrete);
  validate(steel);

  const BeamModel model = build_beam_model(s.height);
  const StripResultants strip = strip_resultants(s);
  const NodalLoads loads = nodal_loads(strip, settings.moment_sense);

  FireResistanceResult result;
  result.loads = strip;
  result.horizontal.resize(BeamModel::node_count);
  result.vertical.resize(BeamModel::node_count);
  auto record = [&](double t, const SolutionState& st) {
    result.times.push_back(t);
    for (int n = 1; n <= BeamModel::node_count; ++n) {
      result.horizontal[n - 1].push_back(horizontal_displacement(model, st, n));
      result.vertical[n - 1].push_back(vertical_displacement(model, st, n));
    }
  };

  const auto fields = history.fields();
  SolutionState state = SolutionState::zero(model);
  {
    const HeatedSection cold(fibers, mesh, fields.front(), concrete, steel);
    for (int k = 1; k <= settings.load_increments; ++k) {
      NodalLoads partial = loads;
      const double f = static_cast<double>(k) / settings.load_increments;
      partial.top_axial *= f;
      partial.end_moment *= f;
      state = solve_static(model, cold, partial, state, settings.statics);
      if (!state.converged) {
        std::ostringstream msg;
        msg << "no equilibrium under the initial loads at load step " << k << " of "
            << settings.load_increments;
        throw NoColdEquilibrium(msg.str());
      }
    }
  }
  double t_cur = fields.front().time;
  record(t_cur, state);

  int fast_steps = 0;
  for (std::size_t k = 1; k < fields.size(); ++k) {
    const double target = fields[k].time;
    double step = target - t_cur;
    while (t_cur < target) {
      const double t_try = std::min(t_cur + step, target);
      const TemperatureField field = t_try == target ? fields[k] : history.at(t_try);
      const HeatedSection section(fibers, mesh, field, concrete, steel);
      SolutionState trial = solve_static(model, section, loads, state, settings.statics);
      if (!trial.converged) {
        step *= 0.5;
        if (step < settings.min_substep) {
          result.fire_resistance = t_cur;
          result.failure_mode = FailureMode::Nonconvergence;
          result.horizon = t_cur;
          return result;
        }
        continue;
      }
      const double w_prev = horizontal_displacement(model, state, 11);
      const double w_new = horizontal_displacement(model, trial, 11);
      const double rate = std::abs(w_new - w_prev) / (t_try - t_cur);
      fast_steps = rate > settings.runaway_rate ? fast_steps + 1 : 0;
      state = std::move(trial);
      t_cur = t_try;
      record(t_cur, state);
      if (fast_steps >= settings.runaway_steps) {
        result.fire_resistance = t_cur;
        result.failure_mode = FailureMode::RunawayDeflection;
        result.horizon = t_cur;
        return result;
      }
    }
  }
  result.horizon = t_cur;
  return result;
}

TimeSeries displacement_history(const FireResistanceResult& r, int node, Component c) {
  check_node(node);
  const auto& src = c == Component::Horizontal ? r.horizontal : r.vertical;
  return {r.times, src[static_cast<std::size_t>(node - 1)]};
}

}  // namespace rcwall
