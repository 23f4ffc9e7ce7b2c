// Copyright 2026 The cp-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpphase/phase.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cpphase {

namespace {

constexpr double kPi = std::numbers::pi;

std::string nodal_message(double tau, double visibility) {
  return "visibility below threshold at t = " + std::to_string(tau) + " (|tr S rho0| = " +
         std::to_string(visibility) + ")";
}

// Real part of tr[rho H]; the imaginary residue must be numerical noise.
double energy(const ComplexMatrix& h, const ComplexMatrix& rho) {
  const Complex e = (rho.cwiseProduct(h.transpose())).sum();
  if (std::abs(e.imag()) > 1e-10 * std::max(1.0, h.norm())) {
    throw PreconditionError("tr[rho H] has an imaginary part of " + std::to_string(e.imag()));
  }
  return e.real();
}

}  // namespace

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Pancharatnam pancharatnam(const LindbladModel& model, const DensityMatrix& rho0, double t) {
  if (!(t >= 0.0)) throw PreconditionError("pancharatnam: t must be non-negative");
  if (rho0.dim() != model.dim()) throw DimensionError("pancharatnam: state dimension mismatch");
  const Complex z = (effective_propagator(model, t) * rho0.matrix()).trace();
  if (std::abs(z) < kNodalThreshold) throw NodalPointError(nodal_message(t, std::abs(z)));
  return {std::arg(z), std::abs(z), z};
}

PhaseCurve phase_curve(const LindbladModel& model, const DensityMatrix& rho0, double t,
                       long n_grid) {
  if (!(t >= 0.0)) throw PreconditionError("phase_curve: t must be non-negative");
  if (n_grid < 1) throw PreconditionError("phase_curve: n_grid must be positive");
  if (rho0.dim() != model.dim()) throw DimensionError("phase_curve: state dimension mismatch");

  PhaseCurve curve;
  curve.times.push_back(0.0);
  curve.total_unwrapped.push_back(0.0);
  curve.visibility.push_back(std::abs(rho0.matrix().trace()));
  if (t == 0.0) return curve;

  const double h = t / static_cast<double>(n_grid);
  const ComplexMatrix step = effective_propagator(model, h);
  ComplexMatrix s = ComplexMatrix::Identity(model.dim(), model.dim());
  double previous = 0.0;
  double unwrapped = 0.0;
  for (long j = 1; j <= n_grid; ++j) {
    s = (s * step).eval();
    const double tau = j == n_grid ? t : j * h;
    const Complex z = (s * rho0.matrix()).trace();
    if (std::abs(z) < kNodalThreshold) throw NodalPointError(nodal_message(tau, std::abs(z)));
    const double principal = std::arg(z);
    const double jump = wrap_phase(principal - previous);
    if (std::abs(jump) >= kPi / 2) {
      throw GridTooCoarseError("phase_curve: phase increment of " + std::to_string(jump) +
                               " rad at t = " + std::to_string(tau) + "; increase n_grid");
    }
    unwrapped += jump;
    previous = principal;
    curve.times.push_back(tau);
    curve.total_unwrapped.push_back(unwrapped);
    curve.visibility.push_back(std::abs(z));
  }
  return curve;
}

double dynamical_phase(const LindbladModel& model, const Trajectory& traj) {
  if (traj.states.empty() || traj.states.size() != traj.times.size()) {
    throw PreconditionError("dynamical_phase: trajectory is empty or inconsistent");
  }
  const std::size_t n = traj.states.size() - 1;  // interval count
  if (n == 0) return 0.0;
  const double h = traj.step();
  for (std::size_t j = 1; j <= n; ++j) {
    if (std::abs((traj.times[j] - traj.times[j - 1]) - h) > 1e-9 * std::max(1.0, h)) {
      throw PreconditionError("dynamical_phase: trajectory grid is not uniform");
    }
  }

  std::vector<double> f(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (traj.states[j].dim() != model.dim()) throw DimensionError("dynamical_phase: dimension mismatch");
    f[j] = energy(model.hamiltonian(), traj.states[j].matrix());
  }

  const std::size_t simpson_end = n % 2 == 0 ? n : n - 1;
  double integral = 0.0;
  if (simpson_end > 0) {
    double acc = f[0] + f[simpson_end];
    for (std::size_t j = 1; j < simpson_end; ++j) acc += (j % 2 == 1 ? 4.0 : 2.0) * f[j];
    integral = acc * h / 3.0;
  }
  if (simpson_end != n) integral += 0.5 * h * (f[n - 1] + f[n]);
  return -integral / model.hbar();
}

PhaseReport phase_report(const LindbladModel& model, const Trajectory& traj) {
  if (traj.states.empty()) throw PreconditionError("phase_report: empty trajectory");
  const DensityMatrix& rho0 = traj.states.front();
  const double t = traj.horizon();

  PhaseReport report;
  report.t = t;
  if (t == 0.0) return report;

  const long n = static_cast<long>(traj.times.size()) - 1;
  const PhaseCurve curve = phase_curve(model, rho0, t, n);
  const Pancharatnam end = pancharatnam(model, rho0, t);
  // Snap the unwrapped endpoint onto the branch of the directly computed value.
  const double turns = std::round((curve.total_unwrapped.back() - end.phase) / (2.0 * kPi));

  report.total = end.phase + 2.0 * kPi * turns;
  report.total_principal = end.phase;
  report.visibility = end.visibility;
  report.dynamical = dynamical_phase(model, traj);
  report.geometric = report.total - report.dynamical;
  report.geometric_wrapped = wrap_phase(report.geometric);
  return report;
}

PhaseReport phase_report(const LindbladModel& model, const DensityMatrix& rho0, double t,
                         double dt) {
  if (!(t >= 0.0)) throw PreconditionError("phase_report: t must be non-negative");
  if (rho0.dim() != model.dim()) throw DimensionError("phase_report: state dimension mismatch");
  if (t == 0.0) return PhaseReport{};
  return phase_report(model, evolve(model, rho0, t, dt));
}

ParallelTransportReport parallel_transport_check(const LindbladModel& model,
                                                 const Trajectory& traj, double tol) {
  ParallelTransportReport report;
  for (const auto& rho : traj.states) {
    if (rho.dim() != model.dim()) throw DimensionError("parallel_transport_check: dimension mismatch");
    report.max_abs_energy =
        std::max(report.max_abs_energy, std::abs(energy(model.hamiltonian(), rho.matrix())));
  }
  report.pass = report.max_abs_energy <= tol;
  return report;
}

}  // namespace cpphase
