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

// Total, dynamical and geometric phases of a state under CP evolution.
//
// The total phase between rho(0) and rho(t) is arg tr[S(t) rho(0)] and the
// fringe visibility is |tr[S(t) rho(0)]|. The dynamical phase integrates the
// energy along the non-selective trajectory and the geometric phase is the
// remainder.

#pragma once

#include <string>
#include <vector>

#include "cpphase/lindblad.hpp"

namespace cpphase {

/// Below this visibility the phase is reported as undefined.
inline constexpr double kNodalThreshold = 1e-12;

struct Pancharatnam {
  double phase = 0.0;       // arg z in (-pi, pi]
  double visibility = 0.0;  // |z|
  Complex overlap{1.0, 0.0};  // z = tr[S(t) rho0]
};

/// Continuous branch of the total phase on tau_j = j t / n_grid, j = 0..n_grid.
struct PhaseCurve {
  std::vector<double> times;
  std::vector<double> total_unwrapped;
  std::vector<double> visibility;
};

struct PhaseReport {
  double t = 0.0;
  double total = 0.0;  // unwrapped from tau = 0
  double total_principal = 0.0;
  double visibility = 1.0;
  double dynamical = 0.0;
  double geometric = 0.0;  // total - dynamical
  double geometric_wrapped = 0.0;  // geometric reduced to (-pi, pi]
};

struct ParallelTransportReport {
  double max_abs_energy = 0.0;  // max_tau |tr[H rho(tau)]|
  bool pass = false;
  /// tr[H rho] = 0 is necessary for parallel transport, not sufficient.
  std::string note = "necessary condition only";
};

/// Maps an angle onto (-pi, pi].
double wrap_phase(double angle);

/// Throws NodalPointError when the visibility is below kNodalThreshold.
Pancharatnam pancharatnam(const LindbladModel& model, const DensityMatrix& rho0, double t);

/// Unwraps by nearest branch from tau = 0. Throws GridTooCoarseError if an
/// adjacent principal-value increment reaches pi/2, and NodalPointError if
/// any sample is nodal.
PhaseCurve phase_curve(const LindbladModel& model, const DensityMatrix& rho0, double t,
                       long n_grid);

/// -(1/hbar) int_0^t tr[rho(tau) H] dtau by composite Simpson on the
/// trajectory grid (trapezoid on the last interval when the count is odd).
double dynamical_phase(const LindbladModel& model, const Trajectory& traj);

/// Phases over an existing trajectory; rho0 is traj.states.front(). The
/// model's H enters both S(t) and the dynamical integral, which lets a
/// transformed model be evaluated along the original state curve.
PhaseReport phase_report(const LindbladModel& model, const Trajectory& traj);

/// Integrates the master equation with step dt and reports the phases at t.
/// t = 0 gives zero phases and unit visibility.
PhaseReport phase_report(const LindbladModel& model, const DensityMatrix& rho0, double t,
                         double dt);

ParallelTransportReport parallel_transport_check(const LindbladModel& model,
                                                 const Trajectory& traj, double tol);

}  // namespace cpphase
