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

// Completely positive dynamics: the Lindblad generator, fixed-step trajectory
// integration, the no-jump propagator S(t), infinitesimal measurement
// operators and their unitary dilation onto an internal (x) probe space.

#pragma once

#include <optional>
#include <vector>

#include "cpphase/numerics.hpp"

namespace cpphase {

/// H, {V_n} and hbar of
///   d rho/dt = (1/i hbar)[H, rho] + 1/2 sum_n (2 V_n rho V_n^+ - rho V_n^+ V_n - V_n^+ V_n rho).
class LindbladModel {
 public:
  /// Throws DimensionError if the operators disagree on dimension and
  /// PreconditionError if H is not Hermitian to 1e-10 or hbar <= 0.
  explicit LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jump_ops = {},
                         double hbar = 1.0);

  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<ComplexMatrix>& jump_ops() const { return jump_ops_; }
  double hbar() const { return hbar_; }
  Index dim() const { return hamiltonian_.rows(); }

  /// sum_n V_n^+ V_n.
  const ComplexMatrix& damping() const { return damping_; }

  /// G = (i/hbar) H + 1/2 sum_n V_n^+ V_n, so that S(t) = exp(-G t).
  const ComplexMatrix& no_jump_generator() const { return generator_; }

 private:
  ComplexMatrix hamiltonian_;
  std::vector<ComplexMatrix> jump_ops_;
  double hbar_;
  ComplexMatrix damping_;
  ComplexMatrix generator_;
};

/// Uniform-grid solution of the master equation; times[0] == 0.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;

  double step() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  double horizon() const { return times.empty() ? 0.0 : times.back(); }
  const DensityMatrix& final_state() const { return states.back(); }
};

/// Measurement operators {W_n} together with ||sum_n W_n^+ W_n - 1||_F.
class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> ops);

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  const ComplexMatrix& op(std::size_t n) const { return ops_.at(n); }
  std::size_t size() const { return ops_.size(); }
  Index dim() const { return ops_.front().rows(); }
  double completeness_defect() const { return defect_; }

  /// Bound C dt^2 declared by kraus_step, with C reported separately.
  std::optional<double> declared_bound;
  std::optional<double> defect_coefficient;

 private:
  std::vector<ComplexMatrix> ops_;
  double defect_;
};

/// N repetitions of a measurement of duration dt.
class MeasurementSchedule {
 public:
  MeasurementSchedule(double dt, long steps);

  /// Chooses N = round(t / dt) (at least 1) and adjusts dt so that N dt == t.
  static MeasurementSchedule for_horizon(double t, double dt);

  double dt() const { return dt_; }
  long steps() const { return steps_; }
  double horizon() const { return dt_ * static_cast<double>(steps_); }

 private:
  double dt_;
  long steps_;
};

/// Dilation of a Kraus set to a unitary on H_i (x) H_p with probe_dim = #ops.
/// Index layout is i * probe_dim + p.
struct Dilation {
  ComplexMatrix unitary;
  Index internal_dim = 0;
  Index probe_dim = 0;
};

ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho);
ComplexMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho);

/// Classical fourth-order Runge-Kutta on a uniform grid of ceil(t/dt) steps
/// (the step is shrunk so that the grid ends exactly at t). Each state is
/// re-symmetrized. Throws IntegrationError if a state leaves the density
/// cone by more than 1e-6 or the trace drifts by more than 1e-8.
Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0, double t, double dt);

/// S(t) = exp[-((i/hbar) H + 1/2 sum V^+ V) t]; S(0) is the identity.
ComplexMatrix effective_propagator(const LindbladModel& model, double t);

/// W_0 = 1 - G dt, W_n = V_n sqrt(dt). Requires ||G dt||_2 < 1.
/// The completeness defect equals ||G^+ G||_F dt^2, which is declared as the bound.
KrausSet kraus_step(const LindbladModel& model, double dt);

/// sum_n W_n rho W_n^+ without renormalization.
ComplexMatrix apply_kraus_raw(const KrausSet& kraus, const ComplexMatrix& rho);

/// sum_n W_n rho W_n^+ divided by its trace. Throws DegenerateMapError on zero trace.
DensityMatrix apply_kraus(const KrausSet& kraus, const DensityMatrix& rho);

/// N-fold repetition of the non-selective measurement kraus_step(model, dt).
DensityMatrix compose_nonselective(const LindbladModel& model, const DensityMatrix& rho0,
                                   const MeasurementSchedule& schedule);

/// Unitary U with <zeta_n| U |zeta_0> = W_n M^{-1/2}, M = sum W^+ W. The
/// remaining columns are an arbitrary orthonormal completion.
/// Throws PreconditionError when the completeness defect exceeds max_defect.
Dilation dilate(const KrausSet& kraus, double max_defect = 1e-6);

/// Blocks <e_n| U |e_0> of a unitary on H_i (x) H_p in the standard pointer basis.
std::vector<ComplexMatrix> dilation_blocks(const ComplexMatrix& unitary, Index internal_dim,
                                           Index probe_dim);

}  // namespace cpphase
