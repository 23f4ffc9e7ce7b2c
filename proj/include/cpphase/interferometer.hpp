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

// Mach-Zehnder interferometer with a meter in arm 1.
//
// Path states |0~>, |1~> index the first tensor factor. The composed state
// lives on path (x) internal (x) probe, with the probe traced out analytically
// for the continuous-measurement output state.

#pragma once

#include <utility>
#include <vector>

#include "cpphase/lindblad.hpp"

namespace cpphase {

namespace path {

/// Mirror pair [[0, i], [i, 0]].
ComplexMatrix mirror();
/// Balanced beam splitter [[1, i], [i, 1]] / sqrt(2).
ComplexMatrix beam_splitter();
/// U(1) shift diag(e^{i chi}, 1) on arm 0.
ComplexMatrix phase_shifter(double chi);
/// |n~><n~|.
ComplexMatrix projector(Index arm);

}  // namespace path

struct InterferometerSetup {
  double chi = 0.0;
  Index internal_dim = 1;
  Index probe_dim = 1;
  ComplexMatrix probe_unitary;  // U_ip on H_i (x) H_p, layout i * probe_dim + p
  ComplexMatrix pointer_basis;  // columns |zeta_n>, column 0 is the quiescent state

  /// Standard pointer basis around a dilation.
  static InterferometerSetup from_dilation(const Dilation& dilation, double chi);

  /// Throws PreconditionError unless U_ip is unitary to 1e-10 and the
  /// pointer basis orthonormal to 1e-12.
  void validate() const;
};

/// U = P_1 (x) U_ip + e^{i chi} P_0 (x) 1_i (x) 1_p.
ComplexMatrix composed_evolution(const InterferometerSetup& setup);

/// W_n = <zeta_n| U_ip |zeta_0> in the setup's pointer basis.
KrausSet measurement_operators(const InterferometerSetup& setup);

/// State on path (x) internal (x) probe at the detector for input
/// |0~><0~| (x) rho_i0 (x) |zeta_0><zeta_0|, propagated through
/// U_B, then U, then U_M, then U_B.
ComplexMatrix circuit_output(const InterferometerSetup& setup, const DensityMatrix& rho_i0);

/// Null-outcome detector intensity c + a cos(chi - phase) with
/// c = (1 + tr(W_0^+ W_0 rho)) / 4, a = visibility / 2, visibility = |tr(W_0 rho)|.
struct NullOutcomeIntensity {
  double constant = 0.0;
  double amplitude = 0.0;
  double visibility = 0.0;
  double phase = 0.0;

  double operator()(double chi) const;
};

struct SelectiveIntensities {
  NullOutcomeIntensity null_outcome;
  /// (n, tr(W_n^+ W_n rho) / 4) for n >= 1; independent of chi.
  std::vector<std::pair<std::size_t, double>> clicks;

  /// Sum over all outcomes, i.e. the non-selective intensity.
  double total(double chi) const;
};

SelectiveIntensities selective_intensities(const KrausSet& kraus, const DensityMatrix& rho_i0);

/// Assembles the detector state on path (x) internal from rho(0), rho(t),
/// S(t) rho(0) and rho(0) S^+(t).
ComplexMatrix assemble_output(const ComplexMatrix& rho0, const ComplexMatrix& rho_t,
                              const ComplexMatrix& propagator, double chi);

/// Output state after continuous measurement over [0, t]; rho(t) comes from
/// evolve with step dt.
DensityMatrix output_state(const LindbladModel& model, const DensityMatrix& rho_i0, double t,
                           double chi, double dt = 1e-3);

/// Same, reusing the end points of an existing trajectory.
DensityMatrix output_state(const LindbladModel& model, const Trajectory& traj, double chi);

struct DetectorReading {
  double raw = 0.0;         // tr[(|0~><0~| (x) 1) rho_out]
  double normalized = 0.0;  // raw / tr rho_out; the bare interferometer peaks at 1
};

DetectorReading detector_intensity(const ComplexMatrix& rho_out);
DetectorReading detector_intensity(const DensityMatrix& rho_out);

}  // namespace cpphase
