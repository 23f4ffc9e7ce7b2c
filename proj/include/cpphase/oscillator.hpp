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

// Zero-temperature damped harmonic oscillator on a truncated Fock space:
//   d rho/dt = -i omega [a^+ a, rho] + k (2 a rho a^+ - a^+ a rho - rho a^+ a),
// i.e. H = hbar omega a^+ a and a single jump operator sqrt(2k) a. A coherent
// state stays coherent with amplitude alpha e^{-(i omega + k) t}, which gives
// closed forms for every phase.

#pragma once

#include <optional>

#include "cpphase/lindblad.hpp"

namespace cpphase {

struct OscillatorParams {
  Complex alpha{0.0, 0.0};
  double omega = 1.0;
  double k = 0.0;
  Index cutoff = 0;

  /// ceil(|alpha|^2 + 6 |alpha| + 10).
  static Index default_cutoff(Complex alpha);

  /// Validates omega > 0 and k >= 0. An explicit cutoff below the default
  /// rule is accepted with a warning on stderr.
  static OscillatorParams make(Complex alpha, double omega, double k,
                               std::optional<Index> cutoff = std::nullopt);
};

struct FockOperators {
  ComplexMatrix annihilation;  // a|n> = sqrt(n) |n-1>
  ComplexMatrix creation;
  ComplexMatrix number;  // diag(0, ..., cutoff-1)
};

/// Throws PreconditionError for cutoff < 2.
FockOperators fock_operators(Index cutoff);

/// Poisson tail 1 - sum_{n<cutoff} e^{-|alpha|^2} |alpha|^{2n} / n!.
double coherent_leakage(Complex alpha, Index cutoff);

/// Normalized truncated |alpha><alpha|. Throws PreconditionError when the
/// truncation leakage exceeds 1e-10.
DensityMatrix coherent_state(Complex alpha, Index cutoff);
ComplexVector coherent_vector(Complex alpha, Index cutoff);

LindbladModel damped_model(const OscillatorParams& p, double hbar = 1.0);

/// alpha e^{-(i omega + k) tau}.
Complex coherent_amplitude(const OscillatorParams& p, double tau);

struct PhaseTriple {
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
};

/// phi = -|alpha|^2 e^{-kt} sin(omega t),
/// gamma_d = -(omega / 2k) |alpha|^2 (1 - e^{-2kt})  (-> -omega |alpha|^2 t as k -> 0),
/// gamma_g = phi - gamma_d.
PhaseTriple analytic_phases(const OscillatorParams& p, double t);

struct HomodyneShift {
  Complex beta{0.0, 0.0};
};

/// H' = H - (i hbar / 2)(beta^* V - beta V^+), V' = V + beta for the jump
/// operator at `channel`; the other channels are untouched. The master
/// equation is invariant under this map.
LindbladModel homodyne_transform(const LindbladModel& model, const HomodyneShift& shift,
                                 std::size_t channel = 0);

/// Signed shoelace area (counterclockwise positive) of the amplitude spiral
/// sampled at n_samples points over [0, t], closed by the chord back to alpha.
double spiral_area(const OscillatorParams& p, double t, long n_samples);

}  // namespace cpphase
