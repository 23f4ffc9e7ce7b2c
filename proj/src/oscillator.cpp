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

#include "cpphase/oscillator.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace cpphase {

namespace {

constexpr double kLeakageBound = 1e-10;

}  // namespace

Index OscillatorParams::default_cutoff(Complex alpha) {
  const double r = std::abs(alpha);
  return static_cast<Index>(std::ceil(r * r + 6.0 * r + 10.0));
}

OscillatorParams OscillatorParams::make(Complex alpha, double omega, double k,
                                        std::optional<Index> cutoff) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw PreconditionError("oscillator: omega must be positive");
  if (!(k >= 0.0) || !std::isfinite(k)) throw PreconditionError("oscillator: k must be non-negative");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw PreconditionError("oscillator: alpha must be finite");
  }
  OscillatorParams p{alpha, omega, k, default_cutoff(alpha)};
  if (cutoff) {
    if (*cutoff < p.cutoff) {
      std::cerr << "warning: cutoff " << *cutoff << " is below the default rule (" << p.cutoff
                << ") for |alpha| = " << std::abs(alpha) << "\n";
    }
    p.cutoff = *cutoff;
  }
  return p;
}

FockOperators fock_operators(Index cutoff) {
  if (cutoff < 2) throw PreconditionError("fock_operators: cutoff must be at least 2");
  FockOperators ops;
  ops.annihilation = ComplexMatrix::Zero(cutoff, cutoff);
  for (Index n = 1; n < cutoff; ++n) ops.annihilation(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.creation = ops.annihilation.adjoint();
  ops.number = ComplexMatrix::Zero(cutoff, cutoff);
  for (Index n = 0; n < cutoff; ++n) ops.number(n, n) = static_cast<double>(n);
  return ops;
}

double coherent_leakage(Complex alpha, Index cutoff) {
  const double mean = std::norm(alpha);
  if (mean == 0.0) return 0.0;
  // Sum the tail directly in log space; 1 - (head) would cancel catastrophically.
  double tail = 0.0;
  for (Index n = cutoff; n < cutoff + 400; ++n) {
    const double term = std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
    tail += term;
    if (n > mean && term < 1e-30 * std::max(tail, 1e-300)) break;
  }
  return tail;
}

ComplexVector coherent_vector(Complex alpha, Index cutoff) {
  if (cutoff < 1) throw PreconditionError("coherent_state: cutoff must be positive");
  const double leak = coherent_leakage(alpha, cutoff);
  if (leak > kLeakageBound) {
    throw PreconditionError("coherent_state: cutoff " + std::to_string(cutoff) +
                            " leaks " + std::to_string(leak) + " of the norm; increase cutoff");
  }
  ComplexVector v(cutoff);
  Complex c = std::exp(-0.5 * std::norm(alpha));
  for (Index n = 0; n < cutoff; ++n) {
    v(n) = c;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return v / v.norm();
}

DensityMatrix coherent_state(Complex alpha, Index cutoff) {
  return DensityMatrix::pure(coherent_vector(alpha, cutoff));
}

LindbladModel damped_model(const OscillatorParams& p, double hbar) {
  const FockOperators ops = fock_operators(p.cutoff);
  std::vector<ComplexMatrix> jumps;
  jumps.push_back(std::sqrt(2.0 * p.k) * ops.annihilation);
  return LindbladModel(hbar * p.omega * ops.number, std::move(jumps), hbar);
}

Complex coherent_amplitude(const OscillatorParams& p, double tau) {
  return p.alpha * std::exp(-Complex(p.k, p.omega) * tau);
}

PhaseTriple analytic_phases(const OscillatorParams& p, double t) {
  const double n = std::norm(p.alpha);
  PhaseTriple out;
  out.total = -n * std::exp(-p.k * t) * std::sin(p.omega * t);
  // (1 - e^{-2kt}) / 2k, continuous at k = 0.
  const double decay_time = p.k == 0.0 ? t : -std::expm1(-2.0 * p.k * t) / (2.0 * p.k);
  out.dynamical = -p.omega * n * decay_time;
  out.geometric = out.total - out.dynamical;
  return out;
}

LindbladModel homodyne_transform(const LindbladModel& model, const HomodyneShift& shift,
                                 std::size_t channel) {
  if (channel >= model.jump_ops().size()) {
    throw PreconditionError("homodyne_transform: model has no jump operator " + std::to_string(channel));
  }
  const Complex beta = shift.beta;
  const ComplexMatrix& v = model.jump_ops()[channel];
  const Index n = model.dim();

  ComplexMatrix h = model.hamiltonian() -
                    Complex(0.0, 0.5 * model.hbar()) * (std::conj(beta) * v - beta * v.adjoint());
  std::vector<ComplexMatrix> jumps = model.jump_ops();
  jumps[channel] = v + beta * ComplexMatrix::Identity(n, n);
  return LindbladModel(std::move(h), std::move(jumps), model.hbar());
}

double spiral_area(const OscillatorParams& p, double t, long n_samples) {
  if (n_samples < 100) throw PreconditionError("spiral_area: n_samples must be at least 100");
  if (!(t >= 0.0)) throw PreconditionError("spiral_area: t must be non-negative");
  if (t == 0.0) return 0.0;
  // 1/2 sum Im(conj(z_j) z_{j+1}) over the closed polygon; the closing edge is the chord.
  const double h = t / static_cast<double>(n_samples - 1);
  double twice_area = 0.0;
  Complex prev = coherent_amplitude(p, 0.0);
  const Complex first = prev;
  for (long j = 1; j < n_samples; ++j) {
    const Complex z = coherent_amplitude(p, j == n_samples - 1 ? t : j * h);
    twice_area += (std::conj(prev) * z).imag();
    prev = z;
  }
  twice_area += (std::conj(prev) * first).imag();
  return 0.5 * twice_area;
}

}  // namespace cpphase
