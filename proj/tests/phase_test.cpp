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

#include <gtest/gtest.h>

#include <numbers>

#include "cpphase/oscillator.hpp"
#include "test_util.hpp"

namespace cpphase {
namespace {

using testing::pauli_z;

constexpr double kPi = std::numbers::pi;

struct Damped {
  OscillatorParams p;
  LindbladModel model;
  DensityMatrix rho0;

  explicit Damped(Complex alpha, double omega = 1.0, double k = 0.1)
      : p(OscillatorParams::make(alpha, omega, k)),
        model(damped_model(p)),
        rho0(coherent_state(p.alpha, p.cutoff)) {}
};

TEST(WrapPhase, range) {
  EXPECT_DOUBLE_EQ(wrap_phase(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_phase(-kPi), kPi);
  EXPECT_NEAR(wrap_phase(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(wrap_phase(-7.0), -7.0 + 2 * kPi, 1e-15);
}

TEST(Pancharatnam, zero_time) {
  const Damped d(1.0);
  const Pancharatnam r = pancharatnam(d.model, d.rho0, 0.0);
  EXPECT_EQ(r.phase, 0.0);
  EXPECT_NEAR(r.visibility, 1.0, 1e-15);
}

TEST(Pancharatnam, damped_oscillator_closed_form) {
  const Damped d(1.0);
  const double t = kPi / 2;
  const Pancharatnam r = pancharatnam(d.model, d.rho0, t);
  // phi = -|alpha|^2 e^{-kt} sin(wt); nu from the Fock-basis sum.
  EXPECT_NEAR(r.phase, -std::exp(-0.05 * kPi), 1e-12);
  EXPECT_NEAR(r.phase, -0.85464, 5e-6);
  const auto c = testing::coherent_amplitudes(1.0, static_cast<int>(d.p.cutoff));
  Complex z = 0.0;
  for (int n = 0; n < static_cast<int>(c.size()); ++n)
    z += std::norm(c[n]) * std::exp(-Complex(0.1, 1.0) * double(n) * t);
  EXPECT_NEAR(r.visibility, std::abs(z), 1e-12);
  EXPECT_NEAR(r.visibility, std::exp(-1.0), 1e-10);
}

TEST(Pancharatnam, nodal_point) {
  // sigma_z on |+>: tr[U rho] = cos t vanishes at pi/2.
  const LindbladModel model(pauli_z());
  EXPECT_THROW(pancharatnam(model, DensityMatrix(testing::plus_state()), kPi / 2), NodalPointError);
}

TEST(Pancharatnam, sjoqvist_mixed_state_phase) {
  const LindbladModel model(pauli_z());
  for (double p : {0.1, 0.3, 0.8}) {
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = p;
    rho(1, 1) = 1.0 - p;
    for (double t : {0.3, 1.0, 2.0}) {
      const Complex expected = p * std::exp(Complex(0, -t)) + (1.0 - p) * std::exp(Complex(0, t));
      const Pancharatnam r = pancharatnam(model, DensityMatrix(rho), t);
      EXPECT_NEAR(r.phase, std::arg(expected), 1e-10);
      EXPECT_NEAR(r.visibility, std::abs(expected), 1e-10);
    }
  }
}

TEST(PhaseCurve, trivial_model_is_flat) {
  const LindbladModel model(ComplexMatrix::Zero(2, 2));
  const PhaseCurve c = phase_curve(model, testing::random_density(2), 3.0, 30);
  ASSERT_EQ(c.times.size(), 31u);
  for (double v : c.total_unwrapped) EXPECT_EQ(v, 0.0);
}

TEST(PhaseCurve, unwraps_beyond_pi) {
  const Damped d(2.0, 1.0, 0.05);
  const double t = 2 * kPi;
  const PhaseCurve c = phase_curve(d.model, d.rho0, t, 2000);
  double largest = 0.0;
  for (std::size_t j = 0; j < c.times.size(); ++j) {
    const double tau = c.times[j];
    const double expected = -4.0 * std::exp(-0.05 * tau) * std::sin(tau);
    EXPECT_NEAR(c.total_unwrapped[j], expected, 1e-4) << "tau " << tau;
    largest = std::max(largest, std::abs(c.total_unwrapped[j]));
    if (j > 0) EXPECT_LT(std::abs(c.total_unwrapped[j] - c.total_unwrapped[j - 1]), kPi);
  }
  EXPECT_GT(largest, kPi);
  EXPECT_EQ(c.total_unwrapped.front(), 0.0);
}

TEST(PhaseCurve, endpoint_agrees_with_principal_value) {
  const Damped d(2.0, 1.0, 0.05);
  for (double t : {1.0, 2.0, 4.0}) {
    const PhaseCurve c = phase_curve(d.model, d.rho0, t, 1000);
    const double principal = pancharatnam(d.model, d.rho0, t).phase;
    EXPECT_NEAR(wrap_phase(c.total_unwrapped.back() - principal), 0.0, 1e-10);
  }
}

TEST(PhaseCurve, coarse_grid_is_rejected) {
  const Damped d(2.0, 1.0, 0.05);
  EXPECT_THROW(phase_curve(d.model, d.rho0, 2 * kPi, 3), GridTooCoarseError);
}

TEST(DynamicalPhase, zero_hamiltonian) {
  const LindbladModel model(ComplexMatrix::Zero(2, 2), {testing::random_matrix(2, 2)});
  const Trajectory traj = evolve(model, testing::random_density(2), 1.0, 0.01);
  EXPECT_EQ(dynamical_phase(model, traj), 0.0);
}

TEST(DynamicalPhase, damped_oscillator_closed_form) {
  const Damped d(1.0);
  const Trajectory traj = evolve(d.model, d.rho0, kPi / 2, 1e-3);
  const double expected = -5.0 * (1.0 - std::exp(-0.1 * kPi));
  EXPECT_NEAR(dynamical_phase(d.model, traj), expected, 1e-9);
  EXPECT_NEAR(expected, -1.34799, 5e-6);
}

TEST(DynamicalPhase, constant_energy) {
  const LindbladModel model(pauli_z(), {}, 1.0);
  const Trajectory traj = evolve(model, DensityMatrix::pure(testing::basis(2, 0)), 1.7, 0.01);
  EXPECT_NEAR(dynamical_phase(model, traj), -1.7, 1e-12);
  const LindbladModel scaled(pauli_z(), {}, 2.0);
  EXPECT_NEAR(dynamical_phase(scaled, evolve(scaled, DensityMatrix::pure(testing::basis(2, 0)), 1.7, 0.01)),
              -0.85, 1e-12);
}

TEST(DynamicalPhase, odd_interval_count_uses_trapezoid_tail) {
  // f(tau) = e^{-2k tau} energy decay; 7 intervals exercise the fallback.
  const Damped d(1.0);
  const Trajectory traj = evolve(d.model, d.rho0, 0.07, 0.01);
  ASSERT_EQ(traj.times.size(), 8u);
  const double expected = -5.0 * (1.0 - std::exp(-0.014));
  EXPECT_NEAR(dynamical_phase(d.model, traj), expected, 1e-5);
}

TEST(PhaseReport, damped_oscillator_decomposition) {
  const Damped d(1.0);
  const PhaseReport r = phase_report(d.model, d.rho0, kPi / 2, 1e-3);
  EXPECT_NEAR(r.geometric, 0.49335, 5e-6);
  EXPECT_EQ(r.geometric + r.dynamical, r.total);
  EXPECT_GE(r.visibility, 0.0);
  EXPECT_LE(r.visibility, 1.0 + 1e-10);
}

TEST(PhaseReport, zero_time) {
  const Damped d(1.0);
  const PhaseReport r = phase_report(d.model, d.rho0, 0.0, 1e-3);
  EXPECT_EQ(r.total, 0.0);
  EXPECT_EQ(r.dynamical, 0.0);
  EXPECT_EQ(r.geometric, 0.0);
  EXPECT_EQ(r.visibility, 1.0);
}

TEST(PhaseReport, parallel_transported_unitary_case_is_geometric) {
  // H = diag(1, -p/(1-p)) has tr[H rho] = 0 on diag(p, 1-p) and commutes with it.
  const double p = 0.3;
  ComplexMatrix h = ComplexMatrix::Zero(2, 2), rho = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -p / (1.0 - p);
  rho(0, 0) = p;
  rho(1, 1) = 1.0 - p;
  const LindbladModel model(h);
  const double t = 2.0;
  const Trajectory traj = evolve(model, DensityMatrix(rho), t, 1e-3);
  EXPECT_TRUE(parallel_transport_check(model, traj, 1e-10).pass);
  const PhaseReport r = phase_report(model, traj);
  EXPECT_NEAR(r.dynamical, 0.0, 1e-12);
  EXPECT_NEAR(r.geometric, r.total, 1e-12);
  const Complex expected = p * std::exp(Complex(0, -t)) + (1 - p) * std::exp(Complex(0, t * p / (1 - p)));
  EXPECT_NEAR(r.total_principal, std::arg(expected), 1e-10);
  EXPECT_GT(std::abs(r.total), 0.1);
}

TEST(PhaseReport, identity_holds_on_random_models) {
  for (int trial = 0; trial < 5; ++trial) {
    const LindbladModel model(testing::random_hermitian(3, 0.5), {testing::random_matrix(3, 3, 0.2)});
    const PhaseReport r = phase_report(model, testing::random_density(3), 0.8, 1e-2);
    EXPECT_EQ(r.geometric, r.total - r.dynamical);
    EXPECT_LE(r.visibility, 1.0 + 1e-10);
    EXPECT_NEAR(r.geometric_wrapped, wrap_phase(r.geometric), 0.0);
  }
}

TEST(ParallelTransport, zero_hamiltonian_passes) {
  const LindbladModel model(ComplexMatrix::Zero(2, 2));
  const Trajectory traj = evolve(model, testing::random_density(2), 1.0, 0.1);
  const auto r = parallel_transport_check(model, traj, 1e-12);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.max_abs_energy, 0.0);
  EXPECT_EQ(r.note, "necessary condition only");
}

TEST(ParallelTransport, off_diagonal_state_passes) {
  const LindbladModel model(pauli_z());
  const Trajectory traj = evolve(model, DensityMatrix(testing::plus_state()), 1.0, 0.01);
  EXPECT_TRUE(parallel_transport_check(model, traj, 1e-12).pass);
}

TEST(ParallelTransport, damped_oscillator_fails_with_decaying_energy) {
  const Damped d(1.0);
  const Trajectory traj = evolve(d.model, d.rho0, 1.0, 1e-2);
  const auto r = parallel_transport_check(d.model, traj, 1e-6);
  EXPECT_FALSE(r.pass);
  // Oracle: hbar w |alpha|^2 e^{-2k tau} is largest at tau = 0.
  EXPECT_NEAR(r.max_abs_energy, 1.0, 1e-10);
  const ComplexMatrix h = d.model.hamiltonian();
  for (std::size_t j = 0; j < traj.times.size(); ++j) {
    EXPECT_NEAR((h * traj.states[j].matrix()).trace().real(), std::exp(-0.2 * traj.times[j]), 1e-9);
  }
}

}  // namespace
}  // namespace cpphase
