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

#include "cpphase/interferometer.hpp"

#include <cmath>

namespace cpphase {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

namespace path {

ComplexMatrix mirror() { return mat2(0.0, kI, kI, 0.0); }

ComplexMatrix beam_splitter() { return mat2(1.0, kI, kI, 1.0) / std::sqrt(2.0); }

ComplexMatrix phase_shifter(double chi) { return mat2(std::polar(1.0, chi), 0.0, 0.0, 1.0); }

ComplexMatrix projector(Index arm) {
  if (arm != 0 && arm != 1) throw DimensionError("path::projector: arm must be 0 or 1");
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(arm, arm) = 1.0;
  return p;
}

}  // namespace path

InterferometerSetup InterferometerSetup::from_dilation(const Dilation& dilation, double chi) {
  InterferometerSetup setup;
  setup.chi = chi;
  setup.internal_dim = dilation.internal_dim;
  setup.probe_dim = dilation.probe_dim;
  setup.probe_unitary = dilation.unitary;
  setup.pointer_basis = ComplexMatrix::Identity(dilation.probe_dim, dilation.probe_dim);
  return setup;
}

void InterferometerSetup::validate() const {
  const Index n = internal_dim * probe_dim;
  if (internal_dim < 1 || probe_dim < 1 || probe_unitary.rows() != n || probe_unitary.cols() != n) {
    throw DimensionError("InterferometerSetup: U_ip must act on H_i (x) H_p");
  }
  if (pointer_basis.rows() != probe_dim || pointer_basis.cols() != probe_dim) {
    throw DimensionError("InterferometerSetup: pointer basis must span H_p");
  }
  if (unitarity_defect(probe_unitary) > 1e-10) {
    throw PreconditionError("InterferometerSetup: U_ip is not unitary");
  }
  if (unitarity_defect(pointer_basis) > 1e-12) {
    throw PreconditionError("InterferometerSetup: pointer basis is not orthonormal");
  }
}

ComplexMatrix composed_evolution(const InterferometerSetup& setup) {
  setup.validate();
  const Index n = setup.internal_dim * setup.probe_dim;
  return kron(path::projector(1), setup.probe_unitary) +
         std::polar(1.0, setup.chi) * kron(path::projector(0), ComplexMatrix::Identity(n, n));
}

KrausSet measurement_operators(const InterferometerSetup& setup) {
  setup.validate();
  const Index d = setup.internal_dim;
  const ComplexMatrix basis_change = kron(ComplexMatrix::Identity(d, d), setup.pointer_basis);
  // In the rotated basis |zeta_n> becomes e_n, so the blocks are standard.
  const ComplexMatrix rotated = basis_change.adjoint() * setup.probe_unitary * basis_change;
  return KrausSet(dilation_blocks(rotated, d, setup.probe_dim));
}

ComplexMatrix circuit_output(const InterferometerSetup& setup, const DensityMatrix& rho_i0) {
  setup.validate();
  if (rho_i0.dim() != setup.internal_dim) throw DimensionError("circuit_output: state dimension mismatch");
  const Index n = setup.internal_dim * setup.probe_dim;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix splitter = kron(path::beam_splitter(), id);
  const ComplexMatrix gates =
      splitter * kron(path::mirror(), id) * composed_evolution(setup) * splitter;

  const ComplexVector zeta0 = setup.pointer_basis.col(0);
  const ComplexMatrix input =
      kron(kron(path::projector(0), rho_i0.matrix()), ComplexMatrix(zeta0 * zeta0.adjoint()));
  return gates * input * gates.adjoint();
}

double NullOutcomeIntensity::operator()(double chi) const {
  return constant + amplitude * std::cos(chi - phase);
}

double SelectiveIntensities::total(double chi) const {
  double sum = null_outcome(chi);
  for (const auto& [n, value] : clicks) sum += value;
  return sum;
}

SelectiveIntensities selective_intensities(const KrausSet& kraus, const DensityMatrix& rho_i0) {
  if (rho_i0.dim() != kraus.dim()) throw DimensionError("selective_intensities: dimension mismatch");
  const ComplexMatrix& rho = rho_i0.matrix();
  SelectiveIntensities out;
  const ComplexMatrix& w0 = kraus.op(0);
  const Complex z = (w0 * rho).trace();
  out.null_outcome.visibility = std::abs(z);
  out.null_outcome.phase = std::arg(z);
  out.null_outcome.amplitude = 0.5 * std::abs(z);
  out.null_outcome.constant = 0.25 * (1.0 + (w0.adjoint() * w0 * rho).trace().real());
  for (std::size_t n = 1; n < kraus.size(); ++n) {
    const ComplexMatrix& w = kraus.op(n);
    out.clicks.emplace_back(n, 0.25 * (w.adjoint() * w * rho).trace().real());
  }
  return out;
}

ComplexMatrix assemble_output(const ComplexMatrix& rho0, const ComplexMatrix& rho_t,
                              const ComplexMatrix& propagator, double chi) {
  const Index d = rho0.rows();
  if (rho0.cols() != d || rho_t.rows() != d || rho_t.cols() != d || propagator.rows() != d ||
      propagator.cols() != d) {
    throw DimensionError("assemble_output: operands differ in dimension");
  }
  const Complex e = std::polar(1.0, chi);
  const Complex ec = std::conj(e);
  const ComplexMatrix initial = mat2(1.0, kI, -kI, 1.0);
  const ComplexMatrix left = mat2(e, -kI * e, -kI * e, -e);
  const ComplexMatrix right = mat2(ec, kI * ec, kI * ec, -ec);
  const ComplexMatrix evolved = mat2(1.0, -kI, kI, 1.0);
  return 0.25 * (kron(initial, rho0) + kron(left, ComplexMatrix(rho0 * propagator.adjoint())) +
                 kron(right, ComplexMatrix(propagator * rho0)) + kron(evolved, rho_t));
}

DensityMatrix output_state(const LindbladModel& model, const DensityMatrix& rho_i0, double t,
                           double chi, double dt) {
  if (rho_i0.dim() != model.dim()) throw DimensionError("output_state: state dimension mismatch");
  if (!(t >= 0.0)) throw PreconditionError("output_state: t must be non-negative");
  const ComplexMatrix rho_t = t == 0.0 ? rho_i0.matrix() : evolve(model, rho_i0, t, dt).final_state().matrix();
  const ComplexMatrix out =
      assemble_output(rho_i0.matrix(), rho_t, effective_propagator(model, t), chi);
  return DensityMatrix(hermitian_part(out));
}

DensityMatrix output_state(const LindbladModel& model, const Trajectory& traj, double chi) {
  if (traj.states.empty()) throw PreconditionError("output_state: empty trajectory");
  const DensityMatrix& rho0 = traj.states.front();
  if (rho0.dim() != model.dim()) throw DimensionError("output_state: state dimension mismatch");
  const ComplexMatrix out = assemble_output(rho0.matrix(), traj.final_state().matrix(),
                                            effective_propagator(model, traj.horizon()), chi);
  return DensityMatrix(hermitian_part(out));
}

DetectorReading detector_intensity(const ComplexMatrix& rho_out) {
  if (rho_out.rows() != rho_out.cols() || rho_out.rows() < 2 || rho_out.rows() % 2 != 0) {
    throw DimensionError("detector_intensity: state must act on path (x) internal");
  }
  const Index d = rho_out.rows() / 2;
  DetectorReading r;
  r.raw = rho_out.topLeftCorner(d, d).trace().real();
  const double tr = rho_out.trace().real();
  r.normalized = r.raw / tr;
  return r;
}

DetectorReading detector_intensity(const DensityMatrix& rho_out) {
  return detector_intensity(rho_out.matrix());
}

}  // namespace cpphase
