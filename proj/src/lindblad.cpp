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

#include "cpphase/lindblad.hpp"

#include <cmath>
#include <string>

namespace cpphase {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_dim(const LindbladModel& model, const ComplexMatrix& rho, const char* where) {
  if (rho.rows() != model.dim() || rho.cols() != model.dim()) {
    throw DimensionError(std::string(where) + ": state dimension " + std::to_string(rho.rows()) +
                         " does not match model dimension " + std::to_string(model.dim()));
  }
}

double spectral_norm(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

LindbladModel::LindbladModel(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> jump_ops,
                             double hbar)
    : hamiltonian_(std::move(hamiltonian)), jump_ops_(std::move(jump_ops)), hbar_(hbar) {
  const Index n = hamiltonian_.rows();
  if (n < 1 || hamiltonian_.cols() != n) {
    throw DimensionError("LindbladModel: H must be square with dim >= 1");
  }
  if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) {
    throw PreconditionError("LindbladModel: hbar must be positive");
  }
  if (!hamiltonian_.allFinite()) throw PreconditionError("LindbladModel: H is not finite");
  const double scale = std::max(1.0, hamiltonian_.norm());
  if ((hamiltonian_ - hamiltonian_.adjoint()).norm() > 1e-10 * scale) {
    throw PreconditionError("LindbladModel: H is not Hermitian");
  }
  damping_ = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < jump_ops_.size(); ++k) {
    const auto& v = jump_ops_[k];
    if (v.rows() != n || v.cols() != n) {
      throw DimensionError("LindbladModel: jump operator " + std::to_string(k) +
                           " has the wrong dimension");
    }
    if (!v.allFinite()) throw PreconditionError("LindbladModel: jump operator is not finite");
    damping_.noalias() += v.adjoint() * v;
  }
  generator_ = (kI / hbar_) * hamiltonian_ + 0.5 * damping_;
}

KrausSet::KrausSet(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw PreconditionError("KrausSet: at least one operator is required");
  const Index n = ops_.front().rows();
  ComplexMatrix sum = -ComplexMatrix::Identity(n, n);
  for (const auto& w : ops_) {
    if (w.rows() != n || w.cols() != n) throw DimensionError("KrausSet: operators differ in shape");
    sum.noalias() += w.adjoint() * w;
  }
  defect_ = sum.norm();
}

MeasurementSchedule::MeasurementSchedule(double dt, long steps) : dt_(dt), steps_(steps) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError("MeasurementSchedule: dt must be positive");
  if (steps < 1) throw PreconditionError("MeasurementSchedule: steps must be positive");
}

MeasurementSchedule MeasurementSchedule::for_horizon(double t, double dt) {
  if (!(t > 0.0) || !(dt > 0.0)) throw PreconditionError("MeasurementSchedule: t and dt must be positive");
  const long n = std::max(1L, std::lround(t / dt));
  return MeasurementSchedule(t / static_cast<double>(n), n);
}

ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho) {
  require_same_dim(model, rho, "lindblad_rhs");
  const ComplexMatrix& g = model.no_jump_generator();
  ComplexMatrix out = -(g * rho);
  out.noalias() -= rho * g.adjoint();
  for (const auto& v : model.jump_ops()) {
    const ComplexMatrix vr = v * rho;
    out.noalias() += vr * v.adjoint();
  }
  return out;
}

ComplexMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho) {
  return lindblad_rhs(model, rho.matrix());
}

Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0, double t, double dt) {
  if (!(t > 0.0) || !(dt > 0.0) || dt > t * (1.0 + 1e-12)) {
    throw PreconditionError("evolve: requires t > 0 and 0 < dt <= t");
  }
  require_same_dim(model, rho0.matrix(), "evolve");
  const long steps = std::max(1L, static_cast<long>(std::ceil(t / dt - 1e-9)));
  const double h = t / static_cast<double>(steps);
  const auto tol = DensityTolerances<double>::uniform(1e-6);

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);

  ComplexMatrix rho = rho0.matrix();
  for (long s = 1; s <= steps; ++s) {
    const ComplexMatrix k1 = lindblad_rhs(model, rho);
    const ComplexMatrix k2 = lindblad_rhs(model, rho + (0.5 * h) * k1);
    const ComplexMatrix k3 = lindblad_rhs(model, rho + (0.5 * h) * k2);
    const ComplexMatrix k4 = lindblad_rhs(model, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = hermitian_part(rho);

    const auto diag = check_density(rho, tol);
    if (!diag.passed || diag.trace_defect > 1e-8) {
      throw IntegrationError("evolve: state left the density-matrix set at t = " +
                             std::to_string(s * h) + " (" + diag.describe() +
                             "); reduce dt");
    }
    traj.times.push_back(s == steps ? t : s * h);
    traj.states.push_back(DensityMatrix::unchecked(rho));
  }
  return traj;
}

ComplexMatrix effective_propagator(const LindbladModel& model, double t) {
  if (!(t >= 0.0)) throw PreconditionError("effective_propagator: t must be non-negative");
  if (t == 0.0) return ComplexMatrix::Identity(model.dim(), model.dim());
  return matexp(-model.no_jump_generator(), t);
}

KrausSet kraus_step(const LindbladModel& model, double dt) {
  if (!(dt > 0.0)) throw PreconditionError("kraus_step: dt must be positive");
  const ComplexMatrix& g = model.no_jump_generator();
  if (spectral_norm(g) * dt >= 1.0) {
    throw PreconditionError("kraus_step: dt too large, ||G dt|| must be below 1");
  }
  const Index n = model.dim();
  std::vector<ComplexMatrix> ops;
  ops.reserve(model.jump_ops().size() + 1);
  ops.push_back(ComplexMatrix::Identity(n, n) - dt * g);
  const double root = std::sqrt(dt);
  for (const auto& v : model.jump_ops()) ops.push_back(root * v);

  KrausSet set(std::move(ops));
  // sum W^+ W - 1 = G^+ G dt^2 exactly, since G + G^+ = sum V^+ V.
  const double c = (g.adjoint() * g).norm();
  set.defect_coefficient = c;
  set.declared_bound = c * dt * dt;
  return set;
}

ComplexMatrix apply_kraus_raw(const KrausSet& kraus, const ComplexMatrix& rho) {
  if (rho.rows() != kraus.dim() || rho.cols() != kraus.dim()) {
    throw DimensionError("apply_kraus: state and operators differ in dimension");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& w : kraus.ops()) {
    const ComplexMatrix wr = w * rho;
    out.noalias() += wr * w.adjoint();
  }
  return out;
}

DensityMatrix apply_kraus(const KrausSet& kraus, const DensityMatrix& rho) {
  const ComplexMatrix raw = apply_kraus_raw(kraus, rho.matrix());
  const double tr = raw.trace().real();
  if (!(std::abs(tr) > 1e-300)) throw DegenerateMapError("apply_kraus: image has zero trace");
  return DensityMatrix::unchecked(hermitian_part(raw) / Complex(tr));
}

DensityMatrix compose_nonselective(const LindbladModel& model, const DensityMatrix& rho0,
                                   const MeasurementSchedule& schedule) {
  require_same_dim(model, rho0.matrix(), "compose_nonselective");
  const KrausSet step = kraus_step(model, schedule.dt());
  DensityMatrix rho = rho0;
  for (long s = 0; s < schedule.steps(); ++s) rho = apply_kraus(step, rho);
  return DensityMatrix(rho.matrix());
}

Dilation dilate(const KrausSet& kraus, double max_defect) {
  if (kraus.completeness_defect() > max_defect) {
    throw PreconditionError("dilate: completeness defect " +
                            std::to_string(kraus.completeness_defect()) + " exceeds bound");
  }
  const Index d = kraus.dim();
  const Index m = static_cast<Index>(kraus.size());

  ComplexMatrix gram = ComplexMatrix::Zero(d, d);
  for (const auto& w : kraus.ops()) gram.noalias() += w.adjoint() * w;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(gram));
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw PreconditionError("dilate: sum W^+ W is singular");
  }
  const ComplexMatrix inv_sqrt = eig.operatorInverseSqrt();

  // Isometry H_i -> H_i (x) H_p, column i = sum_n (W_n e_i) (x) e_n.
  ComplexMatrix isometry(d * m, d);
  for (Index n = 0; n < m; ++n) {
    const ComplexMatrix w = kraus.ops()[n] * inv_sqrt;
    for (Index j = 0; j < d; ++j) isometry.row(j * m + n) = w.row(j);
  }

  Dilation out;
  out.internal_dim = d;
  out.probe_dim = m;
  out.unitary = ComplexMatrix::Zero(d * m, d * m);
  if (m == 1) {
    out.unitary = isometry;
    return out;
  }
  const ComplexMatrix q =
      Eigen::HouseholderQR<ComplexMatrix>(isometry).householderQ() * ComplexMatrix::Identity(d * m, d * m);
  Index next = d;
  for (Index col = 0; col < d * m; ++col) {
    if (col % m == 0) {
      out.unitary.col(col) = isometry.col(col / m);
    } else {
      out.unitary.col(col) = q.col(next++);
    }
  }
  return out;
}

std::vector<ComplexMatrix> dilation_blocks(const ComplexMatrix& unitary, Index internal_dim,
                                           Index probe_dim) {
  if (unitary.rows() != internal_dim * probe_dim || unitary.cols() != unitary.rows()) {
    throw DimensionError("dilation_blocks: unitary does not act on H_i (x) H_p");
  }
  std::vector<ComplexMatrix> blocks;
  for (Index n = 0; n < probe_dim; ++n) {
    ComplexMatrix w(internal_dim, internal_dim);
    for (Index j = 0; j < internal_dim; ++j) {
      for (Index i = 0; i < internal_dim; ++i) w(j, i) = unitary(j * probe_dim + n, i * probe_dim);
    }
    blocks.push_back(std::move(w));
  }
  return blocks;
}

}  // namespace cpphase
