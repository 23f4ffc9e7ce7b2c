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

#pragma once

#include <stdexcept>
#include <string>

namespace cpphase {

// Input errors (exit code 1 at the command line).

/// Operand shapes are incompatible.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix offered as a density matrix fails Hermiticity, trace or positivity.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Domain errors (exit code 2 at the command line).

/// |tr[S(t) rho0]| vanished: the phase is undefined at this point.
class NodalPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The integrator produced a state outside the density-matrix cone.
class IntegrationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adjacent samples of a phase curve are too far apart to unwrap.
class GridTooCoarseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A CP map sent the state to zero trace.
class DegenerateMapError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cpphase
