// Copyright 2026 The dirac1d Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dirac1d {

/// Base of every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the supported domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of its iteration or term budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue search reached its hard ν cap before finding enough roots.
class WindowExhausted : public Error {
 public:
  using Error::Error;
};

/// Wavefunction coefficients cannot be fixed by the continuity relations.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The integrand has not decayed at the edge of the integration domain.
class TailError : public Error {
 public:
  using Error::Error;
};

/// Shooting integration left the floating range despite log rescaling.
class StepError : public Error {
 public:
  using Error::Error;
};

namespace detail {
// Formats a double with full round-trip precision for error messages.
std::string fmt_real(double v);
}  // namespace detail

}  // namespace dirac1d
