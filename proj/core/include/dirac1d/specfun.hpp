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

// Real-argument special functions used by the quantization solver:
// gamma, reciprocal gamma, Kummer's M, Hermite polynomials and the
// parabolic cylinder function D_nu(z) with its z-derivative.
//
// Every function is pure and thread-safe.

#include <string_view>

namespace dirac1d::specfun {

/// Which evaluation route produced an EvalReport.
enum class EvalPath {
  Series,       // Kummer-function pair (even/odd decomposition)
  Asymptotic,   // large-z expansion with optimal truncation
  OdeFallback,  // RK4 integration of Weber's equation from asymptotic data
  Recurrence,   // upward three-term recurrence in the order
  Connection,   // reflection z -> -z through the dominant solution V
};

std::string_view to_string(EvalPath path);

struct EvalReport {
  double value = 0.0;
  /// Upper bound claimed by the chosen path; never negative.
  double est_abs_error = 0.0;
  EvalPath path = EvalPath::Series;
};

/// Real order of a parabolic cylinder function, checked on construction.
class PcfOrder {
 public:
  static constexpr double kMin = -1.0;
  static constexpr double kMax = 200.0;

  /// Throws DomainError for non-finite nu or nu outside [kMin, kMax].
  explicit PcfOrder(double nu);

  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

/// |z| bound for pcf_d; beyond it exp(-z^2/4) makes the result meaningless.
inline constexpr double kMaxPcfArgument = 40.0;
/// |z| bound for kummer_m.
inline constexpr double kMaxKummerArgument = 400.0;

/// sin(pi x), exactly zero at integers.
double sin_pi(double x) noexcept;
/// cos(pi x), exactly zero at half-integers.
double cos_pi(double x) noexcept;

/// Gamma function. libm tgamma for x >= 0.5, reflection below.
/// Throws PoleError at 0, -1, -2, ... and OverflowError for x > 171.6.
double gamma(double x);

/// 1/Gamma(x); entire, exactly zero at the non-positive integers.
double rgamma(double x);

/// Kummer's confluent hypergeometric function M(a, b, z) by its power series.
/// est_abs_error grows with the cancellation in the series.
/// Throws DomainError when b is a non-positive integer or |z| > 400,
/// NonConvergence after 10000 terms, OverflowError when M leaves double range.
EvalReport kummer_m(double a, double b, double z);

/// Physicists' Hermite polynomial H_n(x), 0 <= n <= 300, by the three-term
/// recurrence. Throws OverflowError if the value leaves double range.
double hermite(int n, double x);

/// Parabolic cylinder function D_nu(z), |z| <= 40: the solution of
/// y'' = (z^2/4 - nu - 1/2) y that decays as z -> +infinity.
EvalReport pcf_d(PcfOrder nu, double z);

/// dD_nu/dz = (z/2) D_nu(z) - D_{nu+1}(z). Requires nu + 1 <= PcfOrder::kMax.
EvalReport pcf_d_prime(PcfOrder nu, double z);

}  // namespace dirac1d::specfun
