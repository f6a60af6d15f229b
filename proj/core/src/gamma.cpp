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

#include <limits>
#include <cmath>
#include <numbers>

#include "dirac1d/errors.hpp"
#include "dirac1d/specfun.hpp"

namespace dirac1d::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxGammaArg = 171.6;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Gamma for x >= 0.5 (no overflow check).
double gamma_right(double x) { return std::tgamma(x); }

// log Gamma for x >= 0.5.
double log_gamma_right(double x) { return std::lgamma(x); }

}  // namespace

double sin_pi(double x) noexcept {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = x - 2.0 * std::round(0.5 * x);  // exact, r in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  if (r == 0.0) return 0.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) noexcept {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fabs(x - 2.0 * std::round(0.5 * x));  // r in [0, 1]
  double sign = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;
    sign = -1.0;
  }
  if (r == 0.5) return 0.0;
  if (r < 0.25) return sign * std::cos(kPi * r);
  return sign * std::sin(kPi * (0.5 - r));
}

double gamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("gamma: non-finite argument " + detail::fmt_real(x));
  }
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at " + detail::fmt_real(x));
  }
  if (x > kMaxGammaArg) {
    throw OverflowError("gamma: overflow for x = " + detail::fmt_real(x));
  }
  if (x >= 0.5) return gamma_right(x);

  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  const double s = sin_pi(x);
  const double y = 1.0 - x;
  if (y <= kMaxGammaArg) return kPi / (s * gamma_right(y));
  const double sign = s < 0.0 ? -1.0 : 1.0;
  return sign * std::exp(std::log(kPi) - std::log(std::fabs(s)) - log_gamma_right(y));
}

double rgamma(double x) {
  if (std::isnan(x)) return x;
  if (x == std::numeric_limits<double>::infinity()) return 0.0;
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) {
    if (x <= kMaxGammaArg) return 1.0 / gamma_right(x);
    return std::exp(-log_gamma_right(x));
  }
  const double s = sin_pi(x);
  const double y = 1.0 - x;
  if (y <= kMaxGammaArg) return s * gamma_right(y) / kPi;
  const double sign = s < 0.0 ? -1.0 : 1.0;
  return sign * std::exp(log_gamma_right(y) + std::log(std::fabs(s)) - std::log(kPi));
}

}  // namespace dirac1d::specfun
