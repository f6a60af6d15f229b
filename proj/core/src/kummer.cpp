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

#include <cmath>
#include <limits>

#include "dirac1d/errors.hpp"
#include "dirac1d/specfun.hpp"
#include "kummer_series.hpp"

namespace dirac1d::specfun {
namespace detail {
namespace {

constexpr int kMaxTerms = 10000;
constexpr int kRescaleExp = 900;
const double kRescaleLimit = std::ldexp(1.0, kRescaleExp);
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

ScaledSeries kummer_scaled(double a, double b, long double x) {
  if (b <= 0.0 && b == std::floor(b)) {
    throw DomainError("kummer_m: b = " + dirac1d::detail::fmt_real(b) +
                      " is a non-positive integer");
  }
  ScaledSeries out;
  long double term = 1.0L;
  long double sum = 1.0L;
  // Sum of (k + 2)|t_k|: the k-th term carries about k roundings.
  double weighted = 2.0;
  double tail = 0.0;
  const double ax = std::fabs(static_cast<double>(x));
  const double past = std::fmax(-a, -b);

  int k = 0;
  for (;; ++k) {
    if (k >= kMaxTerms) {
      throw NonConvergence("kummer_m: no convergence after 10000 terms (a=" +
                           dirac1d::detail::fmt_real(a) +
                           ", b=" + dirac1d::detail::fmt_real(b) +
                           ", z=" + dirac1d::detail::fmt_real(static_cast<double>(x)) + ")");
    }
    const double kk = static_cast<double>(k);
    term *= static_cast<long double>(a + kk) * x / ((static_cast<long double>(b) + kk) * (kk + 1.0L));
    if (term == 0.0L) break;  // terminating series (or x == 0)
    sum += term;
    weighted += (kk + 3.0) * std::fabs(static_cast<double>(term));

    if (std::fabs(term) > kRescaleLimit || std::fabs(sum) > kRescaleLimit ||
        weighted > kRescaleLimit) {
      term = std::ldexp(term, -kRescaleExp);
      sum = std::ldexp(sum, -kRescaleExp);
      weighted = std::ldexp(weighted, -kRescaleExp);
      out.exp2 += kRescaleExp;
    }

    const double next = kk + 1.0;
    if (next > past) {
      // Every later ratio is bounded by r once the Pochhammer signs settle.
      const double r = ax / (next + 1.0) *
                       std::fmax(1.0, std::fabs((a + next) / (b + next)));
      if (r < 1.0) {
        tail = std::fabs(static_cast<double>(term)) * r / (1.0 - r);
        if (tail <= 0.25 * kEps * std::fabs(static_cast<double>(sum))) break;
      }
    }
  }
  out.sum = sum;
  out.abs_err = kEps * weighted + tail;
  out.terms = k + 1;
  return out;
}

}  // namespace detail

EvalReport kummer_m(double a, double b, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z)) {
    throw DomainError("kummer_m: non-finite argument");
  }
  if (std::fabs(z) > kMaxKummerArgument) {
    throw DomainError("kummer_m: |z| = " + dirac1d::detail::fmt_real(std::fabs(z)) +
                      " exceeds 400");
  }
  const detail::ScaledSeries s = detail::kummer_scaled(a, b, z);
  EvalReport r;
  r.value = static_cast<double>(std::ldexp(s.sum, s.exp2));
  r.est_abs_error = std::ldexp(s.abs_err, s.exp2);
  r.path = EvalPath::Series;
  if (!std::isfinite(r.value) || !std::isfinite(r.est_abs_error)) {
    throw OverflowError("kummer_m: result exceeds double range for z = " +
                        dirac1d::detail::fmt_real(z));
  }
  return r;
}

}  // namespace dirac1d::specfun
