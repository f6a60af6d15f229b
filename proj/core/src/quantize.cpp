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

#include "dirac1d/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dirac1d/errors.hpp"
#include "dirac1d/specfun.hpp"

namespace dirac1d::quantize {

using dirac1d::detail::fmt_real;
using specfun::PcfOrder;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kMaxRefineIterations = 200;
constexpr int kChunkPoints = 500;

double branch_sign(SignBranch b) { return b == SignBranch::Plus ? 1.0 : -1.0; }

struct Residual {
  double value;
  double scale;  // magnitude of the two compared terms
};

Residual residual_with_scale(double nu, double alpha, SignBranch branch) {
  if (!(nu > -1.0)) {
    throw DomainError("quantization residual needs nu > -1, got " + fmt_real(nu));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and non-negative, got " + fmt_real(alpha));
  }
  const double z = kSqrt2 * alpha;
  const double d = specfun::pcf_d(PcfOrder(nu), z).value;
  const double d1 = specfun::pcf_d(PcfOrder(nu + 1.0), z).value;
  const double rhs = std::sqrt(nu + 1.0) * d;
  return {d1 - branch_sign(branch) * rhs, std::fabs(d1) + std::fabs(rhs)};
}

double checked_residual(double nu, double alpha, SignBranch branch) {
  try {
    return residual_with_scale(nu, alpha, branch).value;
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " [while scanning nu = " + fmt_real(nu) + "]");
  } catch (const OverflowError& e) {
    throw OverflowError(std::string(e.what()) + " [while scanning nu = " + fmt_real(nu) + "]");
  } catch (const NonConvergence& e) {
    throw NonConvergence(std::string(e.what()) + " [while scanning nu = " + fmt_real(nu) + "]");
  }
}

bool same_sign(double a, double b) { return (a < 0.0) == (b < 0.0); }

}  // namespace

std::string_view to_string(SignBranch b) { return b == SignBranch::Plus ? "plus" : "minus"; }
std::string_view to_string(DerivSign s) { return s == DerivSign::Plus ? "plus" : "minus"; }

double condition_residual(double nu, double alpha, SignBranch branch) {
  return residual_with_scale(nu, alpha, branch).value;
}

double condition_residual_deriv_form(double nu, double alpha, DerivSign sign) {
  if (!(nu > -1.0)) {
    throw DomainError("quantization residual needs nu > -1, got " + fmt_real(nu));
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be finite and non-negative, got " + fmt_real(alpha));
  }
  const double z = kSqrt2 * alpha;
  const double d = specfun::pcf_d(PcfOrder(nu), z).value;
  const double dp = specfun::pcf_d_prime(PcfOrder(nu), z).value;
  const double s = sign == DerivSign::Minus ? -1.0 : 1.0;
  return dp - (alpha / kSqrt2 + s * std::sqrt(nu + 1.0)) * d;
}

std::vector<RootBracket> scan_brackets(double alpha, SignBranch branch, double nu_min,
                                       double nu_max, double step) {
  if (!(nu_min > -1.0) || !(nu_max > nu_min)) {
    throw DomainError("scan window must satisfy -1 < nu_min < nu_max, got [" + fmt_real(nu_min) +
                      ", " + fmt_real(nu_max) + "]");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw DomainError("scan step must be positive, got " + fmt_real(step));
  }
  const auto n = static_cast<long>(std::floor((nu_max - nu_min) / step + 1e-9));
  std::vector<RootBracket> out;
  if (n < 1) return out;

  double prev_nu = nu_min;
  double prev_f = checked_residual(prev_nu, alpha, branch);
  if (prev_f == 0.0) out.push_back({prev_nu, prev_nu, 0.0, 0.0});
  for (long i = 1; i <= n; ++i) {
    const double nu = nu_min + static_cast<double>(i) * step;
    const double f = checked_residual(nu, alpha, branch);
    if (f == 0.0) {
      out.push_back({nu, nu, 0.0, 0.0});
    } else if (prev_f != 0.0 && !same_sign(prev_f, f)) {
      out.push_back({prev_nu, nu, prev_f, f});
    }
    prev_nu = nu;
    prev_f = f;
  }
  return out;
}

QuantizationRoot refine_root(const RootBracket& bracket, double alpha, SignBranch branch,
                             double tol) {
  if (!(tol > 0.0)) throw DomainError("refine_root: tolerance must be positive");
  if (bracket.degenerate()) return {bracket.nu_lo, branch, 0.0, 0};
  if (!(bracket.nu_lo < bracket.nu_hi) || same_sign(bracket.f_lo, bracket.f_hi)) {
    throw DomainError("refine_root: [" + fmt_real(bracket.nu_lo) + ", " + fmt_real(bracket.nu_hi) +
                      "] is not a sign-change bracket");
  }
  double a = bracket.nu_lo, fa = bracket.f_lo;
  double b = bracket.nu_hi, fb = bracket.f_hi;
  double prev_width = b - a;
  int stall = 0;
  int iter = 0;
  while (b - a > tol) {
    if (++iter > kMaxRefineIterations) {
      throw NonConvergence("refine_root: no convergence in 200 iterations near nu = " +
                           fmt_real(0.5 * (a + b)));
    }
    double s = 0.5 * (a + b);
    if (stall < 2) {
      const double secant = (a * fb - b * fa) / (fb - fa);
      if (secant > a && secant < b) s = secant;
    } else {
      stall = 0;
    }
    const Residual r = residual_with_scale(s, alpha, branch);
    if (r.value == 0.0 || std::fabs(r.value) <= kResidualTol * r.scale) {
      return {s, branch, r.value, iter};
    }
    if (same_sign(r.value, fa)) {
      a = s;
      fa = r.value;
    } else {
      b = s;
      fb = r.value;
    }
    const double width = b - a;
    stall = width > 0.5 * prev_width ? stall + 1 : 0;
    prev_width = width;
  }
  return std::fabs(fa) <= std::fabs(fb) ? QuantizationRoot{a, branch, fa, iter}
                                        : QuantizationRoot{b, branch, fb, iter};
}

std::vector<QuantizationRoot> spectrum(double alpha, int n_levels, const SpectrumOptions& options) {
  if (n_levels < 1) throw DomainError("spectrum: n_levels must be at least 1");
  if (!(options.step > 0.0)) throw DomainError("spectrum: step must be positive");
  if (!(options.nu_min > -1.0) || !(options.nu_max > options.nu_min) ||
      !(options.nu_cap >= options.nu_max)) {
    throw DomainError("spectrum: invalid window");
  }

  std::vector<QuantizationRoot> roots;
  const double chunk = kChunkPoints * options.step;
  double lo = options.nu_min;
  double limit = options.nu_max;
  for (;;) {
    const double hi = std::min(lo + chunk, limit);
    for (const SignBranch branch : {SignBranch::Plus, SignBranch::Minus}) {
      for (const RootBracket& br : scan_brackets(alpha, branch, lo, hi, options.step)) {
        const QuantizationRoot r = refine_root(br, alpha, branch, options.tol);
        const bool seen = std::any_of(roots.begin(), roots.end(), [&](const QuantizationRoot& q) {
          return q.branch == branch && std::fabs(q.nu - r.nu) <= 1e-9;
        });
        if (!seen) roots.push_back(r);
      }
    }
    if (static_cast<int>(roots.size()) >= n_levels) break;
    if (hi >= limit) {
      if (limit >= options.nu_cap) {
        throw WindowExhausted("spectrum: found " + std::to_string(roots.size()) + " of " +
                              std::to_string(n_levels) + " levels below nu = " +
                              fmt_real(options.nu_cap));
      }
      limit = std::min(options.nu_cap, limit + (options.nu_max - options.nu_min));
    }
    lo = hi;
  }
  std::sort(roots.begin(), roots.end(),
            [](const QuantizationRoot& x, const QuantizationRoot& y) { return x.nu < y.nu; });
  roots.resize(static_cast<std::size_t>(n_levels));
  return roots;
}

double hermite_condition_residual(int n, double alpha, SignBranch branch) {
  if (n < 0 || n > 250) {
    throw DomainError("hermite_condition_residual: n = " + std::to_string(n) + " outside [0, 250]");
  }
  const double hn1 = specfun::hermite(n + 1, alpha);
  const double hn = specfun::hermite(n, alpha);
  return hn1 - branch_sign(branch) * std::sqrt(2.0 * (n + 1)) * hn;
}

std::vector<HermiteCheckRow> hermite_check(double alpha, int n_max) {
  if (n_max < 0 || n_max > 250) {
    throw DomainError("hermite_check: n_max = " + std::to_string(n_max) + " outside [0, 250]");
  }
  std::vector<HermiteCheckRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    HermiteCheckRow row;
    row.n = n;
    try {
      const double hn1 = specfun::hermite(n + 1, alpha);
      const double rhs = std::sqrt(2.0 * (n + 1)) * specfun::hermite(n, alpha);
      row.residual_plus = hn1 - rhs;
      row.residual_minus = hn1 + rhs;
      const double scale = std::max(std::fabs(hn1), std::fabs(rhs));
      row.root_plus = std::fabs(row.residual_plus) <= 1e-9 * scale;
      row.root_minus = std::fabs(row.residual_minus) <= 1e-9 * scale;
      if (!std::isfinite(row.residual_plus) || !std::isfinite(row.residual_minus)) {
        throw OverflowError("hermite residual overflow");
      }
    } catch (const OverflowError&) {
      row = HermiteCheckRow{};
      row.n = n;
      row.residual_plus = row.residual_minus = std::numeric_limits<double>::quiet_NaN();
      row.overflow = true;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dirac1d::quantize
