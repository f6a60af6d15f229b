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

#include "dirac1d/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dirac1d/errors.hpp"
#include "dirac1d/quadrature.hpp"
#include "dirac1d/specfun.hpp"

namespace dirac1d::model {

using dirac1d::detail::fmt_real;
using specfun::PcfOrder;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kTailRel = 1e-12;
constexpr double kNormTol = 1e-9;
constexpr int kPeakGrid = 400;

double pcf(double nu, double z) {
  if (std::fabs(z) > specfun::kMaxPcfArgument) {
    throw DomainError("wavefunction argument eta = " + fmt_real(z) + " beyond |eta| <= 40");
  }
  return specfun::pcf_d(PcfOrder(nu), z).value;
}

double density(const PotentialParams& p, const WavefunctionCoefficients& c, double nu, double x) {
  const BispinorSample s = evaluate_bispinor(p, c, nu, x);
  return s.psi1 * s.psi1 + s.psi2 * s.psi2;
}

WavefunctionCoefficients scaled(const WavefunctionCoefficients& c, double k) {
  return {c.c_plus * k, c.d_plus * k, c.c_minus * k, c.d_minus * k};
}

}  // namespace

PotentialParams PotentialParams::from_mass_coupling(double m, double g) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw DomainError("coupling g must be positive and finite, got " + fmt_real(g));
  }
  if (!(m >= 0.0) || !std::isfinite(m)) {
    throw DomainError("mass m must be non-negative and finite, got " + fmt_real(m));
  }
  return {m, g};
}

PotentialParams PotentialParams::from_alpha(double alpha, double g) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be non-negative and finite, got " + fmt_real(alpha));
  }
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw DomainError("coupling g must be positive and finite, got " + fmt_real(g));
  }
  return {alpha * std::sqrt(g), g};
}

double PotentialParams::alpha() const { return m_ / std::sqrt(g_); }

double potential_at(const PotentialParams& p, double x) noexcept { return p.g() * std::fabs(x); }

Coordinates coordinates(const PotentialParams& p, double x) noexcept {
  const double sg = std::sqrt(p.g());
  if (x >= 0.0) {
    const double xi = p.alpha() + sg * x;
    return {xi, kSqrt2 * xi, Side::Right};
  }
  const double xi = p.alpha() - sg * x;
  return {xi, kSqrt2 * xi, Side::Left};
}

EnergyLevel energy_from_nu(const PotentialParams& p, double nu, EnergySign sign,
                           quantize::SignBranch branch) {
  if (!(nu >= -1.0) || !std::isfinite(nu)) {
    throw DomainError("energy_from_nu: nu must be >= -1, got " + fmt_real(nu));
  }
  const double e = std::sqrt(2.0 * p.g() * (nu + 1.0));
  return {nu, branch, sign == EnergySign::Positive ? e : -e, sign};
}

double energy_integer_case(double g, int n) {
  if (!(g > 0.0) || n < 0) {
    throw DomainError("energy_integer_case: needs g > 0 and n >= 0");
  }
  return std::sqrt(2.0 * (n + 1) * g);
}

WavefunctionCoefficients assemble_coefficients(const PotentialParams& p,
                                               const quantize::QuantizationRoot& root,
                                               EnergySign sign, double c_scale) {
  if (!(c_scale != 0.0) || !std::isfinite(c_scale)) {
    throw DomainError("assemble_coefficients: c_scale must be finite and non-zero");
  }
  const EnergyLevel level = energy_from_nu(p, root.nu, sign, root.branch);
  const double z = kSqrt2 * p.alpha();
  const double dn = pcf(root.nu, z);
  const double dn1 = pcf(root.nu + 1.0, z);
  if (dn == 0.0 || dn1 == 0.0) {
    throw DegenerateError("assemble_coefficients: D_nu or D_{nu+1} vanishes at the matching point");
  }
  WavefunctionCoefficients c;
  c.c_plus = c_scale;
  c.d_plus = c_scale * level.energy / std::sqrt(2.0 * p.g());
  c.c_minus = c.c_plus * dn1 / dn;
  c.d_minus = c.d_plus * dn / dn1;
  return c;
}

BispinorSample evaluate_bispinor(const PotentialParams& p, const WavefunctionCoefficients& c,
                                 double nu, double x) {
  if (!std::isfinite(x)) throw DomainError("evaluate_bispinor: non-finite x");
  const Coordinates q = coordinates(p, x);
  if (q.side == Side::Right) {
    return {x, c.c_plus * pcf(nu + 1.0, q.eta), c.d_plus * pcf(nu, q.eta)};
  }
  return {x, c.c_minus * pcf(nu, q.eta), c.d_minus * pcf(nu + 1.0, q.eta)};
}

std::vector<BispinorSample> sample_wavefunction(const PotentialParams& p,
                                                const WavefunctionCoefficients& c,
                                                const quantize::QuantizationRoot& root,
                                                const std::vector<double>& grid) {
  std::vector<BispinorSample> out;
  out.reserve(grid.size());
  for (const double x : grid) out.push_back(evaluate_bispinor(p, c, root.nu, x));
  return out;
}

double continuity_jump(const PotentialParams& p, const WavefunctionCoefficients& c, double nu) {
  const double z = kSqrt2 * p.alpha();
  const double dn = pcf(nu, z);
  const double dn1 = pcf(nu + 1.0, z);
  const double r1 = c.c_plus * dn1, l1 = c.c_minus * dn;
  const double r2 = c.d_plus * dn, l2 = c.d_minus * dn1;
  auto rel = [](double a, double b) {
    const double s = std::max(std::fabs(a), std::fabs(b));
    return s == 0.0 ? 0.0 : std::fabs(a - b) / s;
  };
  return std::max(rel(r1, l1), rel(r2, l2));
}

double default_halfwidth(const PotentialParams& p, double nu) {
  const double e = std::sqrt(2.0 * p.g() * (nu + 1.0));
  const double turning = std::max(0.0, (e - p.m()) / p.g());
  return turning + 8.0 / std::sqrt(p.g());
}

NormalizeResult normalize(const PotentialParams& p, const WavefunctionCoefficients& c,
                          const quantize::QuantizationRoot& root, double halfwidth) {
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth)) {
    throw DomainError("normalize: halfwidth must be positive, got " + fmt_real(halfwidth));
  }
  const double nu = root.nu;
  double peak = 0.0;
  for (int i = 0; i <= kPeakGrid; ++i) {
    const double x = -halfwidth + 2.0 * halfwidth * i / kPeakGrid;
    peak = std::max(peak, density(p, c, nu, x));
  }
  if (!(peak > 0.0)) throw DegenerateError("normalize: wavefunction vanishes on the grid");
  const double edge = std::max(density(p, c, nu, -halfwidth), density(p, c, nu, halfwidth));
  if (edge > kTailRel * peak) {
    throw TailError("normalize: density at |x| = " + fmt_real(halfwidth) + " is " +
                    fmt_real(edge / peak) + " of its peak");
  }

  auto f = [&](double x) { return density(p, c, nu, x); };
  const double tol = 1e-12 * peak * halfwidth;
  const auto left = quadrature::adaptive_simpson(f, -halfwidth, 0.0, tol);
  const auto right = quadrature::adaptive_simpson(f, 0.0, halfwidth, tol);
  const double norm = left.value + right.value;
  const double norm_error = (left.est_abs_error + right.est_abs_error) / norm;
  if (!(norm_error <= kNormTol)) {
    throw NonConvergence("normalize: quadrature error " + fmt_real(norm_error) +
                         " above 1e-9");
  }
  double k = 1.0 / std::sqrt(norm);
  const double ref = c.c_plus != 0.0 ? c.c_plus : c.d_minus;
  if (ref < 0.0) k = -k;
  return {scaled(c, k), norm_error, norm};
}

DiracResidual dirac_residual(const PotentialParams& p, const EnergyLevel& level,
                             const WavefunctionCoefficients& c, double x) {
  const double h = 1e-4 / std::sqrt(p.g());
  if (!(std::fabs(x) > 2.0 * h)) {
    throw DomainError("dirac_residual: x = " + fmt_real(x) + " too close to the kink");
  }
  const BispinorSample m2 = evaluate_bispinor(p, c, level.nu, x - 2.0 * h);
  const BispinorSample m1 = evaluate_bispinor(p, c, level.nu, x - h);
  const BispinorSample p1 = evaluate_bispinor(p, c, level.nu, x + h);
  const BispinorSample p2 = evaluate_bispinor(p, c, level.nu, x + 2.0 * h);
  const BispinorSample s0 = evaluate_bispinor(p, c, level.nu, x);
  const double d1 = (m2.psi1 - 8.0 * m1.psi1 + 8.0 * p1.psi1 - p2.psi1) / (12.0 * h);
  const double d2 = (m2.psi2 - 8.0 * m1.psi2 + 8.0 * p1.psi2 - p2.psi2) / (12.0 * h);
  const double mass = p.m() + potential_at(p, x);
  const double e = level.energy;
  DiracResidual r;
  r.r1 = d1 + mass * s0.psi1 - e * s0.psi2;
  r.r2 = -d2 + mass * s0.psi2 - e * s0.psi1;
  r.scale = std::max({std::fabs(d1), std::fabs(mass * s0.psi1), std::fabs(e * s0.psi2),
                      std::fabs(d2), std::fabs(mass * s0.psi2), std::fabs(e * s0.psi1)});
  return r;
}

}  // namespace dirac1d::model
