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

#include "dirac1d/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dirac1d/errors.hpp"

namespace dirac1d::oracle {

using dirac1d::detail::fmt_real;
using model::PotentialParams;
using model::Side;

namespace {

constexpr int kRescaleEvery = 100;
constexpr int kMaxBisections = 200;

using State = std::array<double, 2>;

State rhs(double m, double g, double e, double x, const State& y) {
  const double mass = m + g * std::fabs(x);
  return {e * y[1] - mass * y[0], mass * y[1] - e * y[0]};
}

double norm(double a, double b) { return std::hypot(a, b); }

MatchResult refine(const PotentialParams& p, const ShootingConfig& config, double lo, double flo,
                   double hi) {
  MatchResult r;
  int iter = 0;
  while (hi - lo > config.tol && iter < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = match_determinant(p, mid, config);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    ++iter;
  }
  r.energy = 0.5 * (lo + hi);
  r.mismatch = match_determinant(p, r.energy, config);
  r.converged = hi - lo <= config.tol || iter < kMaxBisections;
  r.near_window_edge = r.energy - config.e_min < 2.0 * config.e_step ||
                       config.e_max - r.energy < 2.0 * config.e_step;
  return r;
}

}  // namespace

ShootingConfig ShootingConfig::defaults(const PotentialParams& p) {
  const double sg = std::sqrt(p.g());
  ShootingConfig c;
  c.x_max = 10.0 / sg;
  c.h = 0.01 / sg;
  c.e_min = 0.0;
  c.e_max = 4.0 * sg;
  c.e_step = 0.01 * sg;
  c.tol = 1e-12 * sg;
  return c;
}

void validate(const PotentialParams& p, const ShootingConfig& c) {
  if (!(c.x_max * std::sqrt(p.g()) >= 8.0) || !std::isfinite(c.x_max)) {
    throw DomainError("shooting: x_max sqrt(g) must be at least 8, got " +
                      fmt_real(c.x_max * std::sqrt(p.g())));
  }
  if (!(c.h > 0.0) || !(c.h <= 0.25 * c.x_max)) {
    throw DomainError("shooting: step h must lie in (0, x_max/4], got " + fmt_real(c.h));
  }
  if (!(c.e_min >= 0.0) || !(c.e_max > c.e_min) || !std::isfinite(c.e_max)) {
    throw DomainError("shooting: energy window must satisfy 0 <= e_min < e_max");
  }
  if (!(c.e_step > 0.0) || !(c.tol > 0.0)) {
    throw DomainError("shooting: e_step and tol must be positive");
  }
}

SideState integrate_side(const PotentialParams& p, double energy, Side side,
                         const ShootingConfig& config) {
  if (!(energy >= 0.0) || !std::isfinite(energy)) {
    throw DomainError("integrate_side: energy must be finite and >= 0, got " + fmt_real(energy));
  }
  const double m = p.m();
  const double g = p.g();
  const auto steps = static_cast<long>(std::ceil(config.x_max / config.h - 1e-9));
  const double h = (side == Side::Right ? -config.x_max : config.x_max) / static_cast<double>(steps);
  double x = side == Side::Right ? config.x_max : -config.x_max;

  // Decaying eigenvector of [[-M, E], [-E, M]] for large |x|.
  const double mass = m + g * config.x_max;
  const double k = std::sqrt(std::max(0.0, mass * mass - energy * energy));
  const double small = energy / (mass + k);
  State y = side == Side::Right ? State{1.0, small} : State{small, 1.0};
  double log_scale = 0.0;

  for (long i = 0; i < steps; ++i) {
    const State k1 = rhs(m, g, energy, x, y);
    const State k2 = rhs(m, g, energy, x + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
    const State k3 = rhs(m, g, energy, x + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
    const State k4 = rhs(m, g, energy, x + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
    y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    x = (i + 1 == steps) ? 0.0 : x + h;
    if ((i + 1) % kRescaleEvery == 0 || i + 1 == steps) {
      const double s = norm(y[0], y[1]);
      if (!std::isfinite(s) || s == 0.0) {
        throw StepError("integrate_side: state left double range at x = " + fmt_real(x));
      }
      y[0] /= s;
      y[1] /= s;
      log_scale += std::log(s);
    }
  }
  return {y[0], y[1], log_scale};
}

double match_determinant(const PotentialParams& p, double energy, const ShootingConfig& config) {
  const SideState l = integrate_side(p, energy, Side::Left, config);
  const SideState r = integrate_side(p, energy, Side::Right, config);
  return (l.psi1 * r.psi2 - r.psi1 * l.psi2) / (norm(l.psi1, l.psi2) * norm(r.psi1, r.psi2));
}

std::vector<MatchResult> eigenvalues(const PotentialParams& p, const ShootingConfig& config) {
  validate(p, config);
  std::vector<MatchResult> out;
  const auto n = static_cast<long>(std::floor((config.e_max - config.e_min) / config.e_step + 1e-9));
  double e0 = config.e_min;
  double f0 = match_determinant(p, e0, config);
  for (long i = 1; i <= n; ++i) {
    const double e1 = i == n ? config.e_max : config.e_min + static_cast<double>(i) * config.e_step;
    const double f1 = match_determinant(p, e1, config);
    if (f0 == 0.0) {
      out.push_back({e0, 0.0, true, false});
    } else if (f1 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
      out.push_back(refine(p, config, e0, f0, e1));
    }
    e0 = e1;
    f0 = f1;
  }
  if (f0 == 0.0) out.push_back({e0, 0.0, true, true});
  for (MatchResult& r : out) {
    r.near_window_edge = r.near_window_edge || r.energy - config.e_min < 2.0 * config.e_step ||
                         config.e_max - r.energy < 2.0 * config.e_step;
  }
  return out;
}

std::vector<MatchResult> first_levels(const PotentialParams& p, int n,
                                      const ShootingConfig& config) {
  if (n < 1) throw DomainError("first_levels: n must be at least 1");
  const double cap = std::sqrt(2.0 * p.g() * 200.0);
  ShootingConfig c = config;
  for (;;) {
    std::vector<MatchResult> levels = eigenvalues(p, c);
    // A level at the upper edge may be cut off; widen until it is interior.
    const int found = static_cast<int>(levels.size());
    const bool enough =
        found > n ||
        (found == n && c.e_max - levels.back().energy >= 2.0 * c.e_step) ||
        (found == n && c.e_max >= cap);
    if (enough) {
      levels.resize(static_cast<std::size_t>(n));
      return levels;
    }
    if (c.e_max >= cap) {
      throw WindowExhausted("first_levels: found " + std::to_string(levels.size()) + " of " +
                            std::to_string(n) + " levels below E = " + fmt_real(cap));
    }
    c.e_max = std::min(cap, c.e_max + (config.e_max - config.e_min));
  }
}

}  // namespace dirac1d::oracle
