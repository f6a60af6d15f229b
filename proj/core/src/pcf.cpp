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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dirac1d/errors.hpp"
#include "dirac1d/specfun.hpp"
#include "kummer_series.hpp"

// Evaluation of D_nu(z) by the cheapest route whose error bound is
// acceptable:
//
//   z >= 0  Kummer pair for z^2/2 <= 60, then the large-z expansion beyond
//           the turning point, then either the upward order recurrence
//           (nu >= 1) or inward RK4 integration of Weber's equation from a
//           point where the expansion is accurate (nu < 1).
//   z <  0  Kummer pair, then D_nu(-x) = cos(pi nu) D_nu(x) + pi/Gamma(-nu) V(x)
//           with the dominant solution V from its own Kummer pair.

namespace dirac1d::specfun {

using dirac1d::detail::fmt_real;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

// A path is accepted once its bound is below this fraction of |value|.
constexpr double kAcceptRel = 1e-12;
// Kummer pair used for z >= 0 only while z^2/2 <= 60.
constexpr double kSeriesMaxHalfSquare = 60.0;
// Asymptotic start point for the ODE path must be at least this accurate.
constexpr double kOdeStartRel = 1e-15;
constexpr double kOdeStepTol = 1e-15;

bool accepted(const EvalReport& r) {
  return std::isfinite(r.value) && r.est_abs_error <= kAcceptRel * std::fabs(r.value);
}

double effective_error(const EvalReport& r) {
  return std::isfinite(r.value) && std::isfinite(r.est_abs_error) ? r.est_abs_error : kInf;
}

const EvalReport& better(const EvalReport& a, const EvalReport& b) {
  return effective_error(b) < effective_error(a) ? b : a;
}

// Relative error claimed for rgamma(x), allowing |x| log|x| ulps for large
// arguments.
double rgamma_rel_bound(double x) {
  const double ax = std::fabs(x);
  return 1e-14 + 2.0 * kEps * ax * std::log(2.0 + ax);
}

EvalReport failed(EvalPath path) { return {std::numeric_limits<double>::quiet_NaN(), kInf, path}; }

// exp(-z^2/4) [ca M(a1, 1/2, z^2/2) + cb z M(a2, 3/2, z^2/2)], evaluated with
// binary exponents carried separately so no intermediate overflows.
// coef_rel bounds the relative error already present in ca and cb.
EvalReport kummer_pair(double ca, double a1, double cb, double a2, double z, double coef_rel,
                       EvalPath path) {
  const long double half_sq = 0.5L * z * z;
  long double m1 = 0.0L, m2 = 0.0L;
  double e1m = 0.0, e2m = 0.0;
  int x1 = std::numeric_limits<int>::min() / 2, x2 = x1;

  if (ca != 0.0) {
    int kc = 0;
    const double mc = std::frexp(ca, &kc);
    const auto s = detail::kummer_scaled(a1, 0.5, half_sq);
    m1 = mc * s.sum;
    e1m = std::fabs(mc) * s.abs_err;
    x1 = kc + s.exp2;
  }
  if (cb != 0.0 && z != 0.0) {
    int kc = 0;
    const double mc = std::frexp(cb, &kc);
    const auto s = detail::kummer_scaled(a2, 1.5, half_sq);
    m2 = mc * (static_cast<long double>(z) * s.sum);
    e2m = std::fabs(mc * z) * s.abs_err;
    x2 = kc + s.exp2;
  }
  if (m1 == 0.0L && m2 == 0.0L) return {0.0, 0.0, path};

  const int e = std::max(x1, x2);
  const long double t1 = std::ldexp(m1, x1 - e);
  const long double t2 = std::ldexp(m2, x2 - e);
  const long double bracket = t1 + t2;
  const double bracket_err =
      std::ldexp(e1m, x1 - e) + std::ldexp(e2m, x2 - e) +
      static_cast<double>(std::fabs(t1) + std::fabs(t2)) * (coef_rel + 2.0 * kEps);

  const double g = -0.25 * z * z;
  int kf = 0;
  const double mf = std::frexp(std::exp(g), &kf);
  EvalReport r;
  r.path = path;
  r.value = static_cast<double>(std::ldexp(bracket * mf, e + kf));
  r.est_abs_error = std::ldexp(bracket_err * mf, e + kf) + std::fabs(r.value) * kEps * (2.0 + std::fabs(g));
  return r;
}

// Even/odd Kummer decomposition of D_nu(z), valid for any real z.
EvalReport series_d(double nu, double z) {
  const double pref = kSqrtPi * std::exp2(0.5 * nu);
  const double ca = pref * rgamma(0.5 * (1.0 - nu));
  const double cb = -kSqrt2 * pref * rgamma(-0.5 * nu);
  const double coef_rel =
      std::max(rgamma_rel_bound(0.5 * (1.0 - nu)), rgamma_rel_bound(-0.5 * nu)) + 4.0 * kEps;
  return kummer_pair(ca, -0.5 * nu, cb, 0.5 * (1.0 - nu), z, coef_rel, EvalPath::Series);
}

struct Asymptotic {
  double log_abs = 0.0;  // log |D_nu(x)|
  double sign = 1.0;
  double dlog = 0.0;     // D'/D
  double series_rel = kInf;  // truncation and summation error of the sum
  double prefactor_rel = kInf;  // error of x^nu e^{-x^2/4} once exponentiated
  double rel_err() const { return series_rel + prefactor_rel; }
};

// D_nu(x) ~ x^nu e^{-x^2/4} sum_k (-1)^k (-nu)_{2k} / (k! (2x^2)^k), truncated
// at its smallest term.
Asymptotic asymptotic_log(double nu, double x) {
  Asymptotic out;
  const double two_x2 = 2.0 * x * x;
  double term = 1.0;
  double sum = 1.0;
  double dsum = 0.0;  // x * dS/dx
  double weighted = 2.0;  // sum of (k + 2)|t_k|
  double trunc = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double kk = static_cast<double>(k);
    const double next = -term * (nu - 2.0 * kk) * (nu - 2.0 * kk - 1.0) / ((kk + 1.0) * two_x2);
    if (next == 0.0) {
      trunc = 0.0;
      break;
    }
    if (std::fabs(next) >= std::fabs(term)) {
      trunc = std::fabs(term);
      break;
    }
    term = next;
    sum += term;
    dsum += -2.0 * (kk + 1.0) * term;
    weighted += (kk + 3.0) * std::fabs(term);
    trunc = std::fabs(term);
    if (trunc <= 1e-3 * kEps * std::fabs(sum)) break;
  }
  if (sum == 0.0) return out;
  out.sign = sum < 0.0 ? -1.0 : 1.0;
  out.log_abs = nu * std::log(x) - 0.25 * x * x + std::log(std::fabs(sum));
  out.dlog = nu / x - 0.5 * x + dsum / (x * sum);
  out.series_rel = (trunc + kEps * weighted) / std::fabs(sum);
  out.prefactor_rel = kEps * (2.0 + std::fabs(nu * std::log(x)) + 0.25 * x * x);
  return out;
}

double turning_point(double nu) { return 2.0 * std::sqrt(std::max(nu, 0.0) + 0.5); }

EvalReport asymptotic_d(double nu, double x) {
  const Asymptotic a = asymptotic_log(nu, x);
  if (!std::isfinite(a.rel_err())) return failed(EvalPath::Asymptotic);
  const double v = a.sign * std::exp(a.log_abs);
  return {v, std::fabs(v) * a.rel_err(), EvalPath::Asymptotic};
}

struct WeberState {
  double y;
  double dy;
};

WeberState rk4_step(double nu, double t, WeberState s, double h) {
  auto f = [nu](double tt, const WeberState& w) {
    return WeberState{w.dy, (0.25 * tt * tt - nu - 0.5) * w.y};
  };
  const WeberState k1 = f(t, s);
  const WeberState k2 = f(t + 0.5 * h, {s.y + 0.5 * h * k1.y, s.dy + 0.5 * h * k1.dy});
  const WeberState k3 = f(t + 0.5 * h, {s.y + 0.5 * h * k2.y, s.dy + 0.5 * h * k2.dy});
  const WeberState k4 = f(t + h, {s.y + h * k3.y, s.dy + h * k3.dy});
  return {s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
          s.dy + h / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy)};
}

struct WeberRun {
  WeberState state{0.0, 0.0};
  double log_scale = 0.0;
  double err_rel = 0.0;  // accumulated error relative to the local amplitude
  bool ok = false;
};

// Adaptive RK4 on y'' = (t^2/4 - nu - 1/2) y from t0 to t1 with step doubling
// and local extrapolation. Errors are measured against the local amplitude
// sqrt(y^2 + y'^2 / max(|q|, 1)) so oscillatory stretches are not penalised
// near zeros of y. The state is renormalised, its log carried in log_scale.
WeberRun integrate_weber(double nu, double t0, WeberState s, double t1) {
  WeberRun run;
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  double t = t0;
  double h = 0.01 * dir;
  int steps = 0;
  constexpr int kMaxSteps = 2000000;
  auto amplitude = [nu](double tt, const WeberState& w) {
    const double q = std::max(std::fabs(0.25 * tt * tt - nu - 0.5), 1.0);
    return std::sqrt(w.y * w.y + w.dy * w.dy / q);
  };
  while (dir * (t1 - t) > 0.0) {
    if (++steps > kMaxSteps) return run;
    if (dir * (t + h - t1) > 0.0) h = t1 - t;
    const WeberState full = rk4_step(nu, t, s, h);
    const WeberState half = rk4_step(nu, t, s, 0.5 * h);
    const WeberState two = rk4_step(nu, t + 0.5 * h, half, 0.5 * h);
    const double scale = std::max(amplitude(t + h, two), std::numeric_limits<double>::min());
    const double err =
        std::max(std::fabs(two.y - full.y), std::fabs(h) * std::fabs(two.dy - full.dy)) / 15.0;
    const double ratio = err / (kOdeStepTol * scale);
    if (ratio <= 1.0 || std::fabs(h) < 1e-7) {
      s = {two.y + (two.y - full.y) / 15.0, two.dy + (two.dy - full.dy) / 15.0};
      t += h;
      run.err_rel += err / scale + 4.0 * kEps;
      const double mag = amplitude(t, s);
      if (!std::isfinite(mag) || mag == 0.0) return run;
      if (mag > 1e50 || mag < 1e-50) {
        s.y /= mag;
        s.dy /= mag;
        run.log_scale += std::log(mag);
      }
    }
    const double factor = ratio > 0.0 ? 0.9 * std::pow(ratio, -0.2) : 4.0;
    h *= std::clamp(factor, 0.2, 4.0);
    if (std::fabs(h) > 0.25) h = 0.25 * dir;
  }
  run.state = s;
  run.ok = true;
  return run;
}

// Turns a finished run into a report; amplitude-relative error becomes
// absolute through the final amplitude.
EvalReport finish_run(const WeberRun& run, double x, double nu, double start_sign, double extra_rel,
                      EvalPath path) {
  if (!run.ok) return failed(path);
  const double q = std::max(std::fabs(0.25 * x * x - nu - 0.5), 1.0);
  const double amp = std::sqrt(run.state.y * run.state.y + run.state.dy * run.state.dy / q);
  if (run.state.y == 0.0) return {0.0, std::exp(run.log_scale) * amp * (run.err_rel + extra_rel), path};
  const double log_abs = run.log_scale + std::log(std::fabs(run.state.y));
  const double v = (run.state.y < 0.0 ? -start_sign : start_sign) * std::exp(log_abs);
  const double err = std::exp(run.log_scale + std::log(amp)) * (run.err_rel + extra_rel) +
                     std::fabs(v) * kEps * (2.0 + std::fabs(log_abs));
  return {v, err, path};
}

// Inward integration from a point xs >= x where the asymptotic expansion is
// accurate. The recessive solution grows inward, so the direction is stable.
EvalReport inward_ode_d(double nu, double x) {
  double xs = std::max(x, turning_point(nu) + 2.0);
  Asymptotic start = asymptotic_log(nu, xs);
  const double xs_cap = x + 80.0;
  while (start.series_rel > kOdeStartRel && xs < xs_cap) {
    xs += 0.5;
    start = asymptotic_log(nu, xs);
  }
  if (start.series_rel > kOdeStartRel) return failed(EvalPath::OdeFallback);
  WeberRun run = integrate_weber(nu, xs, {1.0, start.dlog}, x);
  run.log_scale += start.log_abs;
  return finish_run(run, x, nu, start.sign, start.series_rel, EvalPath::OdeFallback);
}

// Integration from z = 0, where D_nu and D'_nu have closed forms. Stable while
// z stays inside the oscillatory zone, and on the negative side wherever D_nu
// is the dominant solution.
EvalReport origin_ode_d(double nu, double z) {
  const double pref = kSqrtPi * std::exp2(0.5 * nu);
  const double d0 = pref * rgamma(0.5 * (1.0 - nu));
  const double dp0 = -kSqrt2 * pref * rgamma(-0.5 * nu);
  const double mag = std::hypot(d0, dp0);
  if (!std::isfinite(mag) || mag == 0.0) return failed(EvalPath::OdeFallback);
  WeberRun run = integrate_weber(nu, 0.0, {d0 / mag, dp0 / mag}, z);
  run.log_scale += std::log(mag);
  const double start_rel = std::max(rgamma_rel_bound(0.5 * (1.0 - nu)), rgamma_rel_bound(-0.5 * nu));
  return finish_run(run, z, nu, 1.0, start_rel, EvalPath::OdeFallback);
}

EvalReport positive_d(double nu, double x, bool allow_recurrence);

// D_{mu+1} = x D_mu - mu D_{mu-1}, started from orders in [-1, 1). Stable
// upward for x > 0 because D is the minimal solution as the order decreases.
// Seed and rounding errors are propagated through the signed recurrence
// itself; an absolute-value bound would be far too pessimistic once the
// orders pass the turning point and the recurrence starts to cancel.
EvalReport recurrence_d(double nu, double x) {
  const double whole = std::floor(nu);
  const double base = nu - whole;
  const EvalReport lower = positive_d(base - 1.0, x, false);
  const EvalReport cur = positive_d(base, x, false);
  if (!std::isfinite(lower.value) || !std::isfinite(cur.value)) return failed(EvalPath::Recurrence);
  const int n = static_cast<int>(whole);

  // Value of the recurrence solution with (y_{first-1}, y_first) = (p, q)
  // after stepping up to index n.
  auto propagate = [&](int first, double p, double q) {
    for (int j = first; j < n; ++j) {
      const double next = x * q - (base + j) * p;
      p = q;
      q = next;
    }
    return q;
  };

  long double d_prev = lower.value;
  long double d = cur.value;
  double rounding = 0.0;
  for (int j = 0; j < n; ++j) {
    const long double a = x * d;
    const long double b = (base + j) * d_prev;
    d_prev = d;
    d = a - b;
    rounding += kEps * static_cast<double>(std::fabs(a) + std::fabs(b)) *
                std::fabs(propagate(j + 1, 0.0, 1.0));
  }
  const double err = lower.est_abs_error * std::fabs(propagate(0, 1.0, 0.0)) +
                     cur.est_abs_error * std::fabs(propagate(0, 0.0, 1.0)) + rounding;
  return {static_cast<double>(d), err, EvalPath::Recurrence};
}

EvalReport positive_d(double nu, double x, bool allow_recurrence) {
  EvalReport best = failed(EvalPath::Series);
  if (0.5 * x * x <= kSeriesMaxHalfSquare) {
    best = series_d(nu, x);
    if (accepted(best)) return best;
  }
  const double tp = turning_point(nu);
  if (x > tp + 1.0) {
    best = better(best, asymptotic_d(nu, x));
    if (accepted(best)) return best;
  }
  if (nu < 1.0) return better(best, inward_ode_d(nu, x));
  if (!allow_recurrence) return best;
  best = better(best, recurrence_d(nu, x));
  if (accepted(best) || x >= tp) return best;
  return better(best, origin_ode_d(nu, x));
}

// z < 0 through the reflection D_nu(-x) = cos(pi nu) D_nu(x) + pi rgamma(-nu) V(-nu-1/2, x).
// V's two Kummer components enter with non-negative dominant weights, so the
// pair does not cancel the way the direct expansion does near integer nu.
EvalReport connection_d(double nu, double x) {
  const EvalReport recessive = positive_d(nu, x, true);
  const double c = cos_pi(nu);
  const double rg = rgamma(-nu);
  EvalReport r{c * recessive.value, std::fabs(c) * recessive.est_abs_error, EvalPath::Connection};
  if (rg == 0.0) return r;

  // V(a,0) and V'(a,0) for a = -nu - 1/2.
  const double v0 = std::exp2(-0.5 * nu) * sin_pi(1.0 + 0.5 * nu) * rgamma(1.0 + 0.5 * nu);
  const double v0p = std::exp2(0.5 * (1.0 - nu)) * sin_pi(0.5 * (1.0 + nu)) * rgamma(0.5 * (1.0 + nu));
  const double coef_rel = rgamma_rel_bound(-nu) +
                          std::max(rgamma_rel_bound(1.0 + 0.5 * nu), rgamma_rel_bound(0.5 * (1.0 + nu))) +
                          8.0 * kEps;
  const EvalReport v = kummer_pair(kPi * rg * v0, -0.5 * nu, kPi * rg * v0p, 0.5 * (1.0 - nu), x,
                                   coef_rel, EvalPath::Connection);
  r.est_abs_error += v.est_abs_error + kEps * (std::fabs(r.value) + std::fabs(v.value));
  r.value += v.value;
  return r;
}

EvalReport negative_d(double nu, double z) {
  EvalReport best = series_d(nu, z);
  if (accepted(best)) return best;
  best = better(best, connection_d(nu, -z));
  if (accepted(best)) return best;
  return better(best, origin_ode_d(nu, z));
}

void check_argument(double z, const char* what) {
  if (!std::isfinite(z) || std::fabs(z) > kMaxPcfArgument) {
    throw DomainError(std::string(what) + ": argument z = " + fmt_real(z) + " outside [-40, 40]");
  }
}

}  // namespace

std::string_view to_string(EvalPath path) {
  switch (path) {
    case EvalPath::Series: return "series";
    case EvalPath::Asymptotic: return "asymptotic";
    case EvalPath::OdeFallback: return "ode-fallback";
    case EvalPath::Recurrence: return "recurrence";
    case EvalPath::Connection: return "connection";
  }
  return "unknown";
}

PcfOrder::PcfOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu < kMin || nu > kMax) {
    throw DomainError("parabolic cylinder order nu = " + fmt_real(nu) + " outside [-1, 200]");
  }
}

EvalReport pcf_d(PcfOrder order, double z) {
  check_argument(z, "pcf_d");
  const double nu = order.value();
  EvalReport r = z >= 0.0 ? positive_d(nu, z, true) : negative_d(nu, z);
  if (!std::isfinite(r.value)) {
    throw OverflowError("pcf_d: D_" + fmt_real(nu) + "(" + fmt_real(z) + ") is not representable");
  }
  if (!std::isfinite(r.est_abs_error)) r.est_abs_error = kInf;
  return r;
}

EvalReport pcf_d_prime(PcfOrder order, double z) {
  check_argument(z, "pcf_d_prime");
  const double nu = order.value();
  const EvalReport d = pcf_d(order, z);
  const EvalReport d1 = pcf_d(PcfOrder(nu + 1.0), z);
  const double a = 0.5 * z * d.value;
  EvalReport r;
  r.value = a - d1.value;
  const double ea = 0.5 * std::fabs(z) * d.est_abs_error;
  r.est_abs_error = ea + d1.est_abs_error + kEps * (std::fabs(a) + std::fabs(d1.value));
  r.path = ea >= d1.est_abs_error ? d.path : d1.path;
  return r;
}

}  // namespace dirac1d::specfun
