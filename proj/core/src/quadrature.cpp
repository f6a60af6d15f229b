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

#include "dirac1d/quadrature.hpp"

#include <cmath>

#include "dirac1d/errors.hpp"

namespace dirac1d::quadrature {

namespace {

struct Panel {
  double a, fa, m, fm, b, fb, whole;
};

double simpson(double a, double fa, double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

class Integrator {
 public:
  explicit Integrator(const std::function<double(double)>& f) : f_(f) {}

  double eval(double x) {
    ++evaluations_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      throw DomainError("adaptive_simpson: non-finite integrand at x = " + detail::fmt_real(x));
    }
    return y;
  }

  void run(const Panel& p, double tol, int depth) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = simpson(p.a, p.fa, flm, p.m, p.fm);
    const double right = simpson(p.m, p.fm, frm, p.b, p.fb);
    const double delta = left + right - p.whole;
    if (std::fabs(delta) <= 15.0 * tol) {
      value_ += left + right + delta / 15.0;
      error_ += std::fabs(delta) / 15.0;
      return;
    }
    if (depth == 0) {
      throw NonConvergence("adaptive_simpson: depth limit reached on [" +
                           detail::fmt_real(p.a) + ", " + detail::fmt_real(p.b) + "]");
    }
    run({p.a, p.fa, lm, flm, p.m, p.fm, left}, 0.5 * tol, depth - 1);
    run({p.m, p.fm, rm, frm, p.b, p.fb, right}, 0.5 * tol, depth - 1);
  }

  QuadratureResult result() const { return {value_, error_, evaluations_}; }

 private:
  const std::function<double(double)>& f_;
  double value_ = 0.0;
  double error_ = 0.0;
  long evaluations_ = 0;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0)) throw DomainError("adaptive_simpson: tolerance must be positive");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("adaptive_simpson: infinite limits");
  }
  if (a == b) return {};
  Integrator in(f);
  // A fixed first split keeps a narrow peak from hiding between three nodes.
  constexpr int kInitialPanels = 16;
  const double w = (b - a) / kInitialPanels;
  double x0 = a;
  double f0 = in.eval(x0);
  for (int i = 1; i <= kInitialPanels; ++i) {
    const double x1 = i == kInitialPanels ? b : a + i * w;
    const double xm = 0.5 * (x0 + x1);
    const double fm = in.eval(xm);
    const double f1 = in.eval(x1);
    in.run({x0, f0, xm, fm, x1, f1, simpson(x0, f0, fm, x1, f1)}, abs_tol / kInitialPanels,
           max_depth);
    x0 = x1;
    f0 = f1;
  }
  return in.result();
}

double simpson_samples(const double* y, long n, double h) {
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (y[0] + y[1]);
  long end = n;
  double tail = 0.0;
  if (n % 2 == 0) {
    // closing Simpson 3/8 panel over the last three intervals
    end = n - 3;
    tail = 3.0 * h / 8.0 * (y[n - 4] + 3.0 * y[n - 3] + 3.0 * y[n - 2] + y[n - 1]);
  }
  double s = 0.0;
  for (long i = 0; i + 2 < end; i += 2) {
    s += y[i] + 4.0 * y[i + 1] + y[i + 2];
  }
  return s * h / 3.0 + tail;
}

}  // namespace dirac1d::quadrature
