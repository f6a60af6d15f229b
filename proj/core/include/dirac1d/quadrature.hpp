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

#include <functional>

namespace dirac1d::quadrature {

struct QuadratureResult {
  double value = 0.0;
  /// Sum of the Richardson error estimates over accepted panels.
  double est_abs_error = 0.0;
  long evaluations = 0;
};

/// Adaptive Simpson rule on [a, b]. Panels are split until the Richardson
/// estimate of each is below its share of abs_tol or max_depth is reached.
/// Throws NonConvergence if a panel at max_depth still misses its share.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, int max_depth = 40);

/// Composite Simpson on equally spaced samples; an odd sample count is
/// handled with a closing 3/8 panel.
double simpson_samples(const double* y, long n, double h);

}  // namespace dirac1d::quadrature
