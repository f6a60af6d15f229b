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

// Internal: Kummer series with an explicit binary exponent so that
// M(a, b, x) can be combined with exp(-x/2)-type prefactors without
// intermediate overflow for x up to several hundred.

namespace dirac1d::specfun::detail {

struct ScaledSeries {
  long double sum = 0.0;  // M = sum * 2^exp2
  double abs_err = 0.0;  // error bound, same scaling
  int exp2 = 0;
  int terms = 0;
};

/// Requires b not a non-positive integer; throws NonConvergence after
/// 10000 terms.
ScaledSeries kummer_scaled(double a, double b, long double x);

}  // namespace dirac1d::specfun::detail
