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

#include "dirac1d/errors.hpp"
#include "dirac1d/specfun.hpp"

namespace dirac1d::specfun {

double hermite(int n, double x) {
  if (n < 0 || n > 300) {
    throw DomainError("hermite: degree " + std::to_string(n) + " outside [0, 300]");
  }
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    if (!std::isfinite(cur)) break;
  }
  if (!std::isfinite(cur)) {
    throw OverflowError("hermite: H_" + std::to_string(n) + "(" +
                        dirac1d::detail::fmt_real(x) + ") overflows");
  }
  return cur;
}

}  // namespace dirac1d::specfun
