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

// Quantization conditions for the scalar |x| potential and the root search
// over the real order nu.
//
// Continuity of both bispinor components at x = 0 gives
//     D_{nu+1}(sqrt2 alpha) = +/- sqrt(nu+1) D_nu(sqrt2 alpha)        (A)
// and, after D'_nu = (z/2) D_nu - D_{nu+1},
//     D'_nu(sqrt2 alpha) = [alpha/sqrt2 -/+ sqrt(nu+1)] D_nu(sqrt2 alpha) (B)
// The "+" of (A) pairs with the "-" of (B) and vice versa.

#include <string_view>
#include <vector>

namespace dirac1d::quantize {

/// Sign choice in form (A).
enum class SignBranch { Plus, Minus };

/// Sign choice in the derivative form (B): Minus reads alpha/sqrt2 - sqrt(nu+1).
enum class DerivSign { Minus, Plus };

std::string_view to_string(SignBranch b);
std::string_view to_string(DerivSign s);

/// (A) <-> (B) pairing: Plus <-> DerivSign::Minus.
constexpr DerivSign dual(SignBranch b) noexcept {
  return b == SignBranch::Plus ? DerivSign::Minus : DerivSign::Plus;
}
constexpr SignBranch dual(DerivSign s) noexcept {
  return s == DerivSign::Minus ? SignBranch::Plus : SignBranch::Minus;
}

struct RootBracket {
  double nu_lo = 0.0;
  double nu_hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;

  /// An exact zero hit on the scan grid: nu_lo == nu_hi and f == 0.
  bool degenerate() const noexcept { return nu_lo == nu_hi; }
};

struct QuantizationRoot {
  double nu = 0.0;
  SignBranch branch = SignBranch::Plus;
  double residual = 0.0;
  int iterations = 0;
};

/// D_{nu+1}(sqrt2 alpha) -/+ sqrt(nu+1) D_nu(sqrt2 alpha), "-" for Plus.
/// Requires nu > -1, alpha >= 0 and sqrt2 alpha inside the pcf range.
double condition_residual(double nu, double alpha, SignBranch branch);

/// D'_nu(z) - [alpha/sqrt2 -/+ sqrt(nu+1)] D_nu(z), z = sqrt2 alpha.
/// Equals -condition_residual(nu, alpha, dual(sign)).
double condition_residual_deriv_form(double nu, double alpha, DerivSign sign);

/// Evaluates the residual on nu_min + k*step, k = 0..N, and returns every
/// sign change between neighbours plus exact zeros as degenerate brackets,
/// in ascending nu. Evaluation failures are rethrown with nu attached.
std::vector<RootBracket> scan_brackets(double alpha, SignBranch branch, double nu_min,
                                       double nu_max, double step);

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr double kResidualTol = 1e-13;

/// Bisection with secant acceleration until the bracket is narrower than
/// tol or |residual| <= 1e-13. Throws NonConvergence after 200 iterations.
QuantizationRoot refine_root(const RootBracket& bracket, double alpha, SignBranch branch,
                             double tol = kDefaultRootTol);

struct SpectrumOptions {
  double nu_min = -1.0 + 1e-9;
  double nu_max = 80.0;
  double step = 0.01;
  /// Hard cap on automatic extension of the window.
  double nu_cap = 199.0;
  double tol = kDefaultRootTol;
};

/// The n_levels lowest roots of both branches merged in ascending nu.
/// Throws WindowExhausted if the cap is reached first.
std::vector<QuantizationRoot> spectrum(double alpha, int n_levels,
                                       const SpectrumOptions& options = {});

/// H_{n+1}(alpha) -/+ sqrt(2(n+1)) H_n(alpha), 0 <= n <= 250: the condition
/// obtained when nu is forced to be a non-negative integer.
double hermite_condition_residual(int n, double alpha, SignBranch branch);

struct HermiteCheckRow {
  int n = 0;
  double residual_plus = 0.0;
  double residual_minus = 0.0;
  bool root_plus = false;
  bool root_minus = false;
  bool overflow = false;
};

/// Rows for n = 0..n_max. A row is a root when its residual is zero to
/// 1e-9 of the larger of the two terms it compares.
std::vector<HermiteCheckRow> hermite_check(double alpha, int n_max);

}  // namespace dirac1d::quantize
