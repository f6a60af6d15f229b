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

// Two-sided RK4 shooting for the bound states of
//     psi1' = E psi2 - (m + g|x|) psi1
//     psi2' = (m + g|x|) psi2 - E psi1
// Independent of the special-function code: it only needs m, g and E.

#include <vector>

#include "dirac1d/model.hpp"

namespace dirac1d::oracle {

struct ShootingConfig {
  double x_max = 10.0;
  double h = 0.01;
  double e_min = 0.0;
  double e_max = 4.0;
  double e_step = 0.01;
  /// Bracket width at which energy bisection stops.
  double tol = 1e-12;

  /// x_max = 10/sqrt(g), h = 0.01/sqrt(g), e_step = 0.01 sqrt(g),
  /// window [0, 4 sqrt(g)], tol = 1e-12 sqrt(g).
  static ShootingConfig defaults(const model::PotentialParams& p);
};

/// Throws DomainError unless x_max sqrt(g) >= 8, 0 < h <= x_max/4,
/// 0 <= e_min < e_max, e_step > 0 and tol > 0.
void validate(const model::PotentialParams& p, const ShootingConfig& config);

struct SideState {
  double psi1 = 0.0;
  double psi2 = 0.0;
  /// log of the factor removed by rescaling; the true solution is
  /// exp(log_scale) (psi1, psi2).
  double log_scale = 0.0;
};

/// Integrates from -x_max (Left) or +x_max (Right) to 0 starting on the
/// decaying direction. Throws StepError if a rescaled state is not finite.
SideState integrate_side(const model::PotentialParams& p, double energy, model::Side side,
                         const ShootingConfig& config);

/// (psi1_L psi2_R - psi1_R psi2_L) / (|psi_L| |psi_R|) at x = 0.
double match_determinant(const model::PotentialParams& p, double energy,
                         const ShootingConfig& config);

struct MatchResult {
  double energy = 0.0;
  double mismatch = 0.0;
  bool converged = false;
  /// Within 2 e_step of either end of the scan window.
  bool near_window_edge = false;
};

/// Sign changes of match_determinant on the e_step grid over
/// [e_min, e_max], each refined by bisection, in ascending energy.
std::vector<MatchResult> eigenvalues(const model::PotentialParams& p,
                                     const ShootingConfig& config);

/// The lowest n positive levels. Starts from config's window and widens
/// e_max until n levels are found; throws WindowExhausted beyond
/// E = sqrt(2g * 200).
std::vector<MatchResult> first_levels(const model::PotentialParams& p, int n,
                                      const ShootingConfig& config);

}  // namespace dirac1d::oracle
