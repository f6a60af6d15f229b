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

// Physical layer for the 1+1 dimensional Dirac equation with the scalar
// potential V(x) = g|x| in natural units:
//     psi1' = E psi2 - (m + g|x|) psi1
//     psi2' = (m + g|x|) psi2 - E psi1
//
// For x >= 0 the solution is (C D_{nu+1}(eta), D D_nu(eta)) with
// eta = sqrt2 (alpha + sqrt(g) x); for x < 0 it is (C' D_nu(eta'), D' D_{nu+1}(eta'))
// with eta' = sqrt2 (alpha - sqrt(g) x). E^2 = 2g(nu+1).

#include <vector>

#include "dirac1d/quantize.hpp"

namespace dirac1d::model {

class PotentialParams {
 public:
  /// Throws DomainError unless g > 0 and m >= 0, both finite.
  static PotentialParams from_mass_coupling(double m, double g);
  /// m = alpha sqrt(g).
  static PotentialParams from_alpha(double alpha, double g = 1.0);

  double m() const noexcept { return m_; }
  double g() const noexcept { return g_; }
  double alpha() const;

 private:
  PotentialParams(double m, double g) : m_(m), g_(g) {}
  double m_;
  double g_;
};

enum class Side { Right, Left };
enum class EnergySign { Positive, Negative };

struct Coordinates {
  double xi = 0.0;
  double eta = 0.0;
  Side side = Side::Right;
};

struct EnergyLevel {
  double nu = 0.0;
  quantize::SignBranch branch = quantize::SignBranch::Plus;
  double energy = 0.0;
  EnergySign sign = EnergySign::Positive;
};

struct WavefunctionCoefficients {
  double c_plus = 0.0;   // C
  double d_plus = 0.0;   // D
  double c_minus = 0.0;  // C'
  double d_minus = 0.0;  // D'
};

struct BispinorSample {
  double x = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;
};

double potential_at(const PotentialParams& p, double x) noexcept;

/// x = 0 maps to the Right side.
Coordinates coordinates(const PotentialParams& p, double x) noexcept;

/// E = +/- sqrt(2g(nu+1)). Throws DomainError for nu < -1.
EnergyLevel energy_from_nu(const PotentialParams& p, double nu, EnergySign sign,
                           quantize::SignBranch branch = quantize::SignBranch::Plus);

/// sqrt(2g(n+1)).
double energy_integer_case(double g, int n);

/// C = c_scale, D = C E/sqrt(2g), C' = C D_{nu+1}(z)/D_nu(z), D' = D D_nu(z)/D_{nu+1}(z)
/// with z = sqrt2 alpha. Throws DegenerateError when D_nu(z) or D_{nu+1}(z) is 0.
WavefunctionCoefficients assemble_coefficients(const PotentialParams& p,
                                               const quantize::QuantizationRoot& root,
                                               EnergySign sign, double c_scale = 1.0);

/// Throws DomainError when |eta| > 40 at x.
BispinorSample evaluate_bispinor(const PotentialParams& p, const WavefunctionCoefficients& c,
                                 double nu, double x);

std::vector<BispinorSample> sample_wavefunction(const PotentialParams& p,
                                                const WavefunctionCoefficients& c,
                                                const quantize::QuantizationRoot& root,
                                                const std::vector<double>& grid);

/// Largest relative jump of the two components across x = 0: the Right
/// formula at 0 against the Left formula at 0.
double continuity_jump(const PotentialParams& p, const WavefunctionCoefficients& c, double nu);

struct NormalizeResult {
  WavefunctionCoefficients coeffs;
  double norm_error = 0.0;
  /// Integral of psi1^2 + psi2^2 before rescaling.
  double norm_before = 0.0;
};

/// Rescales all four coefficients so that the integral of psi1^2 + psi2^2
/// over [-halfwidth, halfwidth] is 1, then flips the overall sign so C > 0
/// (D' > 0 when C = 0). Throws TailError when the integrand at either edge
/// exceeds 1e-12 of its peak, NonConvergence when the quadrature error
/// stays above 1e-9.
NormalizeResult normalize(const PotentialParams& p, const WavefunctionCoefficients& c,
                          const quantize::QuantizationRoot& root, double halfwidth);

/// Default normalization halfwidth, 8/sqrt(g) past the classical region.
double default_halfwidth(const PotentialParams& p, double nu);

struct DiracResidual {
  double r1 = 0.0;
  double r2 = 0.0;
  /// max(|psi1'|, |M psi1|, |E psi2|, |psi2'|, |M psi2|, |E psi1|) at x.
  double scale = 0.0;
};

/// r1 = psi1' + (m+g|x|) psi1 - E psi2, r2 = -psi2' + (m+g|x|) psi2 - E psi1
/// with 5-point central differences of step 1e-4/sqrt(g). Requires
/// |x| > 2e-4/sqrt(g) so the stencil stays on one side of the kink.
DiracResidual dirac_residual(const PotentialParams& p, const EnergyLevel& level,
                             const WavefunctionCoefficients& c, double x);

}  // namespace dirac1d::model
