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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dirac1d/errors.hpp"
#include "dirac1d/model.hpp"
#include "dirac1d/quantize.hpp"
#include "support/generators.hpp"

namespace {

using namespace dirac1d;
using namespace dirac1d::model;
using quantize::QuantizationRoot;
using quantize::SignBranch;

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kAlphaHalf = 1.0 / kSqrt2;

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

QuantizationRoot ground_root() { return {0.0, SignBranch::Plus, 0.0, 0}; }

TEST(Params, Construction) {
  const auto p = PotentialParams::from_mass_coupling(1.0, 2.0);
  EXPECT_DOUBLE_EQ(p.alpha(), kAlphaHalf);
  const auto q = PotentialParams::from_alpha(0.3, 4.0);
  EXPECT_DOUBLE_EQ(q.m(), 0.6);
  EXPECT_DOUBLE_EQ(q.alpha(), 0.3);
  EXPECT_THROW(PotentialParams::from_mass_coupling(1.0, 0.0), DomainError);
  EXPECT_THROW(PotentialParams::from_mass_coupling(-0.1, 1.0), DomainError);
  EXPECT_THROW(PotentialParams::from_alpha(-1.0), DomainError);
}

TEST(Potential, AbsoluteValue) {
  EXPECT_EQ(potential_at(PotentialParams::from_mass_coupling(0.0, 1.0), -2.0), 2.0);
  EXPECT_EQ(potential_at(PotentialParams::from_mass_coupling(0.0, 0.5), 0.0), 0.0);
  EXPECT_EQ(potential_at(PotentialParams::from_mass_coupling(0.0, 2.0), 3.0), 6.0);
}

TEST(Coordinates, Maps) {
  const auto c = coordinates(PotentialParams::from_mass_coupling(1.0, 2.0), 0.0);
  EXPECT_EQ(c.side, Side::Right);
  EXPECT_DOUBLE_EQ(c.xi, kAlphaHalf);
  EXPECT_DOUBLE_EQ(c.eta, 1.0);
  const auto l = coordinates(PotentialParams::from_mass_coupling(0.0, 1.0), -3.0);
  EXPECT_EQ(l.side, Side::Left);
  EXPECT_DOUBLE_EQ(l.xi, 3.0);
  EXPECT_DOUBLE_EQ(l.eta, 3.0 * kSqrt2);
  const auto p = PotentialParams::from_alpha(0.8, 3.0);
  EXPECT_DOUBLE_EQ(coordinates(p, 0.0).eta, kSqrt2 * p.alpha());
  EXPECT_DOUBLE_EQ(coordinates(p, -0.0).eta, coordinates(p, 1e-300).eta);
}

TEST(Energy, FromNu) {
  const auto p = PotentialParams::from_alpha(0.4);
  EXPECT_DOUBLE_EQ(energy_from_nu(p, 0.0, EnergySign::Positive).energy, kSqrt2);
  EXPECT_NEAR(energy_from_nu(p, 2.681, EnergySign::Positive).energy, 2.7133, 1e-4);
  EXPECT_EQ(energy_from_nu(p, -1.0, EnergySign::Negative).energy, 0.0);
  EXPECT_DOUBLE_EQ(energy_from_nu(p, 1.3, EnergySign::Negative).energy,
                   -energy_from_nu(p, 1.3, EnergySign::Positive).energy);
  EXPECT_THROW(energy_from_nu(p, -1.01, EnergySign::Positive), DomainError);
}

TEST(Energy, IntegerCase) {
  EXPECT_DOUBLE_EQ(energy_integer_case(1.0, 0), kSqrt2);
  EXPECT_DOUBLE_EQ(energy_integer_case(1.0, 3), 2.0 * kSqrt2);
  EXPECT_DOUBLE_EQ(energy_integer_case(2.0, 0), 2.0);
  for (int n = 0; n < 10; ++n) {
    const auto p = PotentialParams::from_alpha(1.0, 2.5);
    EXPECT_DOUBLE_EQ(energy_integer_case(2.5, n), energy_from_nu(p, n, EnergySign::Positive).energy);
  }
}

TEST(EnergyProperty, SquareMatchesOrder) {
  dirac1d::testing::Gen gen(301);
  for (int i = 0; i < 200; ++i) {
    const auto p = PotentialParams::from_alpha(gen.uniform(0, 3), gen.uniform(0.1, 10));
    const double nu = gen.uniform(-1.0, 100.0);
    const double e = energy_from_nu(p, nu, EnergySign::Positive).energy;
    EXPECT_LE(rel(e * e, 2.0 * p.g() * (nu + 1.0)), 1e-12);
  }
}

TEST(Assemble, AnalyticGroundState) {
  const auto p = PotentialParams::from_alpha(kAlphaHalf);
  const auto c = assemble_coefficients(p, ground_root(), EnergySign::Positive);
  EXPECT_DOUBLE_EQ(c.c_plus, 1.0);
  EXPECT_NEAR(c.d_plus, 1.0, 1e-15);
  EXPECT_NEAR(c.c_minus, 1.0, 1e-15);
  EXPECT_NEAR(c.d_minus, 1.0, 1e-15);
}

TEST(Assemble, RejectsZeroScale) {
  const auto p = PotentialParams::from_alpha(kAlphaHalf);
  EXPECT_THROW(assemble_coefficients(p, ground_root(), EnergySign::Positive, 0.0), DomainError);
}

class LevelTest : public ::testing::TestWithParam<double> {};

TEST_P(LevelTest, CoefficientRatiosAndContinuity) {
  const double alpha = GetParam();
  const auto p = PotentialParams::from_alpha(alpha);
  for (const auto& root : quantize::spectrum(alpha, 4)) {
    SCOPED_TRACE(::testing::Message() << "nu=" << root.nu);
    for (const EnergySign sign : {EnergySign::Positive, EnergySign::Negative}) {
      const auto level = energy_from_nu(p, root.nu, sign, root.branch);
      const auto c = assemble_coefficients(p, root, sign, 0.7);
      const double ratio = level.energy / std::sqrt(2.0 * p.g());
      EXPECT_LE(rel(c.d_plus / c.c_plus, ratio), 1e-10);
      EXPECT_LE(rel(c.c_minus / c.d_minus, ratio), 1e-8);
      EXPECT_LE(continuity_jump(p, c, root.nu), 1e-9);
      const double jump1 = evaluate_bispinor(p, c, root.nu, 0.0).psi1 -
                           evaluate_bispinor(p, c, root.nu, -1e-300).psi1;
      EXPECT_LE(std::fabs(jump1), 1e-9 * std::fabs(evaluate_bispinor(p, c, root.nu, 0.0).psi1));
    }
  }
}

TEST_P(LevelTest, SecondOrderReduction) {
  const double alpha = GetParam();
  const auto p = PotentialParams::from_alpha(alpha, 1.7);
  const double sg2 = 2.0 * p.g();
  for (const auto& root : quantize::spectrum(alpha, 3)) {
    const auto c = assemble_coefficients(p, root, EnergySign::Positive);
    for (const double x : {-1.3, -0.4, 0.4, 1.1}) {
      SCOPED_TRACE(::testing::Message() << "nu=" << root.nu << " x=" << x);
      const double h = 1e-3;
      const auto m = evaluate_bispinor(p, c, root.nu, x - h);
      const auto s = evaluate_bispinor(p, c, root.nu, x);
      const auto q = evaluate_bispinor(p, c, root.nu, x + h);
      const double eta = coordinates(p, x).eta;
      const double d1 = (m.psi1 - 2 * s.psi1 + q.psi1) / (h * h);
      const double d2 = (m.psi2 - 2 * s.psi2 + q.psi2) / (h * h);
      // the component holding D_{nu+1} carries -nu-3/2, the other -nu-1/2
      const double k_upper = x >= 0 ? 1.5 : 0.5;
      const double k_lower = x >= 0 ? 0.5 : 1.5;
      const double w1 = sg2 * (0.25 * eta * eta - root.nu - k_upper) * s.psi1;
      const double w2 = sg2 * (0.25 * eta * eta - root.nu - k_lower) * s.psi2;
      const double scale = std::max({std::fabs(d1), std::fabs(w1), std::fabs(d2), std::fabs(w2)});
      EXPECT_LE(std::fabs(d1 - w1), 1e-5 * scale);
      EXPECT_LE(std::fabs(d2 - w2), 1e-5 * scale);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Alphas, LevelTest, ::testing::Values(kAlphaHalf, 0.2, 1.0, 2.0));

TEST(Assemble, NegativeEnergyFlipsLowerRatio) {
  const auto p = PotentialParams::from_alpha(1.0);
  const auto root = quantize::spectrum(1.0, 2)[1];
  const auto a = assemble_coefficients(p, root, EnergySign::Positive);
  const auto b = assemble_coefficients(p, root, EnergySign::Negative);
  EXPECT_DOUBLE_EQ(a.d_plus / a.c_plus, -(b.d_plus / b.c_plus));
  EXPECT_DOUBLE_EQ(a.c_minus, b.c_minus);
}

TEST(Sample, GaussianGroundStateComponent) {
  const auto p = PotentialParams::from_mass_coupling(1.0, 2.0);
  const auto c = assemble_coefficients(p, ground_root(), EnergySign::Positive);
  const auto samples = sample_wavefunction(p, c, ground_root(), {0.0, 0.3, 1.0, 2.5});
  for (const auto& s : samples) {
    const double eta = coordinates(p, s.x).eta;
    EXPECT_NEAR(s.psi2, c.d_plus * std::exp(-0.25 * eta * eta), 1e-15);
    EXPECT_NEAR(s.psi1, c.c_plus * eta * std::exp(-0.25 * eta * eta), 1e-15);
  }
}

TEST(Sample, DecaysAtEightOverRootG) {
  for (const double g : {1.0, 4.0}) {
    const auto p = PotentialParams::from_alpha(kAlphaHalf, g);
    const auto root = quantize::spectrum(kAlphaHalf, 3)[2];
    const auto c = assemble_coefficients(p, root, EnergySign::Positive);
    double peak = 0.0;
    for (int i = -400; i <= 400; ++i) {
      peak = std::max(peak, std::fabs(evaluate_bispinor(p, c, root.nu, i * 0.01 / std::sqrt(g)).psi1));
    }
    for (const double x : {-8.0, 8.0}) {
      EXPECT_LT(std::fabs(evaluate_bispinor(p, c, root.nu, x / std::sqrt(g)).psi1), 1e-10 * peak);
    }
  }
}

TEST(Sample, OutOfRangeGrid) {
  const auto p = PotentialParams::from_alpha(kAlphaHalf);
  const auto c = assemble_coefficients(p, ground_root(), EnergySign::Positive);
  EXPECT_THROW(sample_wavefunction(p, c, ground_root(), {0.0, 30.0}), DomainError);
}

TEST(Normalize, AnalyticGroundStateIntegral) {
  // C = D = C' = D' = 1: the density is (eta^2 + 1) exp(-eta^2/2) on both sides, eta >= 1.
  const auto p = PotentialParams::from_alpha(kAlphaHalf);
  const auto c = assemble_coefficients(p, ground_root(), EnergySign::Positive);
  const double exact =
      kSqrt2 * (std::exp(-0.5) + 2.0 * std::sqrt(std::numbers::pi / 2.0) * std::erfc(1.0 / kSqrt2));
  const auto n = normalize(p, c, ground_root(), default_halfwidth(p, 0.0));
  EXPECT_LE(rel(n.norm_before, exact), 1e-10);
  EXPECT_LE(n.norm_error, 1e-9);
  EXPECT_NEAR(n.coeffs.c_plus, 1.0 / std::sqrt(exact), 1e-10);
}

TEST(Normalize, IdempotentAndDomainInsensitive) {
  for (const double alpha : {kAlphaHalf, 2.0}) {
    const auto p = PotentialParams::from_alpha(alpha);
    const auto root = quantize::spectrum(alpha, 2)[1];
    const auto c = assemble_coefficients(p, root, EnergySign::Positive);
    const double w = default_halfwidth(p, root.nu);
    const auto a = normalize(p, c, root, w);
    const auto again = normalize(p, a.coeffs, root, w);
    EXPECT_NEAR(again.norm_before, 1.0, 1e-9);
    const auto b = normalize(p, c, root, 2.0 * w);
    EXPECT_LE(rel(b.coeffs.c_plus, a.coeffs.c_plus), 1e-9);
    EXPECT_LE(rel(b.coeffs.d_minus, a.coeffs.d_minus), 1e-9);
  }
}

TEST(Normalize, SignConventionAndTail) {
  const auto p = PotentialParams::from_alpha(kAlphaHalf);
  const auto c = assemble_coefficients(p, ground_root(), EnergySign::Positive, -3.0);
  const auto n = normalize(p, c, ground_root(), default_halfwidth(p, 0.0));
  EXPECT_GT(n.coeffs.c_plus, 0.0);
  EXPECT_THROW(normalize(p, c, ground_root(), 1.0), TailError);
  EXPECT_THROW(normalize(p, c, ground_root(), -1.0), DomainError);
}

TEST(DiracResidual, GroundStateBothSides) {
  const auto p = PotentialParams::from_alpha(kAlphaHalf);
  const auto level = energy_from_nu(p, 0.0, EnergySign::Positive);
  const auto c = assemble_coefficients(p, ground_root(), EnergySign::Positive);
  const auto r = dirac_residual(p, level, c, 0.5);
  EXPECT_LE(std::max(std::fabs(r.r1), std::fabs(r.r2)), 1e-6 * r.scale);
  const auto l = dirac_residual(p, level, c, -0.5);
  EXPECT_LE(std::max(std::fabs(l.r1), std::fabs(l.r2)), 1e-6 * l.scale);
  EXPECT_NEAR(l.scale, r.scale, 1e-6 * r.scale);
  EXPECT_THROW(dirac_residual(p, level, c, 1e-5), DomainError);
}

TEST(DiracResidual, NonRootFailsOnTheLeft) {
  const auto p = PotentialParams::from_alpha(kAlphaHalf);
  dirac1d::testing::Gen gen(302);
  for (int i = 0; i < 10; ++i) {
    const QuantizationRoot fake{gen.uniform(0.2, 1.3), SignBranch::Plus, 0.0, 0};
    const auto level = energy_from_nu(p, fake.nu, EnergySign::Positive);
    const auto c = assemble_coefficients(p, fake, EnergySign::Positive);
    const auto r = dirac_residual(p, level, c, -0.5);
    EXPECT_GT(std::max(std::fabs(r.r1), std::fabs(r.r2)), 1e-3 * r.scale) << fake.nu;
  }
}

TEST(ModelProperty, AlphaOnlyDependence) {
  const auto a = quantize::spectrum(PotentialParams::from_mass_coupling(1.0, 2.0).alpha(), 4);
  const auto b = quantize::spectrum(PotentialParams::from_mass_coupling(std::sqrt(2.0), 4.0).alpha(), 4);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i].nu, b[i].nu, 1e-12);
}

TEST(ModelProperty, EnergyScalesWithRootG) {
  dirac1d::testing::Gen gen(303);
  for (int i = 0; i < 5; ++i) {
    const double alpha = gen.uniform(0.0, 2.5);
    const auto roots = quantize::spectrum(alpha, 4);
    const auto p1 = PotentialParams::from_alpha(alpha, 1.0);
    const auto p4 = PotentialParams::from_alpha(alpha, 4.0);
    for (const auto& r : roots) {
      const double e1 = energy_from_nu(p1, r.nu, EnergySign::Positive).energy;
      const double e4 = energy_from_nu(p4, r.nu, EnergySign::Positive).energy;
      EXPECT_NEAR(e4 / e1, 2.0, 1e-12);
    }
  }
}

}  // namespace
