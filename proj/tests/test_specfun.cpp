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
#include "dirac1d/specfun.hpp"
#include "support/generators.hpp"

namespace {

using namespace dirac1d;
using namespace dirac1d::specfun;
using dirac1d::specfun::gamma;

#include "data/reference_values.inc"

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

double rel(double got, double want) {
  return want == 0.0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
}

double d(double nu, double z) { return pcf_d(PcfOrder(nu), z).value; }
double dp(double nu, double z) { return pcf_d_prime(PcfOrder(nu), z).value; }

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(gamma(0.5), 1.7724538509055159, 1e-15);
  EXPECT_EQ(gamma(5.0), 24.0);
  EXPECT_NEAR(gamma(-0.5), -3.5449077018110318, 4e-15);
  EXPECT_EQ(gamma(1.0), 1.0);
}

TEST(Gamma, PolesAndOverflow) {
  EXPECT_THROW(gamma(0.0), PoleError);
  EXPECT_THROW(gamma(-3.0), PoleError);
  EXPECT_THROW(gamma(171.7), OverflowError);
  EXPECT_THROW(gamma(std::nan("")), DomainError);
  // PoleError is a DomainError
  EXPECT_THROW(gamma(-1.0), DomainError);
}

TEST(Gamma, MatchesReferenceTable) {
  for (const auto& ref : kGammaRef) {
    SCOPED_TRACE(ref.x);
    EXPECT_LE(rel(gamma(ref.x), ref.value), 1e-13);
  }
}

TEST(Rgamma, KnownValues) {
  EXPECT_EQ(rgamma(0.0), 0.0);
  EXPECT_EQ(rgamma(-1.0), 0.0);
  EXPECT_EQ(rgamma(-57.0), 0.0);
  EXPECT_NEAR(rgamma(0.5), 0.5641895835477563, 1e-16);
  EXPECT_GT(rgamma(175.0), 0.0);
  EXPECT_LT(rgamma(175.0), 1e-300);
  EXPECT_EQ(rgamma(200.0), 0.0);
}

TEST(Rgamma, MatchesReferenceTable) {
  for (const auto& ref : kGammaRef) {
    SCOPED_TRACE(ref.x);
    EXPECT_LE(rel(rgamma(ref.x), 1.0 / ref.value), 1e-13);
  }
}

TEST(Rgamma, ProductWithGammaIsOne) {
  dirac1d::testing::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const double x = gen.non_integer(-160.0, 160.0, 1e-6);
    SCOPED_TRACE(x);
    EXPECT_NEAR(gamma(x) * rgamma(x), 1.0, 1e-12);
  }
}

TEST(SinCosPi, ExactAtLatticePoints) {
  EXPECT_EQ(sin_pi(3.0), 0.0);
  EXPECT_EQ(sin_pi(-1e6), 0.0);
  EXPECT_EQ(cos_pi(2.5), 0.0);
  EXPECT_EQ(cos_pi(-7.5), 0.0);
  EXPECT_EQ(sin_pi(0.5), 1.0);
  EXPECT_EQ(cos_pi(1.0), -1.0);
}

TEST(Kummer, Identities) {
  EXPECT_NEAR(kummer_m(2.0, 2.0, 1.0).value, 2.718281828459045, 1e-15);
  EXPECT_EQ(kummer_m(0.3, 1.7, 0.0).value, 1.0);
  EXPECT_NEAR(kummer_m(-1.0, 0.5, 3.0).value, -5.0, 1e-14);
}

TEST(Kummer, Errors) {
  EXPECT_THROW(kummer_m(1.0, -2.0, 1.0), DomainError);
  EXPECT_THROW(kummer_m(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(kummer_m(1.0, 1.5, 400.5), DomainError);
}

TEST(Kummer, MatchesReferenceWithinClaimedError) {
  for (const auto& ref : kKummerRef) {
    SCOPED_TRACE(::testing::Message() << ref.a << " " << ref.b << " " << ref.z);
    const EvalReport r = kummer_m(ref.a, ref.b, ref.z);
    const double err = std::fabs(r.value - ref.value);
    EXPECT_LE(err, r.est_abs_error + 1e-300);
    if (r.est_abs_error <= 1e-14 * std::fabs(r.value)) {
      EXPECT_LE(err, 1e-12 * std::fabs(ref.value));
    }
  }
}

TEST(Hermite, KnownValues) {
  EXPECT_EQ(hermite(0, 3.7), 1.0);
  EXPECT_DOUBLE_EQ(hermite(1, 1.0 / kSqrt2), 1.4142135623730951);
  EXPECT_DOUBLE_EQ(hermite(3, 0.5), -5.0);
  EXPECT_DOUBLE_EQ(hermite(4, 1.0), 16.0 - 48.0 + 12.0);
}

TEST(Hermite, RangeAndOverflow) {
  EXPECT_THROW(hermite(-1, 0.0), DomainError);
  EXPECT_THROW(hermite(301, 0.0), DomainError);
  EXPECT_THROW(hermite(300, 1e3), OverflowError);
}

TEST(PcfOrder, Range) {
  EXPECT_NO_THROW(PcfOrder(-1.0));
  EXPECT_NO_THROW(PcfOrder(200.0));
  EXPECT_THROW(PcfOrder(-1.0000001), DomainError);
  EXPECT_THROW(PcfOrder(200.5), DomainError);
  EXPECT_THROW(PcfOrder(std::nan("")), DomainError);
}

TEST(Pcf, ArgumentRange) {
  EXPECT_THROW(pcf_d(PcfOrder(1.0), 40.5), DomainError);
  EXPECT_THROW(pcf_d(PcfOrder(1.0), -41.0), DomainError);
  EXPECT_THROW(pcf_d_prime(PcfOrder(199.5), 1.0), DomainError);
}

TEST(Pcf, ClosedForms) {
  EXPECT_NEAR(d(0.0, 1.0), 0.7788007830714049, 1e-15);
  EXPECT_NEAR(d(1.0, 1.0), 0.7788007830714049, 1e-15);
  // D_nu(0) = 2^{nu/2} sqrt(pi) / Gamma((1 - nu)/2)
  EXPECT_NEAR(d(0.5, 0.0), 0.58136831701911851, 1e-15);
  EXPECT_NEAR(d(0.5, 0.0), std::pow(2.0, 0.25) * std::sqrt(kPi) / gamma(0.25), 1e-15);
  const double want = std::pow(2.0, -1.5) * std::exp(-1.0) * hermite(3, -std::sqrt(2.0));
  EXPECT_LE(rel(d(3.0, -2.0), want), 1e-13);
}

TEST(Pcf, DerivativeClosedForms) {
  EXPECT_NEAR(dp(0.0, 1.0), -0.38940039153570244, 1e-15);
  EXPECT_NEAR(dp(0.0, 0.0), 0.0, 1e-16);
  const double h = 1e-5;
  const double fd = (d(1.7, 1.3 + h) - d(1.7, 1.3 - h)) / (2 * h);
  EXPECT_NEAR(dp(1.7, 1.3), fd, 1e-7);
}

TEST(Pcf, ReportsPathAndNonNegativeError) {
  for (const auto& ref : kPcfRef) {
    const EvalReport r = pcf_d(PcfOrder(ref.nu), ref.z);
    EXPECT_GE(r.est_abs_error, 0.0);
    EXPECT_FALSE(to_string(r.path).empty());
  }
}

TEST(Pcf, ReferenceAccuracyInCoreRegion) {
  for (const auto& ref : kPcfRef) {
    if (std::fabs(ref.z) > 8.0 || ref.nu > 60.0) continue;
    SCOPED_TRACE(::testing::Message() << "nu=" << ref.nu << " z=" << ref.z);
    EXPECT_LE(rel(d(ref.nu, ref.z), ref.value), 1e-10);
  }
}

TEST(Pcf, ErrorEstimateIsHonestEverywhere) {
  for (const auto& ref : kPcfRef) {
    SCOPED_TRACE(::testing::Message() << "nu=" << ref.nu << " z=" << ref.z);
    const EvalReport r = pcf_d(PcfOrder(ref.nu), ref.z);
    EXPECT_LE(std::fabs(r.value - ref.value), r.est_abs_error + 1e-300);
  }
}

TEST(PcfProperty, RecurrenceResidualWithinCombinedError) {
  dirac1d::testing::Gen gen(101);
  for (int i = 0; i < 200; ++i) {
    const double nu = gen.uniform(-1.0, 60.0);
    const double z = gen.uniform(-8.0, 8.0);
    SCOPED_TRACE(::testing::Message() << "nu=" << nu << " z=" << z);
    const EvalReport a = pcf_d(PcfOrder(nu), z);
    const EvalReport b = pcf_d(PcfOrder(nu + 1.0), z);
    const EvalReport c = pcf_d_prime(PcfOrder(nu), z);
    const double resid = std::fabs(c.value - 0.5 * z * a.value + b.value);
    const double budget = c.est_abs_error + 0.5 * std::fabs(z) * a.est_abs_error + b.est_abs_error;
    EXPECT_LE(resid, 10.0 * budget + 1e-300);
  }
}

TEST(PcfProperty, DerivativeMatchesFiniteDifference) {
  dirac1d::testing::Gen gen(102);
  for (int i = 0; i < 200; ++i) {
    const double nu = gen.uniform(-1.0, 10.0);
    const double z = gen.uniform(-5.0, 5.0);
    SCOPED_TRACE(::testing::Message() << "nu=" << nu << " z=" << z);
    const double h = 1e-5;
    const double fd = (d(nu, z + h) - d(nu, z - h)) / (2 * h);
    EXPECT_NEAR(dp(nu, z), fd, 1e-7 * std::max(1.0, std::fabs(fd)));
  }
}

TEST(PcfProperty, WeberEquationResidual) {
  dirac1d::testing::Gen gen(103);
  for (int i = 0; i < 200; ++i) {
    const double nu = gen.uniform(-0.9, 10.0);
    const double z = gen.uniform(-5.0, 5.0);
    SCOPED_TRACE(::testing::Message() << "nu=" << nu << " z=" << z);
    const double h = 1e-4;
    const double f0 = d(nu, z);
    const double d2 = (d(nu, z + h) - 2.0 * f0 + d(nu, z - h)) / (h * h);
    EXPECT_LE(std::fabs(d2 - (0.25 * z * z - nu - 0.5) * f0), 1e-5 * std::max(1.0, std::fabs(f0)));
  }
}

double wronskian(double nu, double z) {
  // W{D_nu(z), D_nu(-z)} with respect to z
  return d(nu, z) * (-dp(nu, -z)) - dp(nu, z) * d(nu, -z);
}

TEST(PcfProperty, WronskianIsConstantForNonIntegerOrder) {
  dirac1d::testing::Gen gen(104);
  for (int i = 0; i < 60; ++i) {
    const double nu = gen.non_integer(-0.99, 12.0, 1e-2);
    const double want = std::sqrt(2.0 * kPi) * rgamma(-nu);
    for (const double z : {0.5, 1.0, 2.0}) {
      SCOPED_TRACE(::testing::Message() << "nu=" << nu << " z=" << z);
      EXPECT_LE(rel(wronskian(nu, z), want), 1e-8);
    }
  }
}

TEST(PcfProperty, WronskianVanishesAtIntegerOrder) {
  for (int n = 0; n <= 5; ++n) {
    for (const double z : {0.5, 1.0, 2.0}) {
      const double scale = std::fabs(d(n, z) * dp(n, -z)) + std::fabs(dp(n, z) * d(n, -z));
      EXPECT_LE(std::fabs(wronskian(n, z)), 1e-13 * std::max(1.0, scale)) << n << " " << z;
    }
  }
}

TEST(PcfProperty, IntegerOrderHermiteReductionAndParity) {
  dirac1d::testing::Gen gen(105);
  for (int n = 0; n <= 8; ++n) {
    for (int i = 0; i < 25; ++i) {
      const double z = gen.uniform(-8.0, 8.0);
      SCOPED_TRACE(::testing::Message() << "n=" << n << " z=" << z);
      const double want = std::pow(2.0, -0.5 * n) * std::exp(-0.25 * z * z) * hermite(n, z / kSqrt2);
      const double got = d(n, z);
      const double tol = 1e-10 * std::max(std::fabs(want), 1e-300);
      if (std::fabs(want) > 1e-8 * std::exp(-0.25 * z * z)) {
        EXPECT_LE(std::fabs(got - want), tol);
        EXPECT_LE(std::fabs(d(n, -z) - (n % 2 ? -got : got)), 1e-10 * std::fabs(got));
      }
    }
  }
}

TEST(PcfProperty, SmoothAcrossIntegerOrder) {
  for (int n = 0; n <= 6; ++n) {
    for (const double z : {-3.0, 0.0, 2.5}) {
      const double lo = d(n - 1e-9, z), mid = d(n, z), hi = d(n + 1e-9, z);
      EXPECT_NEAR(lo, mid, 1e-7 * std::max(1.0, std::fabs(mid)));
      EXPECT_NEAR(hi, mid, 1e-7 * std::max(1.0, std::fabs(mid)));
    }
  }
}

}  // namespace
