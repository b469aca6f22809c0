#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eqbif/error.hpp"
#include "eqbif/radial_ode.hpp"
#include "oracles.hpp"

using eqbif::RadialProblem;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

TEST(RadialShoot, VanishesAtHemisphereEigenvalues) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 5; ++k) {
      const double lambda = static_cast<double>(k) * (n + k - 1);
      const int mode = (k - 1) % 2;
      EXPECT_LT(std::abs(eqbif::radial_shoot({n, mode, kHalfPi}, lambda)), 1e-6) << n << "," << k;
    }
  }
}

TEST(RadialShoot, SignChangesCountLowerEigenvalues) {
  // Mode 0 on the hemisphere of S^2 has eigenvalues 2, 12, 30.
  const RadialProblem p{2, 0, kHalfPi};
  EXPECT_EQ(eqbif::radial_shoot_detailed(p, 1.0).sign_changes, 0);
  EXPECT_EQ(eqbif::radial_shoot_detailed(p, 5.0).sign_changes, 1);
  EXPECT_EQ(eqbif::radial_shoot_detailed(p, 20.0).sign_changes, 2);
  EXPECT_EQ(eqbif::radial_shoot_detailed(p, 31.0).sign_changes, 3);
  EXPECT_GT(eqbif::radial_shoot_detailed(p, 1.0).value, 0.0);
}

TEST(ModeEigenvalues, HemisphereRoots) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const auto roots = eqbif::mode_eigenvalues({n, m, kHalfPi}, 60.0);
      std::vector<double> expected;
      for (int k = m + 1; static_cast<double>(k) * (n + k - 1) <= 60.0; k += 2) {
        expected.push_back(static_cast<double>(k) * (n + k - 1));
      }
      ASSERT_EQ(roots.size(), expected.size()) << n << "," << m;
      for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(roots[i], expected[i], 1e-6 * expected[i]);
    }
  }
}

TEST(ModeEigenvalues, GeneralRadiusMatchesFiniteDifferences) {
  for (double gamma : {0.5, 1.0, 2.0, 2.8}) {
    for (int n = 2; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        const double lambda_max = 80.0 / (gamma * gamma) + 20.0;
        const auto shot = eqbif::mode_eigenvalues({n, m, gamma}, lambda_max);
        const auto fd = oracle::fd_mode_eigenvalues(n, m, gamma, lambda_max * 0.999);
        ASSERT_GE(shot.size(), fd.size());
        for (std::size_t i = 0; i < fd.size(); ++i) {
          EXPECT_NEAR(shot[i], fd[i], 1e-5 * fd[i]) << "gamma=" << gamma << " n=" << n << " m=" << m;
        }
      }
    }
  }
}

TEST(ModeEigenvalues, EmptyBelowFirstRoot) {
  EXPECT_TRUE(eqbif::mode_eigenvalues({2, 0, kHalfPi}, 1.5).empty());
  EXPECT_TRUE(eqbif::mode_eigenvalues({3, 5, kHalfPi}, 20.0).empty());
}

TEST(ModeEigenvalues, RejectsBadRadius) {
  EXPECT_THROW((void)eqbif::radial_shoot({2, 0, 4.0}, 1.0), eqbif::Error);
  EXPECT_THROW((void)eqbif::radial_shoot({2, 0, 0.0}, 1.0), eqbif::Error);
  EXPECT_THROW((void)eqbif::radial_shoot({1, 0, 1.0}, 1.0), eqbif::Error);
}

TEST(Tolerances, SignatureIdentifiesSettings) {
  eqbif::Tolerances a, b;
  EXPECT_EQ(a.signature(), b.signature());
  b.bisection_rel = 1e-7;
  EXPECT_NE(a.signature(), b.signature());
  EXPECT_NE(a.signature().find("bisect=1e-09"), std::string::npos);
}
