#include "dunkl/freeze.hpp"
#include "dunkl/hermite.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dunkl;

namespace {

std::vector<double> random_ordered(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (;;) {
    for (auto& x : v) x = u(rng);
    std::sort(v.begin(), v.end());
    bool ok = true;
    for (std::size_t i = 1; i < v.size(); ++i) ok = ok && v[i] - v[i - 1] > 0.2;
    if (ok) return v;
  }
}

}  // namespace

TEST(HermiteRoots, SmallCases) {
  EXPECT_EQ(hermite_roots(1).roots, std::vector<double>{0.0});
  const auto& r2 = hermite_roots(2).roots;
  EXPECT_NEAR(r2[0], -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r2[1], 1.0 / std::sqrt(2.0), 1e-15);
  const auto& r3 = hermite_roots(3).roots;
  EXPECT_NEAR(r3[0], -std::sqrt(1.5), 1e-15);
  EXPECT_EQ(r3[1], 0.0);
  EXPECT_NEAR(r3[2], std::sqrt(1.5), 1e-15);
  EXPECT_THROW(hermite_roots(0), DomainError);
  EXPECT_THROW(hermite_roots(51), DomainError);
}

TEST(HermiteRoots, PolynomialValues) {
  // H_2 = 4x^2 - 2, H_3 = 8x^3 - 12x by the recurrence
  for (double x : {-1.3, 0.0, 0.4, 2.2}) {
    EXPECT_NEAR(hermite_value(2, x), 4 * x * x - 2, 1e-12);
    EXPECT_NEAR(hermite_value(3, x), 8 * x * x * x - 12 * x, 1e-12);
  }
}

TEST(HermiteRoots, IdentitiesUpToFifty) {
  for (int n = 1; n <= 50; ++n) {
    const auto& z = hermite_roots(n).roots;
    for (std::size_t i = 1; i < z.size(); ++i) EXPECT_LT(z[i - 1], z[i]);
    const auto id = root_identities(n);
    EXPECT_LE(std::abs(id.sum), 1e-12);
    EXPECT_LE(std::abs(id.sum_sq - id.sum_sq_reference), 1e-10 * n * n);
    EXPECT_LE(std::abs(id.log_discriminant - id.log_discriminant_reference), 1e-9 * std::max(1, n * n / 20));
    EXPECT_LE(id.fixed_point_residual, 1e-9);
    EXPECT_LE(id.max_hermite_residual, 1e-9);
  }
  const auto two = root_identities(2);
  EXPECT_NEAR(std::exp(two.log_discriminant), 2.0, 1e-14);
  EXPECT_NEAR(root_identities(3).sum_sq, 3.0, 1e-14);
  const auto one = root_identities(1);
  EXPECT_EQ(one.sum, 0.0);
  EXPECT_EQ(one.log_discriminant, 0.0);
  EXPECT_EQ(one.log_discriminant_reference, 0.0);
}

TEST(HermiteRoots, Interlacing) {
  for (int n = 1; n < 50; ++n) {
    const auto& a = hermite_roots(n).roots;
    const auto& b = hermite_roots(n + 1).roots;
    for (int i = 0; i < n; ++i) {
      EXPECT_LT(b[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]);
      EXPECT_LT(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i) + 1]);
    }
  }
}

TEST(Freeze, MaximumAtScaledRoots) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 20; ++n)
    for (double t : {0.5, 1.0, 3.0}) {
      auto v = freeze_prediction(n, t);
      EXPECT_LE(std::abs(freeze_eval(v, t)), 1e-9);
      double g2 = 0;
      for (double g : freeze_grad(v, t)) g2 += g * g;
      EXPECT_LE(std::sqrt(g2), 1e-9);
      std::shuffle(v.begin(), v.end(), rng);
      EXPECT_LE(std::abs(freeze_eval(v, t)), 1e-9);
    }
}

TEST(Freeze, Prediction) {
  const auto a = freeze_prediction(2, 0.5);
  EXPECT_NEAR(a[0], -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(a[1], 1.0 / std::sqrt(2.0), 1e-15);
  for (double v : freeze_prediction(4, 0.0)) EXPECT_EQ(v, 0.0);
  const auto c = freeze_prediction(3, 2.0);
  EXPECT_NEAR(c[0], -2.0 * std::sqrt(1.5), 1e-14);
  EXPECT_NEAR(c[2], 2.0 * std::sqrt(1.5), 1e-14);
  EXPECT_THROW(freeze_prediction(3, -1.0), DomainError);
}

TEST(Freeze, CoincidentComponents) {
  const std::vector<double> v{0.1, 0.1, 0.5};
  EXPECT_EQ(freeze_eval(v, 1.0), -std::numeric_limits<double>::infinity());
  EXPECT_THROW(freeze_grad(v, 1.0), DomainError);
  EXPECT_THROW(freeze_hess(v, 1.0), DomainError);
  EXPECT_THROW(freeze_eval(v, 0.0), DomainError);
}

TEST(Freeze, GradientAndHessianMatchFiniteDifferences) {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 6; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      const auto v = random_ordered(rng, n);
      const double t = 0.7 + rep * 0.4;
      const auto g = freeze_grad(v, t);
      const Eigen::MatrixXd h = freeze_hess(v, t);
      const double eps = 1e-5;
      for (int i = 0; i < n; ++i) {
        auto p = v, m = v;
        p[static_cast<std::size_t>(i)] += eps;
        m[static_cast<std::size_t>(i)] -= eps;
        const double fd = (freeze_eval(p, t) - freeze_eval(m, t)) / (2 * eps);
        EXPECT_NEAR(fd, g[static_cast<std::size_t>(i)], 1e-6 * std::max(1.0, std::abs(fd)));
        const auto gp = freeze_grad(p, t), gm = freeze_grad(m, t);
        for (int j = 0; j < n; ++j) {
          const double fdh = (gp[static_cast<std::size_t>(j)] - gm[static_cast<std::size_t>(j)]) / (2 * eps);
          EXPECT_NEAR(fdh, h(j, i), 1e-5 * std::max(1.0, std::abs(fdh)));
        }
      }
    }
}

TEST(Freeze, HessianNegativeDefinite) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> normal;
  for (int n = 2; n <= 8; ++n) {
    const auto v = random_ordered(rng, n);
    const double t = 1.3;
    const Eigen::MatrixXd h = freeze_hess(v, t);
    for (int rep = 0; rep < 100; ++rep) {
      Eigen::VectorXd u(n);
      for (int i = 0; i < n; ++i) u(i) = normal(rng);
      double closed = -u.squaredNorm() / t;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const double d = v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
          closed -= 2.0 * (u(i) - u(j)) * (u(i) - u(j)) / (d * d);
        }
      const double q = u.dot(h * u);
      EXPECT_LT(q, 0.0);
      EXPECT_NEAR(q, closed, 1e-10 * std::abs(closed));
    }
  }
}

TEST(FreezeOde, SelfSimilarSolution) {
  for (int n : {2, 3, 5, 8}) {
    OdeControls c;
    c.output_times = {1.0, 2.0};
    const auto traj = freeze_ode(freeze_prediction(n, 0.5), 0.5, 4.0, c);
    ASSERT_EQ(traj.times.size(), 4u);
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
      const auto want = freeze_prediction(n, traj.times[s]);
      for (int i = 0; i < n; ++i) EXPECT_NEAR(traj.states[s][static_cast<std::size_t>(i)], want[static_cast<std::size_t>(i)], 1e-8);
    }
  }
}

TEST(FreezeOde, ConservesCenterAndConvergesToRoots) {
  const std::vector<double> v0{-0.3, -0.2, 0.05, 0.9};
  OdeControls c;
  c.output_times = {2.0, 8.0, 32.0, 128.0};
  const auto traj = freeze_ode(v0, 0.1, 512.0, c);
  const double s0 = -0.3 - 0.2 + 0.05 + 0.9;
  double previous = INFINITY;
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    double sum = 0;
    for (double x : traj.states[s]) sum += x;
    EXPECT_NEAR(sum, s0, 1e-8);
    if (s == 0) continue;
    const double scale = std::sqrt(2.0 * traj.times[s]);
    const auto& z = hermite_roots(4).roots;
    double dev = 0;
    for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(traj.states[s][static_cast<std::size_t>(i)] / scale - z[static_cast<std::size_t>(i)]));
    EXPECT_LT(dev, previous);
    previous = dev;
  }
  EXPECT_LT(previous, 0.05);
}

TEST(FreezeOde, Errors) {
  EXPECT_THROW(freeze_ode({0.2, 0.1}, 1.0, 2.0), DomainError);
  EXPECT_THROW(freeze_ode({0.1, 0.2}, 0.0, 2.0), DomainError);
  EXPECT_THROW(freeze_ode({0.1, 0.2}, 2.0, 1.0), DomainError);
}
