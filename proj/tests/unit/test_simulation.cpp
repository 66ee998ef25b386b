#include "dunkl/oracle/grabiner_marginal.hpp"
#include "dunkl/simulation.hpp"
#include "dunkl/stats.hpp"

#include <gtest/gtest.h>

using namespace dunkl;

namespace {

SimConfig config(int n, double k, int traj, std::uint64_t seed) {
  SimConfig c;
  c.n = n;
  c.k = k;
  c.n_traj = traj;
  c.seed = seed;
  c.dt = 1e-3;
  c.t_end = 1.0;
  return c;
}

}  // namespace

TEST(SimConfig, Validation) {
  SimConfig c;
  EXPECT_NO_THROW(c.validate());
  c.k = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = SimConfig{};
  c.n_traj = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = SimConfig{};
  c.dt = -1;
  EXPECT_THROW(c.validate(), DomainError);
  const std::vector<double> bad{1.0, 0.0};
  EXPECT_THROW(simulate_dyson(config(2, 1, 10, 1), bad), DomainError);
  const std::vector<double> wrong_n{0.0};
  EXPECT_THROW(simulate_dyson(config(2, 1, 10, 1), wrong_n), DomainError);
}

TEST(Rng, StreamsAreDistinctAndStable) {
  EXPECT_NE(stream_seed(1, 0), stream_seed(1, 1));
  EXPECT_NE(stream_seed(1, 0), stream_seed(2, 0));
  EXPECT_EQ(stream_seed(42, 7), stream_seed(42, 7));
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Dyson, DeterministicAcrossWorkerCounts) {
  const std::vector<double> x0{-1.0, 0.0, 1.0};
  auto c = config(3, 1.0, 64, 99);
  c.n_records = 4;
  c.threads = 1;
  const auto a = simulate_dyson(c, x0);
  c.threads = 4;
  const auto b = simulate_dyson(c, x0);
  EXPECT_EQ(a.positions, b.positions);
  EXPECT_EQ(a.stream_seeds, b.stream_seeds);
  c.threads = 3;
  const auto d1 = simulate_dunkl(c, x0);
  c.threads = 1;
  const auto d2 = simulate_dunkl(c, x0);
  EXPECT_EQ(d1.positions, d2.positions);
  ASSERT_EQ(d1.jumps.size(), d2.jumps.size());
  for (std::size_t i = 0; i < d1.jumps.size(); ++i) {
    ASSERT_EQ(d1.jumps[i].size(), d2.jumps[i].size());
    for (std::size_t j = 0; j < d1.jumps[i].size(); ++j) EXPECT_EQ(d1.jumps[i][j].time, d2.jumps[i][j].time);
  }
}

TEST(Dyson, OrderingAtEveryRecord) {
  const std::vector<double> x0{-0.01, 0.0, 0.01, 0.02};
  auto c = config(4, 2.0, 200, 5);
  c.n_records = 20;
  const auto e = simulate_dyson(c, x0);
  for (int tr = 0; tr < e.n_traj; ++tr)
    for (std::size_t r = 0; r < e.n_records(); ++r) {
      const auto s = e.state(tr, r);
      for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i - 1], s[i]);
      for (double v : s) EXPECT_TRUE(std::isfinite(v));
    }
  std::uint64_t halvings = 0;
  for (auto h : e.halvings) halvings += h;
  EXPECT_GT(halvings, 0u);  // the tight start forces the guard to act
}

TEST(Dyson, GuardExhaustionReportsTrajectory) {
  const std::vector<double> x0{0.0, 1e-9};
  auto c = config(2, 1.0, 3, 1);
  c.dt = 0.1;
  c.guard_depth = 1;
  try {
    simulate_dyson(c, x0);
    FAIL() << "expected the collision guard to give up";
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("trajectory"), std::string::npos);
  }
}

TEST(Dyson, WeakCouplingIsBrownian) {
  // far apart: at beta < 1 paths genuinely collide, which no ordering guard can prevent
  const std::vector<double> x0{-20.0, 0.0, 20.0};
  auto c = config(3, 1e-12, 4000, 21);
  c.t_end = 0.5;
  const auto e = simulate_dyson(c, x0);
  for (int i = 0; i < 3; ++i) {
    std::vector<double> col;
    for (int tr = 0; tr < e.n_traj; ++tr) col.push_back(e.state(tr, 1)[static_cast<std::size_t>(i)]);
    const auto m = moments(col);
    EXPECT_NEAR(m.variance, 0.5, 0.05);
    EXPECT_NEAR(m.mean, x0[static_cast<std::size_t>(i)], 4 * m.standard_error);
  }
}

TEST(Dyson, MatchesExactMarginalsAtBetaTwo) {
  const std::vector<double> x0{-1.0, 1.0};
  const auto e = simulate_dyson(config(2, 1.0, 10000, 31), x0);
  const oracle::GrabinerMarginals exact(x0, 1.0);
  const auto marg = sorted_marginals(e, 1);
  for (int c = 0; c < 2; ++c)
    EXPECT_LE(ks_one_sample(marg[static_cast<std::size_t>(c)], [&](double s) { return exact.order_statistic_cdf(c, s); }), 0.05);
}

TEST(Dyson, CenterOfMassIsDriftless) {
  const std::vector<double> x0{-0.5, 0.1, 0.3};
  const auto e = simulate_dyson(config(3, 3.0, 3000, 77), x0);
  const auto s = ensemble_stats(e, 1);
  EXPECT_LE(std::abs(s.center_shift.mean), 3 * s.center_shift.standard_error);
  EXPECT_NEAR(s.center_shift.variance, 3.0, 0.3);  // sum of three unit Brownian motions
}

TEST(Dyson, SortedMeansSymmetricAboutCenter) {
  const std::vector<double> x0{0.5, 1.5};
  const auto e = simulate_dyson(config(2, 1.0, 4000, 8), x0);
  const auto s = ensemble_stats(e, 1);
  const double mid = 0.5 * (s.sorted[0].mean + s.sorted[1].mean);
  EXPECT_NEAR(mid, 1.0, 3 * std::hypot(s.sorted[0].standard_error, s.sorted[1].standard_error) / 2);
}

TEST(Dunkl, JumpsLeaveSortedConfigurationUnchanged) {
  const std::vector<double> x0{-0.2, 0.0, 0.3};
  auto c = config(3, 1.0, 50, 4);
  c.n_records = 200;
  const auto e = simulate_dunkl(c, x0);
  std::size_t checked = 0;
  for (int tr = 0; tr < e.n_traj; ++tr) {
    EXPECT_GT(e.jumps[static_cast<std::size_t>(tr)].size(), 0u);
    for (std::size_t r = 0; r < e.n_records(); ++r) checked += check_jump_invariance(e, tr, e.state(tr, r));
    for (const auto& ev : e.jumps[static_cast<std::size_t>(tr)]) {
      EXPECT_LT(ev.i, ev.j);
      EXPECT_GT(ev.time, 0.0);
      EXPECT_LE(ev.time, 1.0);
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Dunkl, SymmetricStartMatchesDysonLaw) {
  const std::vector<double> x0{-1.0, 0.0, 1.0};
  auto c = config(3, 1.0, 10000, 123);
  const auto dyson = simulate_dyson(c, x0);
  c.symmetric_start = true;
  c.seed = 456;
  const auto dunkl = simulate_dunkl(c, x0);
  for (double d : compare_ensembles(dunkl, dyson, 1)) EXPECT_LE(d, 0.05);
}

TEST(Dunkl, ClusteredStartJumpsMore) {
  auto c = config(3, 1.0, 400, 10);
  const std::vector<double> tight{-0.05, 0.0, 0.05}, wide{-5.0, 0.0, 5.0};
  const auto a = ensemble_stats(simulate_dunkl(c, tight), 1);
  const auto b = ensemble_stats(simulate_dunkl(c, wide), 1);
  EXPECT_GT(a.mean_jumps, b.mean_jumps);
}

TEST(Dunkl, JumpLogIsChronological) {
  const std::vector<double> x0{0.0, 0.01};
  auto c = config(2, 1.0, 20, 3);
  c.t_end = 0.01;
  const auto e = simulate_dunkl(c, x0);
  for (const auto& log : e.jumps)
    for (std::size_t i = 1; i < log.size(); ++i) EXPECT_GE(log[i].time, log[i - 1].time);
}

TEST(Stats, KsBasics) {
  const std::vector<double> a{0.1, 0.4, 0.2, 0.9};
  EXPECT_EQ(ks_two_sample(a, a), 0.0);
  EXPECT_EQ(ks_two_sample({0.0, 1.0}, {2.0, 3.0}), 1.0);
  EXPECT_NEAR(ks_one_sample({0.5}, [](double x) { return x; }), 0.5, 1e-15);
  EXPECT_NEAR(ks_critical_value(1000, 1000), 1.628 * std::sqrt(2.0 / 1000), 1e-15);
  EXPECT_DOUBLE_EQ(empirical_cdf(std::vector<double>{1, 2, 3, 4}, 2.5), 0.5);
  EXPECT_THROW(ks_two_sample({}, a), DomainError);
}

TEST(Stats, EnsembleAgainstItselfAndOtherSeed) {
  const std::vector<double> x0{-1.0, 0.0, 1.0};
  const auto a = simulate_dyson(config(3, 1.0, 3000, 1), x0);
  for (double d : compare_ensembles(a, a, 1)) EXPECT_EQ(d, 0.0);
  const auto b = simulate_dyson(config(3, 1.0, 3000, 2), x0);
  const auto ks = compare_ensembles(a, b, 1);
  int below = 0;
  for (double d : ks) below += d <= ks_critical_value(3000, 3000);
  EXPECT_GE(below, 2);
}

TEST(Stats, GridMismatchIsAnError) {
  const std::vector<double> x0{-1.0, 1.0};
  auto c = config(2, 1.0, 10, 1);
  const auto a = simulate_dyson(c, x0);
  c.n_records = 2;
  const auto b = simulate_dyson(c, x0);
  EXPECT_THROW(compare_ensembles(a, b, 1), DomainError);
  c.n_records = 1;
  c.t_end = 2.0;
  EXPECT_THROW(compare_ensembles(a, simulate_dyson(c, x0), 1), DomainError);
  EXPECT_THROW(sorted_marginals(a, 5), DomainError);
}

TEST(Stats, Moments) {
  const std::vector<double> v{1, 2, 3, 4};
  const auto m = moments(v);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_DOUBLE_EQ(m.variance, 5.0 / 3.0);
  EXPECT_NEAR(m.skewness, 0.0, 1e-15);
  EXPECT_THROW(moments(std::vector<double>{1.0}), DomainError);
}

TEST(Freeze, ExperimentMatchesHermiteRoots) {
  auto c = config(3, 1e4, 100, 1);
  c.dt = 1e-4;
  const std::vector<double> x0{-1.0, 0.0, 1.0};
  const auto r = freeze_experiment(c, x0);
  EXPECT_LE(r.mean_max_deviation, 0.05);
  auto c4 = c;
  c4.k = 4e4;
  const auto r4 = freeze_experiment(c4, x0);
  const double ratio = r.rms_deviation / r4.rms_deviation;
  EXPECT_GT(ratio, 2.0 * 0.5);
  EXPECT_LT(ratio, 2.0 * 1.5);
  c.k = 50;
  EXPECT_THROW(freeze_experiment(c, x0), DomainError);
}

TEST(Freeze, IndependentOfStartAfterCentering) {
  auto c = config(3, 1e4, 100, 2);
  c.dt = 1e-4;
  const std::vector<double> x0{-1.0, 0.0, 1.0}, shifted{9.0, 10.0, 11.0};
  const auto r = freeze_independence(c, x0, shifted);
  EXPECT_LE(r.centered_gap, r.deviation_scale);
  EXPECT_GT(r.uncentered_gap, r.centered_gap);  // reported, carries the (x0 . 1)/sqrt(k) offset
}
