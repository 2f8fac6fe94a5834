#include <gtest/gtest.h>

#include <random>

#include "banach/density.hpp"
#include "banach/errors.hpp"
#include "oracles.hpp"

namespace banach {
namespace {

ExplicitWindow window_of(const std::vector<std::int64_t>& elems, std::size_t length, std::int64_t base = 0) {
  ExplicitWindow w(Window(base, length));
  for (auto x : elems) w.set(x);
  return w;
}

ExplicitWindow full_window(std::size_t length) {
  ExplicitWindow w(Window(0, length));
  w.bits.set();
  return w;
}

ExplicitWindow random_window(std::mt19937_64& rng, std::size_t length, double density) {
  return ExplicitWindow(BigInt(0), oracle::random_bits(rng, length, density));
}

const ExplicitWindow kOdds = window_of({1, 3, 5, 7}, 8);

TEST(FNaive, Examples) {
  EXPECT_EQ(f_naive(full_window(8), 5), 5u);
  EXPECT_EQ(f_naive(kOdds, 3), 2u);
  EXPECT_EQ(f_naive(ExplicitWindow(Window(0, 8)), 4), 0u);
  EXPECT_THROW(f_naive(kOdds, 0), BadLength);
  EXPECT_THROW(f_naive(kOdds, 9), BadLength);
}

TEST(FProfile, Examples) {
  EXPECT_EQ(f_profile(full_window(8)).counts(), (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(f_profile(kOdds).counts(), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3, 4, 4}));
  EXPECT_EQ(f_profile(ExplicitWindow(Window(0, 5))).counts(), std::vector<std::size_t>(5, 0));
  EXPECT_EQ(f_profile(kOdds)[0], 0u);
}

TEST(FProfile, MatchesDefinitionProperty) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
    const ExplicitWindow w = random_window(rng, n, std::uniform_real_distribution<double>(0.05, 0.95)(rng));
    const WindowProfile p = f_profile(w);
    ASSERT_EQ(p.max_length(), n);
    for (std::size_t len = 1; len <= n; ++len) {
      const std::size_t expected = oracle::f_definition(w.bits, len);
      ASSERT_EQ(p[len], expected);
      ASSERT_EQ(f_naive(w, len), expected);
    }
  }
}

TEST(FProfile, MonotoneWithUnitStepsProperty) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const WindowProfile p = f_profile(random_window(rng, 300, 0.1 * (trial % 9 + 1)));
    for (std::size_t n = 0; n < p.max_length(); ++n) {
      ASSERT_LE(p[n], p[n + 1]);
      ASSERT_LE(p[n + 1], p[n] + 1);
    }
  }
}

TEST(FProfile, IndependentOfBase) {
  const ExplicitWindow shifted = window_of({1001, 1003, 1005, 1007}, 8, 1000);
  EXPECT_EQ(f_profile(shifted).counts(), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3, 4, 4}));
}

TEST(DensityEstimate, Examples) {
  const DensityEstimate odds = density_estimate(f_profile(kOdds));
  EXPECT_EQ(odds.value, Ratio(1, 2));
  EXPECT_EQ(odds.argmin, 2u);
  EXPECT_TRUE(odds.window_relative);
  EXPECT_EQ(density_estimate(f_profile(full_window(10))).value, Ratio(1));
  const DensityEstimate single = density_estimate(f_profile(window_of({5}, 16)));
  EXPECT_EQ(single.value, Ratio(1, 16));
  EXPECT_EQ(single.argmin, 16u);
}

TEST(DensityEstimate, FeketeDirectionProperty) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const WindowProfile p = f_profile(random_window(rng, 256, 0.1 * (trial % 9 + 1)));
    const Ratio est = density_estimate(p).value;
    const std::size_t big_n = p.max_length();
    for (std::size_t d = 1; d <= big_n; ++d) {
      ASSERT_LE(est, Ratio(static_cast<std::int64_t>(p[d]), static_cast<std::int64_t>(d)) +
                         Ratio(static_cast<std::int64_t>(d), static_cast<std::int64_t>(big_n)));
      std::size_t max_r = 0;
      for (std::size_t r = 0; r < d; ++r) max_r = std::max(max_r, p[r]);
      for (std::size_t n = d; n <= big_n; n += 7) {
        const Ratio lhs(static_cast<std::int64_t>(p[n]), static_cast<std::int64_t>(n));
        const Ratio rhs = Ratio(static_cast<std::int64_t>(p[d]), static_cast<std::int64_t>(d)) +
                          Ratio(static_cast<std::int64_t>(max_r), static_cast<std::int64_t>(n));
        ASSERT_LE(lhs, rhs) << "d=" << d << " n=" << n;
      }
    }
  }
}

TEST(Subadditivity, Examples) {
  EXPECT_TRUE(check_subadditivity(f_profile(kOdds)).empty());
  const WindowProfile bad(Window(0, 2), {0, 5});
  const auto v = check_subadditivity(bad);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (SubadditivityViolation{1, 1, 5}));
}

TEST(Subadditivity, RandomProfilesProperty) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const ExplicitWindow w = random_window(rng, 64, 0.1 * (trial % 9 + 1));
    const WindowProfile p = f_profile(w);
    ASSERT_TRUE(check_subadditivity(p).empty());
    for (std::size_t a = 1; a < 64; ++a) {
      for (std::size_t b = 1; a + b <= 64; ++b) {
        ASSERT_LE(oracle::f_definition(w.bits, a + b), oracle::f_definition(w.bits, a) + oracle::f_definition(w.bits, b));
      }
    }
  }
}

TEST(Fekete, Examples) {
  EXPECT_TRUE(fekete_qd_check(f_profile(kOdds), 2));
  for (std::size_t d = 1; d <= 12; ++d) EXPECT_TRUE(fekete_qd_check(f_profile(full_window(12)), d));
  EXPECT_FALSE(fekete_qd_check(WindowProfile(Window(0, 2), {0, 5}), 1));
  EXPECT_THROW(fekete_qd_check(f_profile(kOdds), 9), BadLength);
  EXPECT_THROW(fekete_qd_check(f_profile(kOdds), 0), BadLength);
}

TEST(Fekete, RandomProfilesProperty) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const WindowProfile p = f_profile(random_window(rng, 200, 0.1 * (trial % 9 + 1)));
    for (std::size_t d = 1; d <= 200; ++d) ASSERT_TRUE(fekete_qd_check(p, d)) << d;
  }
}

TEST(LongestRun, Examples) {
  const BigInt len = pow(BigInt(4), 5) + 5;
  EXPECT_EQ(longest_run(materialize(IntSet::pow_runs(4), Window(0, to_size(len)))), 5u);
  EXPECT_EQ(longest_run(kOdds), 1u);
  EXPECT_EQ(longest_run(full_window(37)), 37u);
  EXPECT_EQ(longest_run(ExplicitWindow(Window(0, 9))), 0u);
}

TEST(LongestRun, MatchesScanAndDensityOneProperty) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const ExplicitWindow w = random_window(rng, 120, trial == 0 ? 1.0 : 0.5 + 0.01 * trial);
    ASSERT_EQ(longest_run(w), oracle::longest_ones(w.bits));
    const bool all = longest_run(w) == w.length();
    ASSERT_EQ(all, density_estimate(f_profile(w)).value == Ratio(1));
  }
}

TEST(RunBound, Examples) {
  const RunBoundReport odds = check_run_bound(kOdds, 2);
  EXPECT_TRUE(odds.passed());
  EXPECT_EQ(odds.checked, 8u);
  EXPECT_THROW(check_run_bound(full_window(8), 2), PreconditionFailed);
}

TEST(RunBound, RandomCappedSetsProperty) {
  std::mt19937_64 rng(43);
  for (std::size_t d : {2u, 3u, 4u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ExplicitWindow w(BigInt(0), oracle::random_bits_capped(rng, 1024, 0.9, d));
      ASSERT_LT(oracle::longest_ones(w.bits), d);
      const RunBoundReport rep = check_run_bound(w, d);
      ASSERT_TRUE(rep.passed());
      const WindowProfile p = f_profile(w);
      for (std::size_t n = 1; n <= 1024; ++n) {
        // f[n] < (1 - 1/d) n + 1  <=>  d f[n] < (d - 1) n + d
        ASSERT_LT(d * p[n], (d - 1) * n + d);
      }
    }
  }
}

TEST(ForcedDensity, GeneratorsOnly) {
  EXPECT_EQ(forced_density(IntSet::congruence(3, 1)), BigRational(1, 3));
  EXPECT_EQ(forced_density(IntSet::pow_runs(4)), BigRational(1));
  EXPECT_EQ(forced_density(IntSet::full()), BigRational(1));
  EXPECT_EQ(forced_density(IntSet::from_elements({1, 2})), std::nullopt);
}

}  // namespace
}  // namespace banach
