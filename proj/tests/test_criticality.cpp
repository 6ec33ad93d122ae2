#include <gtest/gtest.h>

#include <random>

#include "monocover/constructions.hpp"
#include "monocover/criticality.hpp"
#include "monocover/separable.hpp"
#include "oracles.hpp"

using namespace monocover;

namespace {

using Corners = std::vector<std::pair<std::size_t, std::size_t>>;

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

TEST(Criticality, Seeds) {
  EXPECT_EQ(is_critical(seeds::pi12(), triangle(3)).status, CriticalStatus::critical);
  EXPECT_EQ(is_critical(seeds::pi9(), rectangle(2, 1)).status, CriticalStatus::critical);
  EXPECT_TRUE(is_sharp(seeds::pi15(), 2, 2));
  EXPECT_TRUE(is_minimal(seeds::pi12(), triangle(3)).minimal.value_or(false));
  EXPECT_TRUE(is_minimal(Permutation{1}, triangle(0)).minimal.value_or(false));
  EXPECT_TRUE(is_sharp(Permutation{1}, 0, 0));
}

TEST(Criticality, MonotoneIsCoverable) {
  for (std::size_t n = 1; n <= 6; ++n)
    EXPECT_EQ(is_critical(Permutation::identity(n), triangle(1)).status, CriticalStatus::coverable);
}

TEST(Criticality, TwoFourOneThreeIsCoverable) {
  // 2 3 increasing, 4 1 decreasing.
  const Permutation p{2, 4, 1, 3};
  const auto out = is_rs_coverable(p, 1, 1);
  ASSERT_EQ(out.verdict, Verdict::yes);
  EXPECT_TRUE(validate_cover(p, *out.cover));
  EXPECT_TRUE(oracle::coverable(p, 1, 1));
  EXPECT_EQ(is_critical(p, rectangle(1, 1)).status, CriticalStatus::coverable);
  EXPECT_FALSE(is_sharp(p, 1, 1));
}

TEST(Criticality, LengthFourRectangleCriticals) {
  // Exactly two (1,1)-critical permutations of length 4, both sharp.
  std::vector<Permutation> found;
  for (const auto& p : oracle::all_perms(4))
    if (is_critical(p, rectangle(1, 1)).critical()) found.push_back(p);
  EXPECT_EQ(found, (std::vector<Permutation>{{2, 1, 4, 3}, {3, 4, 1, 2}}));
  for (const auto& p : found) EXPECT_TRUE(is_sharp(p, 1, 1));
}

TEST(Criticality, AgreesWithOracle) {
  const std::vector<std::pair<Downset, Corners>> targets{
      {triangle(1), {{0, 1}, {1, 0}}},
      {rectangle(1, 1), {{1, 1}}},
      {rectangle(1, 0), {{1, 0}}},
      {Downset({2, 1}), {{0, 1}, {1, 0}}},
  };
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : oracle::all_perms(n))
      for (const auto& [target, corners] : targets)
        ASSERT_EQ(is_critical(p, target).critical(), oracle::critical(p, corners)) << p << " / " << target;
}

TEST(Criticality, ProperPatternsOfCriticalsAreCoverable) {
  std::vector<std::pair<Permutation, Downset>> criticals;
  for (const Downset& target : {triangle(1), rectangle(1, 1), triangle(2)})
    for (std::size_t n = 1; n <= 7; ++n)
      for (const auto& p : oracle::all_perms(n))
        if (is_critical(p, target).critical()) criticals.emplace_back(p, target);
  for (const auto& p : enumerate_critical(rectangle(1, 3))) criticals.emplace_back(p, rectangle(1, 3));
  ASSERT_GT(criticals.size(), 100u);
  for (const auto& [p, target] : criticals) {
    ASSERT_GE(p.size(), target.size()) << p;
    const std::size_t n = p.size(), full = std::size_t{1} << n;
    for (std::size_t mask = 1; mask + 1 < full; ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) sub.push_back(p[i]);
      ASSERT_TRUE(is_downset_coverable(standardize(sub), target)) << p;
    }
  }
}

TEST(Criticality, CertificatesValidate) {
  const auto rep = is_critical(seeds::pi12(), triangle(3), {{}, true});
  ASSERT_TRUE(rep.critical());
  ASSERT_EQ(rep.certificates.size(), 12u);
  for (std::size_t i = 0; i < 12; ++i)
    EXPECT_TRUE(validate_cover(delete_at(seeds::pi12(), i), rep.certificates[i]));
}

TEST(Criticality, NonCriticalReportsDeletion) {
  const auto rep = is_critical(direct_sum(seeds::pi12(), Permutation{1}), triangle(3));
  EXPECT_EQ(rep.status, CriticalStatus::non_critical);
  ASSERT_TRUE(rep.failing_deletion.has_value());
}

TEST(Criticality, CriticalLengthLowerBound) {
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t n = 1; n < binom2(k + 2); ++n)
      for (const auto& p : oracle::all_perms(n)) ASSERT_FALSE(is_critical(p, triangle(k)).critical()) << p;
  EXPECT_GE(seeds::pi12().size(), binom2(5));
}

TEST(Criticality, CriticalizeExamples) {
  const auto res = criticalize(direct_sum(seeds::pi12(), Permutation{1}), triangle(3));
  EXPECT_EQ(res.critical, seeds::pi12());
  EXPECT_EQ(res.deletion_trace, (std::vector<std::size_t>{12}));
  EXPECT_EQ(criticalize(seeds::pi12(), triangle(3)).critical, seeds::pi12());
  EXPECT_THROW(criticalize(Permutation{1, 2}, triangle(1)), std::invalid_argument);
}

TEST(Criticality, CriticalizeProducesCriticalPatterns) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Permutation p = oracle::random_perm(8 + rng() % 5, rng);
    const Downset target = trial % 2 ? triangle(2) : rectangle(1, 1);
    if (is_downset_coverable(p, target)) continue;
    const auto res = criticalize(p, target);
    EXPECT_TRUE(is_critical(res.critical, target).critical()) << p;
    EXPECT_TRUE(oracle::contains(p, res.critical)) << p;
    Permutation replay = p;
    for (std::size_t pos : res.deletion_trace) replay = delete_at(replay, pos);
    EXPECT_EQ(replay, res.critical);
  }
}

TEST(Criticality, SeparableCriticalsHaveLengthOfTarget) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& p : oracle::all_perms(n)) {
      if (!decompose(p)) continue;
      const Downset d = dset(p);
      EXPECT_EQ(d.size(), n);
      for (const Downset& target : {triangle(1), triangle(2), rectangle(1, 1), rectangle(2, 1)})
        if (is_critical(p, target).critical()) {
          EXPECT_EQ(p.size(), target.size()) << p;
          EXPECT_EQ(d, target) << p;
        }
    }
}
