#include <gtest/gtest.h>

#include <random>

#include "monocover/constructions.hpp"
#include "monocover/permutation.hpp"
#include "oracles.hpp"

using namespace monocover;

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation({}));
  EXPECT_EQ(Permutation::identity(3), (Permutation{1, 2, 3}));
  EXPECT_EQ(Permutation::decreasing(3), (Permutation{3, 2, 1}));
}

TEST(Permutation, ValidateReportsPosition) {
  const std::vector<int> bad{2, 5, 1};
  const auto msg = Permutation::validate(bad);
  ASSERT_TRUE(msg.has_value());
  EXPECT_NE(msg->find('2'), std::string::npos);
}

TEST(Permutation, DeleteExamples) {
  // Remaining values 2..12 shift down by one, so 2 -> 1 and 3 -> 2.
  EXPECT_EQ(delete_at(seeds::pi12(), 2), (Permutation{9, 4, 6, 10, 3, 8, 1, 5, 11, 7, 2}));
  EXPECT_EQ(delete_at(seeds::pi12(), 2), oracle::standardized({10, 5, 7, 11, 4, 9, 2, 6, 12, 8, 3}));
  EXPECT_EQ(delete_at(Permutation{1}, 0), Permutation{});
  EXPECT_EQ(delete_at(Permutation{1, 3, 2, 5, 4}, 0), (Permutation{2, 1, 4, 3}));
}

TEST(Permutation, StandardizeAndPatternOf) {
  const std::vector<int> v{30, 10, 20};
  EXPECT_EQ(standardize(v), (Permutation{3, 1, 2}));
  EXPECT_EQ(pattern_of(seeds::pi12(), {0, 1, 2}), (Permutation{3, 2, 1}));
}

TEST(Permutation, ContainsMatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const Permutation pi = oracle::random_perm(n, rng);
      for (std::size_t k = 0; k <= std::min<std::size_t>(n, 4); ++k) {
        for (const auto& tau : oracle::all_perms(k)) {
          const auto hit = contains(pi, tau);
          ASSERT_EQ(hit.has_value(), oracle::contains(pi, tau)) << pi << " / " << tau;
          if (hit) {
            EXPECT_EQ(pattern_of(pi, *hit), tau);
          }
        }
      }
    }
  }
}

TEST(Permutation, LisLdsAgainstDp) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation pi = oracle::random_perm(1 + rng() % 40, rng);
    EXPECT_EQ(lis(pi), oracle::longest(oracle::values(pi), true));
    EXPECT_EQ(lds(pi), oracle::longest(oracle::values(pi), false));
    const auto pos = longest_increasing_positions(pi.span());
    EXPECT_EQ(pos.size(), lis(pi));
    for (std::size_t i = 1; i < pos.size(); ++i) EXPECT_LT(pi[pos[i - 1]], pi[pos[i]]);
  }
}

TEST(Permutation, ErdosSzekeres) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const Permutation pi = oracle::random_perm(n, rng);
    EXPECT_GE(lis(pi) * lds(pi), n);
  }
}

TEST(Permutation, SumsAndTensor) {
  const Permutation a{2, 1}, b{1, 3, 2};
  EXPECT_EQ(direct_sum(a, b), (Permutation{2, 1, 3, 5, 4}));
  EXPECT_EQ(skew_sum(a, b), (Permutation{5, 4, 1, 3, 2}));
  EXPECT_EQ(tensor(a, Permutation{1, 2}), (Permutation{3, 4, 1, 2}));
  EXPECT_EQ(tensor(Permutation{1}, b), b);
  EXPECT_EQ(tensor(b, Permutation{1}), b);
}

TEST(Permutation, TensorRightDistributes) {
  for (std::size_t la = 1; la <= 4; ++la)
    for (std::size_t lb = 1; la + lb <= 5; ++lb)
      for (const auto& x : oracle::all_perms(la))
        for (const auto& y : oracle::all_perms(lb))
          for (const auto& z : oracle::all_perms(2)) {
            EXPECT_EQ(tensor(direct_sum(x, y), z), direct_sum(tensor(x, z), tensor(y, z)));
            EXPECT_EQ(tensor(skew_sum(x, y), z), skew_sum(tensor(x, z), tensor(y, z)));
          }
}

TEST(Permutation, TensorLengthAndMonotone) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation a = oracle::random_perm(1 + rng() % 6, rng);
    const Permutation b = oracle::random_perm(1 + rng() % 6, rng);
    const Permutation t = tensor(a, b);
    EXPECT_EQ(t.size(), a.size() * b.size());
    EXPECT_EQ(lis(t), lis(a) * lis(b));
    EXPECT_EQ(lds(t), lds(a) * lds(b));
  }
}

TEST(Permutation, SymmetriesActOnLisLds) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation pi = oracle::random_perm(1 + rng() % 30, rng);
    EXPECT_EQ(lis(symmetry(pi, Symmetry::reverse)), lds(pi));
    EXPECT_EQ(lis(symmetry(pi, Symmetry::complement)), lds(pi));
    EXPECT_EQ(lis(symmetry(pi, Symmetry::inverse)), lis(pi));
    EXPECT_EQ(lds(symmetry(pi, Symmetry::inverse)), lds(pi));
    for (Symmetry g : {Symmetry::reverse, Symmetry::complement, Symmetry::inverse})
      EXPECT_EQ(symmetry(symmetry(pi, g), g), pi);
  }
}

TEST(Permutation, OrbitSizes) {
  EXPECT_EQ(symmetry_orbit(Permutation{1, 2, 3}).size(), 2u);
  EXPECT_EQ(symmetry_orbit(Permutation{1, 3, 2}).size(), 4u);
  EXPECT_EQ(symmetry_orbit(Permutation{2, 4, 1, 3}).size(), 2u);
  // Invariant under reverse-complement and inverse.
  const auto orbit = symmetry_orbit(seeds::pi12());
  EXPECT_EQ(orbit.size(), 2u);
  EXPECT_TRUE(orbit.count(Permutation{10, 5, 1, 7, 11, 4, 9, 2, 6, 12, 8, 3}));
  EXPECT_TRUE(orbit.count(Permutation{3, 8, 12, 6, 2, 9, 4, 11, 7, 1, 5, 10}));
}

TEST(Permutation, DilworthCovers) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation pi = oracle::random_perm(1 + rng() % 25, rng);
    const MonotoneCover inc = dilworth_cover(pi, Direction::increasing);
    EXPECT_EQ(inc.r, lds(pi));
    const MonotoneCover dec = dilworth_cover(pi, Direction::decreasing);
    EXPECT_EQ(dec.s, lis(pi));
    for (const auto& cover : {inc, dec}) {
      const auto chains = cover.chains();
      for (std::size_t c = 0; c < chains.size(); ++c)
        for (std::size_t i = 1; i < chains[c].size(); ++i) {
          const bool up = pi[chains[c][i - 1]] < pi[chains[c][i]];
          EXPECT_EQ(up, cover.direction_of(c) == Direction::increasing);
        }
    }
  }
}

TEST(Permutation, ParseAndPrintRoundTrip) {
  EXPECT_EQ(parse_permutation("3 1 2"), (Permutation{3, 1, 2}));
  EXPECT_EQ(parse_permutation("3,1, 2"), (Permutation{3, 1, 2}));
  EXPECT_THROW(parse_permutation("3 1 x"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1 1"), std::invalid_argument);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation pi = oracle::random_perm(rng() % 20, rng);
    EXPECT_EQ(parse_permutation(to_string(pi)), pi);
  }
}
