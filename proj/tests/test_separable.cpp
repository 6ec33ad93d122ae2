#include <gtest/gtest.h>

#include <set>

#include "monocover/cover_solver.hpp"
#include "monocover/criticality.hpp"
#include "monocover/separable.hpp"
#include "oracles.hpp"

using namespace monocover;

namespace {

// All separable permutations up to max_len, built by closing {1} under sums.
std::set<Permutation> separable_closure(std::size_t max_len) {
  std::vector<std::set<Permutation>> by_len(max_len + 1);
  by_len[1].insert(Permutation{1});
  for (std::size_t n = 2; n <= max_len; ++n)
    for (std::size_t a = 1; a < n; ++a)
      for (const auto& x : by_len[a])
        for (const auto& y : by_len[n - a]) {
          by_len[n].insert(direct_sum(x, y));
          by_len[n].insert(skew_sum(x, y));
        }
  std::set<Permutation> all;
  for (const auto& s : by_len) all.insert(s.begin(), s.end());
  return all;
}

bool canonical(const DecompositionTree& t) {
  using Kind = DecompositionTree::Kind;
  if (t.kind == Kind::leaf) return t.children.empty();
  if (t.children.size() < 2) return false;
  for (const auto& c : t.children)
    if (c.kind == t.kind || !canonical(c)) return false;
  return true;
}

}  // namespace

TEST(Separable, DecomposeExamples) {
  using Kind = DecompositionTree::Kind;
  const auto t = decompose(Permutation{2, 1, 4, 3});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->kind, Kind::direct_sum);
  ASSERT_EQ(t->children.size(), 2u);
  EXPECT_EQ(t->children[0].kind, Kind::skew_sum);
  EXPECT_EQ(t->children[1].kind, Kind::skew_sum);
  EXPECT_EQ(to_string(*t), "+(-(1,1),-(1,1))");
  EXPECT_FALSE(decompose(Permutation{3, 1, 4, 2}));
  EXPECT_FALSE(decompose(Permutation{2, 4, 1, 3}));
  EXPECT_EQ(decompose(Permutation{1})->kind, Kind::leaf);
  EXPECT_FALSE(decompose(Permutation{}));
  EXPECT_EQ(to_string(*decompose(Permutation{1, 2, 3})), "+(1,1,1)");
}

TEST(Separable, DecomposeMatchesClosure) {
  const auto closure = separable_closure(7);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& p : oracle::all_perms(n)) {
      const auto t = decompose(p);
      ASSERT_EQ(t.has_value(), closure.count(p) > 0) << p;
      if (t) {
        EXPECT_TRUE(canonical(*t)) << p;
        EXPECT_EQ(t->leaves(), n);
        EXPECT_EQ(to_permutation(*t), p);
      }
    }
}

TEST(Separable, DsetFromTreeMatchesSolver) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& p : oracle::all_perms(n)) {
      const auto t = decompose(p);
      if (!t) continue;
      const Downset d = separable_dset(*t);
      ASSERT_EQ(d.size(), n) << p;
      ASSERT_EQ(d, dset(p)) << p;
    }
  EXPECT_EQ(separable_dset(*decompose(Permutation{1, 3, 2, 5, 4})), dset(Permutation{1, 3, 2, 5, 4}));
}

TEST(Separable, EnumerationSmall) {
  EXPECT_EQ(enumerate_critical(Downset({1})), (std::vector<Permutation>{{1}}));
  EXPECT_EQ(enumerate_critical(triangle(1)),
            (std::vector<Permutation>{{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}}));
  EXPECT_THROW(enumerate_critical(Downset()), std::invalid_argument);
}

TEST(Separable, EnumerationMatchesBruteForce) {
  const std::vector<Downset> targets{triangle(1), rectangle(1, 1), rectangle(2, 0), Downset({3, 1}),
                                     Downset({2, 2, 1}), triangle(2)};
  for (const auto& target : targets) {
    std::vector<Permutation> want;
    for (const auto& p : oracle::all_perms(target.size()))
      if (decompose(p) && is_critical(p, target).critical()) want.push_back(p);
    EXPECT_EQ(enumerate_critical(target), want) << target;
  }
}

TEST(Separable, EnumerationT2) {
  const auto all = enumerate_critical(triangle(2));
  EXPECT_EQ(all.size(), 84u);
  for (const auto& p : all) {
    EXPECT_EQ(p.size(), 6u);
    EXPECT_TRUE(is_critical(p, triangle(2)).critical()) << p;
    EXPECT_EQ(dset(p), triangle(2));
  }
}

TEST(Separable, EnumerationRectangles) {
  for (std::size_t r = 0; r <= 2; ++r)
    for (std::size_t s = 0; s <= 2; ++s) {
      const auto all = enumerate_critical(rectangle(r, s));
      EXPECT_FALSE(all.empty());
      for (const auto& p : all) {
        EXPECT_EQ(p.size(), (r + 1) * (s + 1));
        EXPECT_TRUE(is_critical(p, rectangle(r, s)).critical()) << p;
      }
    }
}
