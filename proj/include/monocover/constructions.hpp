#ifndef MONOCOVER_CONSTRUCTIONS_HPP
#define MONOCOVER_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monocover/downset.hpp"
#include "monocover/permutation.hpp"

namespace monocover {

namespace seeds {

/// 3-critical and T(3)-minimal.
inline Permutation pi12() { return {10, 5, 1, 7, 11, 4, 9, 2, 6, 12, 8, 3}; }

/// (2,1)-critical.
inline Permutation pi9() { return {5, 2, 7, 1, 6, 3, 9, 8, 4}; }

/// (2,2)-sharp; lis 3, lds 6.
inline Permutation pi15() { return {12, 14, 5, 10, 3, 9, 1, 7, 15, 13, 11, 4, 2, 8, 6}; }

/// T(k)-minimal witnesses for k = 0, 1, 2. The k = 1 and k = 2 ones are the
/// lexicographically first outputs of the exhaustive search for those
/// targets.
inline Permutation t0_minimal() { return {1}; }
inline Permutation t1_minimal() { return {1, 3, 2}; }
inline Permutation t2_minimal() { return {1, 3, 2, 6, 5, 4}; }

}  // namespace seeds

enum class ClaimStatus { critical, minimal, sharp, not_coverable };

inline const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::critical: return "critical";
    case ClaimStatus::minimal: return "minimal";
    case ClaimStatus::sharp: return "sharp";
    case ClaimStatus::not_coverable: return "not-coverable";
  }
  return "unknown";
}

/**
 * Provenance of a built permutation: which builder, from what, and the
 * property it is claimed to have. Builders never check their claims.
 */
struct ConstructionRecipe {
  std::string name;
  std::vector<Permutation> inputs;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  Downset claimed_target;
  ClaimStatus claimed_status = ClaimStatus::critical;
  std::size_t claimed_length = 0;
  /// Free-form notes, e.g. the recurrence schedule of punkt.
  std::vector<std::string> notes;
};

struct Construction {
  ConstructionRecipe recipe;
  Permutation permutation;
};

/// Key=value lines, one record per construction.
inline std::string serialize(const Construction& c) {
  std::ostringstream out;
  out << "name=" << c.recipe.name << '\n';
  for (const auto& [key, value] : c.recipe.parameters) out << "param." << key << '=' << value << '\n';
  for (std::size_t i = 0; i < c.recipe.inputs.size(); ++i)
    out << "input." << i << '=' << c.recipe.inputs[i] << '\n';
  out << "claim.status=" << to_string(c.recipe.claimed_status) << '\n';
  out << "claim.target=" << c.recipe.claimed_target << '\n';
  out << "claim.length=" << c.recipe.claimed_length << '\n';
  for (const auto& note : c.recipe.notes) out << "note=" << note << '\n';
  out << "length=" << c.permutation.size() << '\n';
  out << "permutation=" << c.permutation << '\n';
  return out.str();
}

namespace detail {

inline std::int64_t as_param(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

/// pi (r1,s)-critical and sigma (r2,s)-critical give pi (-) sigma, claimed (r1+r2+1, s)-critical.
inline Construction enkel(const Permutation& pi, const Permutation& sigma, std::size_t r1,
                          std::size_t r2, std::size_t s) {
  Permutation out = skew_sum(pi, sigma);
  ConstructionRecipe recipe{"enkel",
                            {pi, sigma},
                            {{"r1", detail::as_param(r1)},
                             {"r2", detail::as_param(r2)},
                             {"s", detail::as_param(s)}},
                            rectangle(r1 + r2 + 1, s),
                            ClaimStatus::critical,
                            out.size(),
                            {}};
  return {std::move(recipe), std::move(out)};
}

/// Row version: (r,s1)- and (r,s2)-critical inputs give pi (+) sigma, claimed (r, s1+s2+1)-critical.
inline Construction enkel_rows(const Permutation& pi, const Permutation& sigma, std::size_t r,
                               std::size_t s1, std::size_t s2) {
  Permutation out = direct_sum(pi, sigma);
  ConstructionRecipe recipe{"enkel-rows",
                            {pi, sigma},
                            {{"r", detail::as_param(r)},
                             {"s1", detail::as_param(s1)},
                             {"s2", detail::as_param(s2)}},
                            rectangle(r, s1 + s2 + 1),
                            ClaimStatus::critical,
                            out.size(),
                            {}};
  return {std::move(recipe), std::move(out)};
}

/// T(k)-minimal pi gives pi (-) (1..k+2), claimed T(k+1)-minimal.
inline Construction epic_step(const Permutation& pi, std::size_t k) {
  Permutation out = skew_sum(pi, Permutation::identity(k + 2));
  ConstructionRecipe recipe{"epic-step", {pi},        {{"k", detail::as_param(k)}},
                            triangle(k + 1), ClaimStatus::minimal, out.size(), {}};
  return {std::move(recipe), std::move(out)};
}

enum class EpicVariant { double_even, double_odd };  // T(2k+2), T(2k+3)

/**
 * pi T(k)-minimal, sigma T(k+1)-minimal. double_even gives
 * (pi+pi)-(pi+sigma), claimed T(2k+2)-minimal; double_odd gives
 * (pi+sigma)-(sigma+sigma), claimed T(2k+3)-minimal.
 */
inline Construction epic_double(const Permutation& pi, const Permutation& sigma, std::size_t k,
                                EpicVariant variant) {
  const bool even = variant == EpicVariant::double_even;
  Permutation out = even ? skew_sum(direct_sum(pi, pi), direct_sum(pi, sigma))
                         : skew_sum(direct_sum(pi, sigma), direct_sum(sigma, sigma));
  ConstructionRecipe recipe{even ? "epic-double-even" : "epic-double-odd",
                            {pi, sigma},
                            {{"k", detail::as_param(k)}},
                            triangle(even ? 2 * k + 2 : 2 * k + 3),
                            ClaimStatus::minimal,
                            out.size(),
                            {}};
  return {std::move(recipe), std::move(out)};
}

/// pi (a-1,b-1)-sharp and sigma (c-1,d-1)-sharp give pi (x) sigma, claimed (ac-1, bd-1)-sharp.
inline Construction ghee_tensor(const Permutation& pi, const Permutation& sigma, std::size_t a,
                                std::size_t b, std::size_t c, std::size_t d) {
  if (a == 0 || b == 0 || c == 0 || d == 0)
    throw std::invalid_argument("tensor parameters a, b, c, d must be positive");
  Permutation out = tensor(pi, sigma);
  ConstructionRecipe recipe{"ghee",
                            {pi, sigma},
                            {{"a", detail::as_param(a)},
                             {"b", detail::as_param(b)},
                             {"c", detail::as_param(c)},
                             {"d", detail::as_param(d)}},
                            rectangle(a * c - 1, b * d - 1),
                            ClaimStatus::sharp,
                            out.size(),
                            {}};
  return {std::move(recipe), std::move(out)};
}

/**
 * (L (+) tau) (-) R with L the skew sum of r copies of 1..N and R the direct
 * sum of s copies of N..1. For N > r+s this is (r+s)-coverable exactly when
 * tau is (r,s)-coverable.
 */
inline Construction nio_embed(const Permutation& tau, std::size_t r, std::size_t s,
                              std::size_t n_block) {
  if (n_block <= r + s)
    throw std::invalid_argument("block length N must exceed r + s");
  Permutation left;
  for (std::size_t i = 0; i < r; ++i) left = skew_sum(left, Permutation::identity(n_block));
  Permutation right;
  for (std::size_t i = 0; i < s; ++i) right = direct_sum(right, Permutation::decreasing(n_block));
  Permutation out = skew_sum(direct_sum(left, tau), right);
  ConstructionRecipe recipe{"nio-embed",
                            {tau},
                            {{"r", detail::as_param(r)},
                             {"s", detail::as_param(s)},
                             {"N", detail::as_param(n_block)}},
                            triangle(r + s),
                            ClaimStatus::not_coverable,
                            out.size(),
                            {}};
  return {std::move(recipe), std::move(out)};
}

/// Smallest legal block length.
inline Construction nio_embed(const Permutation& tau, std::size_t r, std::size_t s) {
  return nio_embed(tau, r, s, r + s + 1);
}

/// (1..k+2) (-) sigma: (k+1)-coverable exactly when sigma is k-coverable.
inline Construction nio_lift(const Permutation& sigma, std::size_t k) {
  Permutation out = skew_sum(Permutation::identity(k + 2), sigma);
  ConstructionRecipe recipe{"nio-lift",        {sigma}, {{"k", detail::as_param(k)}},
                            triangle(k + 1), ClaimStatus::not_coverable, out.size(), {}};
  return {std::move(recipe), std::move(out)};
}

/// Iterated tensor powers of pi15: length 15^n, claimed (3^n-1, 3^n-1)-sharp.
inline Construction family15(std::size_t n) {
  if (n == 0) throw std::invalid_argument("family15 needs n >= 1");
  Permutation acc = seeds::pi15();
  std::size_t side = 3;
  for (std::size_t i = 1; i < n; ++i) {
    acc = ghee_tensor(acc, seeds::pi15(), side, side, 3, 3).permutation;
    side *= 3;
  }
  ConstructionRecipe recipe{"family15", {seeds::pi15()}, {{"n", detail::as_param(n)}},
                            rectangle(side - 1, side - 1), ClaimStatus::sharp, acc.size(), {}};
  return {std::move(recipe), std::move(acc)};
}

enum class EpicRule { base, step, double_even, double_odd };

inline const char* to_string(EpicRule rule) {
  switch (rule) {
    case EpicRule::base: return "base";
    case EpicRule::step: return "step";
    case EpicRule::double_even: return "double-even";
    case EpicRule::double_odd: return "double-odd";
  }
  return "unknown";
}

struct EpicEntry {
  std::uint64_t length = 0;
  EpicRule rule = EpicRule::base;
};

/**
 * Lower bounds on the longest T(k)-minimal length for k = 0..k_max, from the
 * bases 1, 3, 6, 12 and the three composition recurrences
 *   M(k+1) >= M(k) + k + 2,
 *   M(2j+2) >= 3 M(j) + M(j+1),
 *   M(2j+3) >= M(j) + 3 M(j+1),
 * taking the best rule at each k (ties go to the step rule).
 */
inline std::vector<EpicEntry> epic_schedule(std::size_t k_max) {
  static constexpr std::uint64_t bases[] = {1, 3, 6, 12};
  std::vector<EpicEntry> m(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (k < 4) {
      m[k] = {bases[k], EpicRule::base};
      continue;
    }
    EpicEntry best{m[k - 1].length + k + 1, EpicRule::step};
    if (k % 2 == 0) {
      const std::size_t j = (k - 2) / 2;
      const std::uint64_t len = 3 * m[j].length + m[j + 1].length;
      if (len > best.length) best = {len, EpicRule::double_even};
    } else {
      const std::size_t j = (k - 3) / 2;
      const std::uint64_t len = m[j].length + 3 * m[j + 1].length;
      if (len > best.length) best = {len, EpicRule::double_odd};
    }
    m[k] = best;
  }
  return m;
}

namespace detail {

inline Permutation punkt_build(std::size_t k, const std::vector<EpicEntry>& schedule,
                               std::map<std::size_t, Permutation>& memo) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  Permutation out;
  switch (schedule[k].rule) {
    case EpicRule::base: {
      static const Permutation bases[] = {seeds::t0_minimal(), seeds::t1_minimal(),
                                          seeds::t2_minimal(), seeds::pi12()};
      out = bases[k];
      break;
    }
    case EpicRule::step:
      out = epic_step(punkt_build(k - 1, schedule, memo), k - 1).permutation;
      break;
    case EpicRule::double_even: {
      const std::size_t j = (k - 2) / 2;
      out = epic_double(punkt_build(j, schedule, memo), punkt_build(j + 1, schedule, memo), j,
                        EpicVariant::double_even)
                .permutation;
      break;
    }
    case EpicRule::double_odd: {
      const std::size_t j = (k - 3) / 2;
      out = epic_double(punkt_build(j, schedule, memo), punkt_build(j + 1, schedule, memo), j,
                        EpicVariant::double_odd)
                .permutation;
      break;
    }
  }
  return memo.emplace(k, std::move(out)).first->second;
}

}  // namespace detail

/// Longest T(k)-minimal permutation the composition recurrences reach.
inline Construction punkt_family(std::size_t k) {
  const auto schedule = epic_schedule(k);
  std::map<std::size_t, Permutation> memo;
  Permutation out = detail::punkt_build(k, schedule, memo);
  ConstructionRecipe recipe{"punkt",
                            {},
                            {{"k", detail::as_param(k)}},
                            triangle(k),
                            ClaimStatus::minimal,
                            static_cast<std::size_t>(schedule[k].length),
                            {}};
  for (std::size_t i = 0; i <= k; ++i)
    recipe.notes.push_back("k=" + std::to_string(i) + " rule=" + to_string(schedule[i].rule) +
                           " length=" + std::to_string(schedule[i].length));
  return {std::move(recipe), std::move(out)};
}

}  // namespace monocover

#endif  // MONOCOVER_CONSTRUCTIONS_HPP
