#ifndef MONOCOVER_BOUNDS_HPP
#define MONOCOVER_BOUNDS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monocover/constructions.hpp"
#include "monocover/downset.hpp"
#include "monocover/permutation.hpp"

namespace monocover {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(BigInt base, std::size_t exp) {
  BigInt out = 1;
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

inline BigInt binomial2(std::size_t n) {
  return n < 2 ? BigInt(0) : BigInt(n) * (n - 1) / 2;
}

inline BigInt ceil_sqrt(const BigInt& x) {
  BigInt root = boost::multiprecision::sqrt(x);
  if (root * root < x) ++root;
  return root;
}

/**
 * min(4 r^(d+1), (4r)^(d/2+1)), exactly. For odd d the second term is
 * irrational; the branches are compared by squaring and the ceiling is
 * reported when it wins.
 */
inline BigInt n_upper(std::size_t r, std::size_t d) {
  if (r < 2) throw std::invalid_argument("n_upper requires r >= 2");
  const BigInt first = 4 * ipow(r, d + 1);
  if (d % 2 == 0) return std::min(first, ipow(4 * BigInt(r), d / 2 + 1));
  const BigInt second_squared = ipow(4 * BigInt(r), d + 2);
  if (first * first <= second_squared) return first;
  return ceil_sqrt(second_squared);
}

struct UpperBound {
  BigInt value;
  std::string source;
};

/// Upper bound on the longest (r,s)-critical length.
inline UpperBound c_rs_upper_with_source(std::size_t r, std::size_t s) {
  if (std::min(r, s) == 0) return {BigInt(r + 1) * (s + 1), "dilworth-exact"};
  if (r == 1 && s == 1) return {BigInt(4), "split-graph-exact"};
  const std::size_t big = std::max(r, s);
  return {n_upper(big, 2 * r * s), "comb(N(max(r,s),2rs))"};
}

inline BigInt c_rs_upper(std::size_t r, std::size_t s) { return c_rs_upper_with_source(r, s).value; }

/// Sum of the (r,s) bounds over r + s = k.
inline BigInt c_k_upper(std::size_t k) {
  BigInt total = 0;
  for (std::size_t r = 0; r <= k; ++r) total += c_rs_upper(r, k - r);
  return total;
}

/// c_k_upper(k) <= (4k)^(k^2/4 + 2), compared as c^4 <= (4k)^(k^2 + 8).
inline bool c_k_upper_within_closed_form(std::size_t k) {
  const BigInt c = c_k_upper(k);
  return ipow(c, 4) <= ipow(BigInt(4 * k), k * k + 8);
}

/// Lower-bound tables with the rule that produced each entry.
struct LowerBoundTables {
  std::size_t k_max = 0;
  std::size_t rs_max = 0;
  std::vector<BigInt> m;  // T(k)-minimal
  std::vector<std::string> m_source;
  std::vector<std::vector<BigInt>> s;  // (r,s)-sharp, [r][s]
  std::vector<std::vector<std::string>> s_source;
  std::vector<std::vector<BigInt>> c_rs;
  std::vector<std::vector<std::string>> c_rs_source;
  std::vector<BigInt> c_k;
  std::vector<std::string> c_k_source;
};

namespace detail {

inline void raise(BigInt& slot, std::string& source, const BigInt& candidate,
                  const std::string& why) {
  if (candidate > slot) {
    slot = candidate;
    source = why;
  }
}

}  // namespace detail

inline LowerBoundTables lower_bounds(std::size_t k_max, std::size_t rs_max) {
  LowerBoundTables t;
  t.k_max = k_max;
  t.rs_max = rs_max;
  const std::size_t side = rs_max + 1;

  // M(k): composition recurrences.
  for (const auto& e : epic_schedule(k_max)) {
    t.m.emplace_back(e.length);
    t.m_source.emplace_back(std::string("epic-") + to_string(e.rule));
  }

  // S(r,s): the separable rectangle baseline, S(2,2) >= 15, closed under
  // S(ac-1, bd-1) >= S(a-1,b-1) S(c-1,d-1).
  t.s.assign(side, std::vector<BigInt>(side));
  t.s_source.assign(side, std::vector<std::string>(side, "rectangle-baseline"));
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t s = 0; s < side; ++s) t.s[r][s] = BigInt(r + 1) * (s + 1);
  if (rs_max >= 2) detail::raise(t.s[2][2], t.s_source[2][2], 15, "seed-pi15");
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 1; a <= side; ++a)
      for (std::size_t c = 1; a * c <= side; ++c)
        for (std::size_t b = 1; b <= side; ++b)
          for (std::size_t d = 1; b * d <= side; ++d) {
            const BigInt cand = t.s[a - 1][b - 1] * t.s[c - 1][d - 1];
            BigInt& slot = t.s[a * c - 1][b * d - 1];
            if (cand > slot) {
              slot = cand;
              t.s_source[a * c - 1][b * d - 1] = "ghee";
              changed = true;
            }
          }
  }

  // C(r,s): baseline, exact small values, sharp entries, then the two
  // disjoint-union recurrences in row-major order.
  t.c_rs.assign(side, std::vector<BigInt>(side));
  t.c_rs_source.assign(side, std::vector<std::string>(side, "rectangle-baseline"));
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t s = 0; s < side; ++s) {
      BigInt& slot = t.c_rs[r][s];
      std::string& why = t.c_rs_source[r][s];
      slot = BigInt(r + 1) * (s + 1);
      if ((r == 2 && s == 1) || (r == 1 && s == 2)) detail::raise(slot, why, 9, "seed-pi9");
      detail::raise(slot, why, t.s[r][s], "sharp:" + t.s_source[r][s]);
      detail::raise(slot, why, t.s[s][r], "sharp-transposed:" + t.s_source[s][r]);
      for (std::size_t r1 = 0; r >= 1 && r1 <= r - 1; ++r1)
        detail::raise(slot, why, t.c_rs[r1][s] + t.c_rs[r - 1 - r1][s], "enkel");
      for (std::size_t s1 = 0; s >= 1 && s1 <= s - 1; ++s1)
        detail::raise(slot, why, t.c_rs[r][s1] + t.c_rs[r][s - 1 - s1], "enkel-rows");
    }
  }

  // C(k).
  std::vector<std::pair<std::size_t, std::size_t>> family_points;  // (n, 2*3^n - 2)
  for (std::size_t p = 3, n = 1; 2 * p - 2 <= k_max; p *= 3, ++n)
    family_points.emplace_back(n, 2 * p - 2);
  for (std::size_t k = 0; k <= k_max; ++k) {
    BigInt slot = binomial2(k + 2);
    std::string why = "triangle-baseline";
    detail::raise(slot, why, t.m[k], "minimal:" + t.m_source[k]);
    for (std::size_t r = 0; r <= k; ++r)
      if (r <= rs_max && k - r <= rs_max) detail::raise(slot, why, t.c_rs[r][k - r], "nio-embed");
    if (k > 0) detail::raise(slot, why, t.c_k[k - 1] + 1, "nio-lift");
    for (auto [n, at] : family_points)
      if (at == k) detail::raise(slot, why, ipow(15, n), "family15");
    t.c_k.push_back(slot);
    t.c_k_source.push_back(why);
  }
  return t;
}

/// (k/6)^2.46 <= value, compared as 6^123 value^50 >= k^123.
inline bool at_least_power_246(const BigInt& value, std::size_t k) {
  return ipow(6, 123) * ipow(value, 50) >= ipow(BigInt(k), 123);
}

/// 100 m > 107 C(k+2, 2).
inline bool exceeds_107_triangle(const BigInt& m, std::size_t k) {
  return 100 * m > 107 * binomial2(k + 2);
}

enum class Quantity { n_rd, c_rs, c_k, m_k, s_rs };

inline const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::n_rd: return "N";
    case Quantity::c_rs: return "C(r,s)";
    case Quantity::c_k: return "C(k)";
    case Quantity::m_k: return "M(k)";
    case Quantity::s_rs: return "S(r,s)";
  }
  return "?";
}

struct BoundReport {
  Quantity quantity = Quantity::c_k;
  std::vector<std::size_t> parameters;
  std::optional<BigInt> lower;
  std::string lower_source;
  std::optional<BigInt> upper;
  std::string upper_source;

  bool consistent() const { return !lower || !upper || *lower <= *upper; }
};

/// Reports for every table entry, each with an upper bound where one exists.
inline std::vector<BoundReport> bound_reports(const LowerBoundTables& t) {
  std::vector<BoundReport> out;
  for (std::size_t k = 0; k <= t.k_max; ++k) {
    const bool has_upper = k <= 24;
    std::optional<BigInt> up;
    if (has_upper) up = c_k_upper(k);
    out.push_back({Quantity::c_k, {k}, t.c_k[k], t.c_k_source[k], up,
                   has_upper ? "sum-over-splits" : ""});
    out.push_back({Quantity::m_k, {k}, t.m[k], t.m_source[k], up,
                   has_upper ? "M<=C;sum-over-splits" : ""});
  }
  for (std::size_t r = 0; r <= t.rs_max; ++r)
    for (std::size_t s = 0; s <= t.rs_max; ++s) {
      const auto up = c_rs_upper_with_source(r, s);
      out.push_back({Quantity::c_rs, {r, s}, t.c_rs[r][s], t.c_rs_source[r][s], up.value,
                     up.source});
      out.push_back({Quantity::s_rs, {r, s}, t.s[r][s], t.s_source[r][s], up.value,
                     "S<=C;" + up.source});
    }
  return out;
}

/// Tab-separated table: quantity, parameters, lower, upper, sources.
inline std::string serialize(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "quantity\tparameters\tlower\tupper\tlower_source\tupper_source\n";
  for (const auto& rep : reports) {
    out << to_string(rep.quantity) << '\t';
    for (std::size_t i = 0; i < rep.parameters.size(); ++i)
      out << (i ? "," : "") << rep.parameters[i];
    out << '\t' << (rep.lower ? rep.lower->str() : "-") << '\t'
        << (rep.upper ? rep.upper->str() : "-") << '\t'
        << (rep.lower_source.empty() ? "-" : rep.lower_source) << '\t'
        << (rep.upper_source.empty() ? "-" : rep.upper_source) << '\n';
  }
  return out.str();
}

/**
 * Rooted tree with d/2+1 layers, every internal node having r children.
 * P_i maps U \ {i} to {1,2}, with value 2 exactly on the root-to-i path.
 */
struct Gadget {
  std::size_t r = 0;
  std::size_t d = 0;
  std::vector<std::size_t> parent;  // parent[0] == 0 is the root
  /// twos[i]: bitmask of the nodes where P_i takes value 2.
  std::vector<std::uint32_t> twos;

  std::size_t size() const { return parent.size(); }

  /// P_i(j) in {1, 2}, or 0 at j == i where P_i is undefined.
  int value(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    return (twos[i] >> j) & 1u ? 2 : 1;
  }
};

inline constexpr std::size_t gadget_size_guard = 15;

inline Gadget gadget_build(std::size_t r, std::size_t d) {
  if (r < 2) throw std::invalid_argument("gadget requires r >= 2");
  if (d % 2 != 0) throw std::invalid_argument("gadget requires even d");
  Gadget g{r, d, {0}, {}};
  std::vector<std::size_t> layer{0};
  for (std::size_t depth = 0; depth < d / 2; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t node : layer)
      for (std::size_t c = 0; c < r; ++c) {
        if (g.parent.size() >= gadget_size_guard)
          throw std::invalid_argument("gadget exceeds the enumeration size guard");
        next.push_back(g.parent.size());
        g.parent.push_back(node);
      }
    layer = std::move(next);
  }
  g.twos.assign(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == 0) continue;
    for (std::size_t a = g.parent[i];; a = g.parent[a]) {
      g.twos[i] |= std::uint32_t{1} << a;
      if (a == 0) break;
    }
  }
  return g;
}

/// Largest number of points outside {i, j} where P_i and P_j differ.
inline std::size_t gadget_max_disagreement(const Gadget& g) {
  std::size_t worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const std::uint32_t outside = ~((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
      const auto diff = static_cast<std::size_t>(std::popcount((g.twos[i] ^ g.twos[j]) & outside));
      worst = std::max(worst, diff);
    }
  return worst;
}

/**
 * True iff no total P : U -> {1,2} has the property that every S of size at
 * most r+1 admits some i outside S with P_i agreeing with P on S.
 */
inline bool gadget_verify(const Gadget& g) {
  const std::size_t n = g.size();
  if (n > gadget_size_guard) throw std::invalid_argument("gadget exceeds the size guard");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> small_sets;
  for (std::uint32_t set = 0; set <= full; ++set)
    if (static_cast<std::size_t>(std::popcount(set)) <= g.r + 1) small_sets.push_back(set);

  for (std::uint32_t p = 0; p <= full; ++p) {  // bit j set: P(j) = 2
    bool every_set_served = true;
    for (std::uint32_t set : small_sets) {
      bool served = false;
      for (std::size_t i = 0; i < n && !served; ++i) {
        if ((set >> i) & 1u) continue;
        served = ((g.twos[i] ^ p) & set) == 0;
      }
      if (!served) {
        every_set_served = false;
        break;
      }
    }
    if (every_set_served) return false;
  }
  return true;
}

/**
 * Upper envelope of D(pi) from peeling longest increasing subsequences: if
 * tau = pi minus a longest increasing subsequence I, then pi is
 * (0,|I|)-coverable and (r+1,s)-coverable whenever tau is (r,s)-coverable.
 * The envelope has exactly |pi| points.
 */
inline Downset dle_peel(const Permutation& pi) {
  std::vector<std::size_t> heights;
  std::vector<int> rest(pi.begin(), pi.end());
  while (!rest.empty()) {
    const auto chain = longest_increasing_positions(rest);
    heights.push_back(chain.size());
    std::vector<int> next;
    next.reserve(rest.size() - chain.size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (c < chain.size() && chain[c] == i) {
        ++c;
        continue;
      }
      next.push_back(rest[i]);
    }
    rest = std::move(next);
  }
  return Downset(std::move(heights));
}

}  // namespace monocover

#endif  // MONOCOVER_BOUNDS_HPP
