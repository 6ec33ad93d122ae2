#ifndef MONOCOVER_COVER_SOLVER_HPP
#define MONOCOVER_COVER_SOLVER_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "monocover/downset.hpp"
#include "monocover/permutation.hpp"

namespace monocover {

struct SolverLimits {
  /// Maximum number of failed states remembered per query.
  std::size_t memo_budget = std::size_t{1} << 24;
  /// Wall-clock seconds per query; unset means unlimited.
  std::optional<double> time_budget;
};

enum class Verdict { yes, no, exhausted };

struct CoverOutcome {
  Verdict verdict = Verdict::no;
  std::optional<MonotoneCover> cover;
};

class resource_exhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// True iff every chain is monotone in its declared direction.
inline bool validate_cover(const Permutation& pi, const MonotoneCover& cover) {
  if (cover.chain_of.size() != pi.size()) return false;
  const std::size_t chains = cover.r + cover.s;
  std::vector<int> last(chains, 0);
  std::vector<bool> used(chains, false);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const std::size_t c = cover.chain_of[i];
    if (c >= chains) return false;
    if (used[c]) {
      const bool ok = cover.direction_of(c) == Direction::increasing ? pi[i] > last[c]
                                                                     : pi[i] < last[c];
      if (!ok) return false;
    }
    used[c] = true;
    last[c] = pi[i];
  }
  return true;
}

/**
 * Exact (r,s)-coverability.
 *
 * Positions are processed left to right. A state is the multiset of chain
 * tops per direction. Within one direction the new value goes to the
 * best-fitting chain (largest increasing top below it, smallest decreasing
 * top above it), since that choice dominates every other chain of the same
 * direction. So each position branches only on the direction.
 *
 * Failed states are memoized after reducing every top to its rank among the
 * values still to come: two tops in the same gap behave identically. A new
 * state is also rejected when a recently failed state at the same position
 * dominates it (increasing ranks <=, decreasing ranks >=).
 *
 * A solver instance owns its memo and answers one query at a time.
 */
class CoverSolver {
public:
  explicit CoverSolver(SolverLimits limits = {}) : limits_(limits) {}

  const SolverLimits& limits() const { return limits_; }
  void set_limits(SolverLimits limits) { limits_ = limits; }

  /// Search-tree nodes visited by the last general-case query.
  std::size_t nodes_visited() const { return nodes_; }

  CoverOutcome solve(const Permutation& pi, std::size_t r, std::size_t s) {
    nodes_ = 0;
    const std::size_t n = pi.size();
    if (n == 0) return {Verdict::yes, MonotoneCover{r, s, {}}};

    if (n <= r + s) {
      MonotoneCover singles{r, s, std::vector<std::size_t>(n)};
      for (std::size_t i = 0; i < n; ++i) singles.chain_of[i] = i;
      return {Verdict::yes, singles};
    }

    const std::size_t longest_dec = lds(pi);
    if (longest_dec <= r) {
      MonotoneCover c = dilworth_cover(pi, Direction::increasing);
      c.r = r;
      c.s = s;
      return {Verdict::yes, c};
    }
    const std::size_t longest_inc = lis(pi);
    if (longest_inc <= s) {
      MonotoneCover c = dilworth_cover(pi, Direction::decreasing);
      for (auto& id : c.chain_of) id += r;
      c.r = r;
      c.s = s;
      return {Verdict::yes, c};
    }
    if (r == 0 || s == 0) return {Verdict::no, std::nullopt};

    return general(pi, r, s);
  }

  /// Throws resource_exhausted instead of returning a third outcome.
  bool coverable(const Permutation& pi, std::size_t r, std::size_t s) {
    const auto out = solve(pi, r, s);
    if (out.verdict == Verdict::exhausted)
      throw resource_exhausted("solver budget exceeded at (" + std::to_string(r) + "," +
                               std::to_string(s) + ") for length " +
                               std::to_string(pi.size()));
    return out.verdict == Verdict::yes;
  }

  /// Coverable for some point of `target`; only the frontier is queried.
  bool coverable(const Permutation& pi, const Downset& target) {
    for (auto [r, s] : frontier(target))
      if (coverable(pi, r, s)) return true;
    return false;
  }

  /**
   * D(pi): the pairs (r,s) for which pi is not (r,s)-coverable. Column r
   * has height equal to the least s making pi (r,s)-coverable; the walk
   * starts at h_0 = lis(pi) and only moves down as r grows.
   */
  Downset dset(const Permutation& pi) {
    if (pi.empty()) return Downset();
    std::vector<std::size_t> heights{lis(pi)};
    const std::size_t longest_dec = lds(pi);
    for (std::size_t r = 1; r < longest_dec; ++r) {
      std::size_t h = heights.back();
      while (h > 0 && coverable(pi, r, h - 1)) --h;
      if (h == 0) break;
      heights.push_back(h);
    }
    return Downset(std::move(heights));
  }

private:
  using Clock = std::chrono::steady_clock;

  struct Search {
    const Permutation* pi = nullptr;
    std::size_t n = 0;
    std::vector<int> inc_top;  // 0 = empty
    std::vector<int> dec_top;  // n + 1 = empty
    std::vector<std::size_t> chain_of;
    // below[pos][v] = #{ j >= pos : pi[j] < v }, for v in 0..n+1.
    std::vector<std::vector<std::uint16_t>> below;
    std::vector<std::unordered_set<std::u16string>> failed;
    std::vector<std::vector<std::u16string>> recent;
    std::size_t stored = 0;
    bool exhausted = false;
    bool use_memo = false;
    Clock::time_point deadline;
    bool has_deadline = false;
  };

  static constexpr std::size_t memo_min_length = 13;
  static constexpr std::size_t dominance_window = 8;

  CoverOutcome general(const Permutation& pi, std::size_t r, std::size_t s) {
    Search st;
    st.pi = &pi;
    st.n = pi.size();
    st.inc_top.assign(r, 0);
    st.dec_top.assign(s, static_cast<int>(st.n) + 1);
    st.chain_of.assign(st.n, 0);
    st.use_memo = st.n >= memo_min_length;
    if (st.use_memo) {
      st.below.assign(st.n + 1, std::vector<std::uint16_t>(st.n + 2, 0));
      for (std::size_t pos = st.n; pos-- > 0;) {
        for (std::size_t v = 0; v <= st.n + 1; ++v)
          st.below[pos][v] = static_cast<std::uint16_t>(
              st.below[pos + 1][v] + (pi[pos] < static_cast<int>(v) ? 1 : 0));
      }
      st.failed.resize(st.n + 1);
      st.recent.resize(st.n + 1);
    }
    if (limits_.time_budget) {
      st.has_deadline = true;
      st.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(*limits_.time_budget));
    }

    const bool found = descend(st, 0);
    if (st.exhausted) return {Verdict::exhausted, std::nullopt};
    if (!found) return {Verdict::no, std::nullopt};
    return {Verdict::yes, MonotoneCover{r, s, st.chain_of}};
  }

  std::u16string key_for(const Search& st, std::size_t pos) const {
    const auto& rank = st.below[pos];
    std::u16string key;
    key.reserve(st.inc_top.size() + st.dec_top.size());
    for (int t : st.inc_top) key.push_back(rank[static_cast<std::size_t>(t)]);
    std::sort(key.begin(), key.end());
    const std::size_t split = key.size();
    for (int t : st.dec_top) key.push_back(rank[static_cast<std::size_t>(t)]);
    std::sort(key.begin() + static_cast<std::ptrdiff_t>(split), key.end());
    return key;
  }

  static bool dominates(const std::u16string& winner, const std::u16string& other,
                        std::size_t inc_count) {
    for (std::size_t i = 0; i < winner.size(); ++i) {
      if (i < inc_count ? winner[i] > other[i] : winner[i] < other[i]) return false;
    }
    return true;
  }

  bool descend(Search& st, std::size_t pos) {
    if (pos == st.n) return true;
    if ((++nodes_ & 1023u) == 0 && st.has_deadline && Clock::now() > st.deadline) {
      st.exhausted = true;
      return false;
    }

    std::u16string key;
    if (st.use_memo && st.n - pos >= 4) {
      key = key_for(st, pos);
      if (st.failed[pos].count(key)) return false;
      for (const auto& f : st.recent[pos])
        if (dominates(f, key, st.inc_top.size())) return false;
    }

    const int v = (*st.pi)[pos];

    std::size_t best = SIZE_MAX;
    for (std::size_t c = 0; c < st.inc_top.size(); ++c)
      if (st.inc_top[c] < v && (best == SIZE_MAX || st.inc_top[c] > st.inc_top[best])) best = c;
    if (best != SIZE_MAX) {
      const int saved = st.inc_top[best];
      st.inc_top[best] = v;
      st.chain_of[pos] = best;
      if (descend(st, pos + 1)) return true;
      st.inc_top[best] = saved;
      if (st.exhausted) return false;
    }

    best = SIZE_MAX;
    for (std::size_t c = 0; c < st.dec_top.size(); ++c)
      if (st.dec_top[c] > v && (best == SIZE_MAX || st.dec_top[c] < st.dec_top[best])) best = c;
    if (best != SIZE_MAX) {
      const int saved = st.dec_top[best];
      st.dec_top[best] = v;
      st.chain_of[pos] = st.inc_top.size() + best;
      if (descend(st, pos + 1)) return true;
      st.dec_top[best] = saved;
      if (st.exhausted) return false;
    }

    if (!key.empty()) {
      if (++st.stored > limits_.memo_budget) {
        st.exhausted = true;
        return false;
      }
      auto& window = st.recent[pos];
      if (window.size() == dominance_window) window.erase(window.begin());
      window.push_back(key);
      st.failed[pos].insert(std::move(key));
    }
    return false;
  }

  SolverLimits limits_;
  std::size_t nodes_ = 0;
};

inline CoverOutcome is_rs_coverable(const Permutation& pi, std::size_t r, std::size_t s,
                                    SolverLimits limits = {}) {
  return CoverSolver(limits).solve(pi, r, s);
}

inline bool is_downset_coverable(const Permutation& pi, const Downset& target,
                                 SolverLimits limits = {}) {
  return CoverSolver(limits).coverable(pi, target);
}

inline Downset dset(const Permutation& pi, SolverLimits limits = {}) {
  return CoverSolver(limits).dset(pi);
}

}  // namespace monocover

#endif  // MONOCOVER_COVER_SOLVER_HPP
