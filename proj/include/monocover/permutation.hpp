#ifndef MONOCOVER_PERMUTATION_HPP
#define MONOCOVER_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monocover {

/**
 * A permutation of {1..n} in one-line notation. The empty permutation is
 * legal. Values are stored 1-based, exactly as printed.
 */
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (auto err = validate(values_)) throw std::invalid_argument(*err);
  }

  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  /// Skips validation; the caller guarantees a bijection on {1..n}.
  static Permutation from_trusted(std::vector<int> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return from_trusted(std::move(v));
  }

  static Permutation decreasing(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
    return from_trusted(std::move(v));
  }

  /// Returns a diagnostic naming the first offending position, or nullopt.
  static std::optional<std::string> validate(std::span<const int> values) {
    const auto n = static_cast<int>(values.size());
    std::vector<int> seen_at(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
      const int v = values[static_cast<std::size_t>(i)];
      if (v < 1 || v > n) {
        return "value " + std::to_string(v) + " at position " +
               std::to_string(i + 1) + " is outside 1.." + std::to_string(n);
      }
      if (seen_at[static_cast<std::size_t>(v)] != 0) {
        return "value " + std::to_string(v) + " at position " +
               std::to_string(i + 1) + " repeats position " +
               std::to_string(seen_at[static_cast<std::size_t>(v)]);
      }
      seen_at[static_cast<std::size_t>(v)] = i + 1;
    }
    return std::nullopt;
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  std::span<const int> span() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

private:
  std::vector<int> values_;
};

/// Strictly increasing 0-based positions into a permutation.
using IndexSubsequence = std::vector<std::size_t>;

/// Renormalizes distinct integers to ranks 1..m, keeping their order.
inline Permutation standardize(std::span<const int> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    out[order[rank]] = static_cast<int>(rank) + 1;
  return Permutation::from_trusted(std::move(out));
}

inline Permutation pattern_of(const Permutation& pi, const IndexSubsequence& indices) {
  std::vector<int> picked;
  picked.reserve(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= pi.size())
      throw std::out_of_range("index " + std::to_string(indices[k] + 1) +
                              " out of range for length " + std::to_string(pi.size()));
    if (k > 0 && indices[k] <= indices[k - 1])
      throw std::invalid_argument("indices must be strictly increasing");
    picked.push_back(pi[indices[k]]);
  }
  return standardize(picked);
}

/// Removes the entry at 0-based position `pos` and renormalizes by rank.
inline Permutation delete_at(const Permutation& pi, std::size_t pos) {
  if (pos >= pi.size())
    throw std::out_of_range("deletion position " + std::to_string(pos + 1) +
                            " out of range for length " + std::to_string(pi.size()));
  const int removed = pi[pos];
  std::vector<int> out;
  out.reserve(pi.size() - 1);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i == pos) continue;
    out.push_back(pi[i] > removed ? pi[i] - 1 : pi[i]);
  }
  return Permutation::from_trusted(std::move(out));
}

namespace detail {

// Backtracking embedding of tau into pi. `lo`/`hi` bound the value window
// allowed for the next pattern entry given entries already placed.
inline bool embed(std::span<const int> pi, std::span<const int> tau,
                  std::vector<int>& placed_value, IndexSubsequence& chosen,
                  std::size_t next_pos, const std::vector<int>& tau_inverse) {
  const std::size_t k = chosen.size();
  if (k == tau.size()) return true;
  if (pi.size() - next_pos < tau.size() - k) return false;

  // Tightest already-placed pattern values below and above tau[k].
  int lo = 0;
  int hi = static_cast<int>(pi.size()) + 1;
  const int want = tau[k];
  for (int below = want - 1; below >= 1; --below) {
    const int at = tau_inverse[static_cast<std::size_t>(below)];
    if (static_cast<std::size_t>(at) < k) {
      lo = placed_value[static_cast<std::size_t>(at)];
      break;
    }
  }
  for (int above = want + 1; above <= static_cast<int>(tau.size()); ++above) {
    const int at = tau_inverse[static_cast<std::size_t>(above)];
    if (static_cast<std::size_t>(at) < k) {
      hi = placed_value[static_cast<std::size_t>(at)];
      break;
    }
  }

  for (std::size_t i = next_pos; i + (tau.size() - k) <= pi.size(); ++i) {
    const int v = pi[i];
    if (v <= lo || v >= hi) continue;
    placed_value[k] = v;
    chosen.push_back(i);
    if (embed(pi, tau, placed_value, chosen, i + 1, tau_inverse)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Finds positions of pi ordered like tau. Intended for short tau.
inline std::optional<IndexSubsequence> contains(const Permutation& pi,
                                                const Permutation& tau) {
  if (tau.size() > pi.size()) return std::nullopt;
  std::vector<int> tau_inverse(tau.size() + 1, 0);
  for (std::size_t j = 0; j < tau.size(); ++j)
    tau_inverse[static_cast<std::size_t>(tau[j])] = static_cast<int>(j);
  std::vector<int> placed(tau.size(), 0);
  IndexSubsequence chosen;
  chosen.reserve(tau.size());
  if (detail::embed(pi.span(), tau.span(), placed, chosen, 0, tau_inverse))
    return chosen;
  return std::nullopt;
}

/// Patience-sorting length of the longest increasing subsequence.
inline std::size_t lis(std::span<const int> values) {
  std::vector<int> piles;
  for (int v : values) {
    auto it = std::lower_bound(piles.begin(), piles.end(), v);
    if (it == piles.end()) piles.push_back(v);
    else *it = v;
  }
  return piles.size();
}

inline std::size_t lds(std::span<const int> values) {
  std::vector<int> piles;
  for (int v : values) {
    auto it = std::lower_bound(piles.begin(), piles.end(), -v);
    if (it == piles.end()) piles.push_back(-v);
    else *it = -v;
  }
  return piles.size();
}

inline std::size_t lis(const Permutation& pi) { return lis(pi.span()); }
inline std::size_t lds(const Permutation& pi) { return lds(pi.span()); }

/// Positions of one longest increasing subsequence (leftmost tie-breaking).
inline IndexSubsequence longest_increasing_positions(std::span<const int> values) {
  std::vector<int> tails;
  std::vector<std::size_t> tail_pos, parent(values.size(), SIZE_MAX);
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), values[i]);
    const auto slot = static_cast<std::size_t>(it - tails.begin());
    if (slot > 0) parent[i] = tail_pos[slot - 1];
    if (it == tails.end()) {
      tails.push_back(values[i]);
      tail_pos.push_back(i);
    } else {
      *it = values[i];
      tail_pos[slot] = i;
    }
  }
  IndexSubsequence out;
  if (tails.empty()) return out;
  for (std::size_t i = tail_pos.back(); i != SIZE_MAX; i = parent[i]) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

enum class Direction { increasing, decreasing };

/**
 * Assignment of every position to one of r increasing or s decreasing
 * chains. Chains 0..r-1 are increasing, r..r+s-1 decreasing; chains may
 * be empty.
 */
struct MonotoneCover {
  std::size_t r = 0;
  std::size_t s = 0;
  std::vector<std::size_t> chain_of;

  Direction direction_of(std::size_t chain) const {
    return chain < r ? Direction::increasing : Direction::decreasing;
  }

  /// Positions per chain, in position order.
  std::vector<IndexSubsequence> chains() const {
    std::vector<IndexSubsequence> out(r + s);
    for (std::size_t i = 0; i < chain_of.size(); ++i)
      if (chain_of[i] < out.size()) out[chain_of[i]].push_back(i);
    return out;
  }

  friend bool operator==(const MonotoneCover&, const MonotoneCover&) = default;
};

/**
 * Cover by lis(pi) decreasing chains (direction = decreasing) or lds(pi)
 * increasing chains. Class t holds the positions whose longest increasing
 * (resp. decreasing) subsequence ending there has length t+1; each class is
 * monotone in the opposite sense.
 */
inline MonotoneCover dilworth_cover(const Permutation& pi, Direction direction) {
  const bool want_decreasing = direction == Direction::decreasing;
  std::vector<int> piles;
  MonotoneCover cover;
  cover.chain_of.resize(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const int key = want_decreasing ? pi[i] : -pi[i];
    auto it = std::lower_bound(piles.begin(), piles.end(), key);
    const auto t = static_cast<std::size_t>(it - piles.begin());
    if (it == piles.end()) piles.push_back(key);
    else *it = key;
    cover.chain_of[i] = t;
  }
  if (want_decreasing) {
    cover.s = piles.size();
  } else {
    cover.r = piles.size();
  }
  return cover;
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> out(a.values());
  const int shift = static_cast<int>(a.size());
  for (int v : b) out.push_back(v + shift);
  return Permutation::from_trusted(std::move(out));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  const int shift = static_cast<int>(b.size());
  for (int v : a) out.push_back(v + shift);
  out.insert(out.end(), b.begin(), b.end());
  return Permutation::from_trusted(std::move(out));
}

/// Replaces each point of `outer` by a copy of `inner`, copies ordered like `outer`.
inline Permutation tensor(const Permutation& outer, const Permutation& inner) {
  const int m = static_cast<int>(inner.size());
  std::vector<int> out;
  out.reserve(outer.size() * inner.size());
  for (int block : outer)
    for (int v : inner) out.push_back((block - 1) * m + v);
  return Permutation::from_trusted(std::move(out));
}

enum class Symmetry { reverse, complement, inverse };

inline Permutation symmetry(const Permutation& pi, Symmetry which) {
  const std::size_t n = pi.size();
  std::vector<int> out(n);
  switch (which) {
    case Symmetry::reverse:
      for (std::size_t i = 0; i < n; ++i) out[i] = pi[n - 1 - i];
      break;
    case Symmetry::complement:
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(n) + 1 - pi[i];
      break;
    case Symmetry::inverse:
      for (std::size_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(pi[i] - 1)] = static_cast<int>(i) + 1;
      break;
  }
  return Permutation::from_trusted(std::move(out));
}

/// All images under the group generated by reverse, complement and inverse.
inline std::set<Permutation> symmetry_orbit(const Permutation& pi) {
  std::set<Permutation> orbit{pi};
  std::vector<Permutation> frontier{pi};
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.back());
    frontier.pop_back();
    for (auto g : {Symmetry::reverse, Symmetry::complement, Symmetry::inverse}) {
      Permutation img = symmetry(cur, g);
      if (orbit.insert(img).second) frontier.push_back(std::move(img));
    }
  }
  return orbit;
}

// Text format: space-separated values on one line; blank means empty.

inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::string buf(text);
  for (char& c : buf)
    if (c == ',') c = ' ';
  std::istringstream in(buf);
  std::string tok;
  std::size_t pos = 0;
  while (in >> tok) {
    ++pos;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw std::invalid_argument("token '" + tok + "' at position " +
                                  std::to_string(pos) + " is not an integer");
    values.push_back(v);
  }
  return Permutation(std::move(values));
}

inline std::string to_string(const Permutation& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(pi[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& pi) {
  return os << to_string(pi);
}

}  // namespace monocover

#endif  // MONOCOVER_PERMUTATION_HPP
