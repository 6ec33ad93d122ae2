#ifndef MONOCOVER_DOWNSET_HPP
#define MONOCOVER_DOWNSET_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monocover {

/**
 * A finite downward-closed subset of N^2, stored as its column heights
 * h_0 >= h_1 >= ... >= h_m > 0, where h_r counts the points (r, s).
 *
 * Membership: (r, s) is in the set iff r <= m and s < h_r.
 */
class Downset {
public:
  Downset() = default;

  explicit Downset(std::vector<std::size_t> heights) : heights_(std::move(heights)) {
    for (std::size_t i = 0; i < heights_.size(); ++i) {
      if (heights_[i] == 0)
        throw std::invalid_argument("downset column " + std::to_string(i) + " has height 0");
      if (i > 0 && heights_[i] > heights_[i - 1])
        throw std::invalid_argument("downset column heights must be non-increasing");
    }
  }

  Downset(std::initializer_list<std::size_t> heights)
      : Downset(std::vector<std::size_t>(heights)) {}

  /// Accepts trailing zero heights, which are dropped.
  static Downset from_heights_trimmed(std::vector<std::size_t> heights) {
    while (!heights.empty() && heights.back() == 0) heights.pop_back();
    return Downset(std::move(heights));
  }

  const std::vector<std::size_t>& heights() const { return heights_; }
  std::size_t columns() const { return heights_.size(); }
  bool empty() const { return heights_.empty(); }

  std::size_t height(std::size_t r) const { return r < heights_.size() ? heights_[r] : 0; }

  /// Row width: number of points (r, s) with this s.
  std::size_t width(std::size_t s) const {
    std::size_t w = 0;
    while (w < heights_.size() && heights_[w] > s) ++w;
    return w;
  }

  std::size_t rows() const { return heights_.empty() ? 0 : heights_.front(); }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto h : heights_) total += h;
    return total;
  }

  bool contains(std::size_t r, std::size_t s) const { return s < height(r); }

  /// Row widths, i.e. the conjugate height vector.
  std::vector<std::size_t> row_widths() const {
    std::vector<std::size_t> w(rows());
    for (std::size_t s = 0; s < w.size(); ++s) w[s] = width(s);
    return w;
  }

  Downset transpose() const { return Downset(row_widths()); }

  friend bool operator==(const Downset&, const Downset&) = default;
  friend auto operator<=>(const Downset& a, const Downset& b) {
    return a.heights_ <=> b.heights_;
  }

private:
  std::vector<std::size_t> heights_;
};

/// T(k) = {(r, s) : r + s <= k}.
inline Downset triangle(std::size_t k) {
  std::vector<std::size_t> h(k + 1);
  for (std::size_t r = 0; r <= k; ++r) h[r] = k + 1 - r;
  return Downset(std::move(h));
}

/// {0..r} x {0..s}.
inline Downset rectangle(std::size_t r, std::size_t s) {
  return Downset(std::vector<std::size_t>(r + 1, s + 1));
}

/// {0} x {0..height-1}.
inline Downset column(std::size_t height) {
  return height == 0 ? Downset() : Downset({height});
}

/// Column-by-column merge: heights add.
inline Downset oplus(const Downset& a, const Downset& b) {
  std::vector<std::size_t> h(std::max(a.columns(), b.columns()));
  for (std::size_t r = 0; r < h.size(); ++r) h[r] = a.height(r) + b.height(r);
  return Downset(std::move(h));
}

/// Row-by-row merge: row widths add.
inline Downset ominus(const Downset& a, const Downset& b) {
  return oplus(a.transpose(), b.transpose()).transpose();
}

enum class SumKind { direct, skew };

inline Downset merge(const Downset& a, const Downset& b, SumKind kind) {
  return kind == SumKind::direct ? oplus(a, b) : ominus(a, b);
}

inline bool is_subset(const Downset& a, const Downset& b) {
  if (a.columns() > b.columns()) return false;
  for (std::size_t r = 0; r < a.columns(); ++r)
    if (a.height(r) > b.height(r)) return false;
  return true;
}

/// Maximal elements, ordered by increasing r.
inline std::vector<std::pair<std::size_t, std::size_t>> frontier(const Downset& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < a.columns(); ++r)
    if (a.height(r + 1) < a.height(r)) out.emplace_back(r, a.height(r) - 1);
  return out;
}

namespace detail {

inline void split_columns(const std::vector<std::size_t>& target, std::size_t r,
                          std::vector<std::size_t>& left,
                          std::vector<std::pair<Downset, Downset>>& out) {
  if (r == target.size()) {
    std::vector<std::size_t> right(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) right[i] = target[i] - left[i];
    Downset b = Downset::from_heights_trimmed(left);
    Downset c = Downset::from_heights_trimmed(std::move(right));
    if (!b.empty() && !c.empty()) out.emplace_back(std::move(b), std::move(c));
    return;
  }
  const std::size_t prev_left = r == 0 ? target[0] : left[r - 1];
  const std::size_t prev_right = r == 0 ? target[0] : target[r - 1] - left[r - 1];
  for (std::size_t h = 0; h <= std::min(target[r], prev_left); ++h) {
    if (target[r] - h > prev_right) continue;
    left[r] = h;
    split_columns(target, r + 1, left, out);
  }
}

}  // namespace detail

/**
 * All ordered pairs (B, C) of nonempty downsets with A = B op C. For the
 * direct sum these are the height compositions h_A = h_B + h_C with both
 * sides non-increasing; the skew case works on row widths.
 */
inline std::vector<std::pair<Downset, Downset>> splittings(const Downset& a, SumKind kind) {
  std::vector<std::pair<Downset, Downset>> out;
  if (a.empty()) return out;
  const std::vector<std::size_t> target =
      kind == SumKind::direct ? a.heights() : a.row_widths();
  std::vector<std::size_t> left(target.size(), 0);
  detail::split_columns(target, 0, left, out);
  if (kind == SumKind::skew)
    for (auto& [b, c] : out) {
      b = b.transpose();
      c = c.transpose();
    }
  return out;
}

// Text format: space-separated column heights, e.g. "4 3 2 1" for T(3).

inline std::string to_string(const Downset& a) {
  std::string out;
  for (std::size_t i = 0; i < a.columns(); ++i) {
    if (i) out += ' ';
    out += std::to_string(a.height(i));
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Downset& a) {
  return os << to_string(a);
}

/// Column heights, or the shorthands "Tk" (triangle) and "RxS" (rectangle).
inline Downset parse_downset(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    std::size_t i = 0;
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    t.erase(0, i);
  };
  trim(s);
  auto parse_count = [&](const std::string& t) -> std::size_t {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed downset '" + std::string(text) + "'");
    return static_cast<std::size_t>(std::stoul(t));
  };
  if (!s.empty() && (s[0] == 'T' || s[0] == 't')) return triangle(parse_count(s.substr(1)));
  if (auto x = s.find_first_of("xX"); x != std::string::npos)
    return rectangle(parse_count(s.substr(0, x)), parse_count(s.substr(x + 1)));
  std::vector<std::size_t> heights;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) heights.push_back(parse_count(tok));
  return Downset(std::move(heights));
}

}  // namespace monocover

#endif  // MONOCOVER_DOWNSET_HPP
