#ifndef MONOCOVER_SEPARABLE_HPP
#define MONOCOVER_SEPARABLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocover/downset.hpp"
#include "monocover/permutation.hpp"

namespace monocover {

/**
 * Build tree of a separable permutation. Sum nodes have at least two
 * children and never a child of their own kind, so each separable
 * permutation has exactly one tree.
 */
struct DecompositionTree {
  enum class Kind { leaf, direct_sum, skew_sum };

  Kind kind = Kind::leaf;
  std::vector<DecompositionTree> children;

  std::size_t leaves() const {
    if (kind == Kind::leaf) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaves();
    return n;
  }

  friend bool operator==(const DecompositionTree&, const DecompositionTree&) = default;
};

namespace detail {

// Cut points where the prefix occupies the lowest (direct) or highest
// (skew) values.
inline std::vector<std::size_t> block_ends(std::span<const int> values, bool direct) {
  std::vector<std::size_t> ends;
  const int n = static_cast<int>(values.size());
  int extreme = direct ? 0 : n + 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    extreme = direct ? std::max(extreme, values[i]) : std::min(extreme, values[i]);
    const int len = static_cast<int>(i) + 1;
    if (direct ? extreme == len : extreme == n - len + 1) ends.push_back(i + 1);
  }
  return ends;
}

}  // namespace detail

inline std::optional<DecompositionTree> decompose(const Permutation& pi) {
  using Kind = DecompositionTree::Kind;
  if (pi.empty()) return std::nullopt;
  if (pi.size() == 1) return DecompositionTree{};
  for (bool direct : {true, false}) {
    const auto ends = detail::block_ends(pi.span(), direct);
    if (ends.size() < 2) continue;
    DecompositionTree node{direct ? Kind::direct_sum : Kind::skew_sum, {}};
    std::size_t start = 0;
    for (std::size_t end : ends) {
      auto child = decompose(standardize(pi.span().subspan(start, end - start)));
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
      start = end;
    }
    return node;
  }
  return std::nullopt;
}

inline Permutation to_permutation(const DecompositionTree& tree) {
  using Kind = DecompositionTree::Kind;
  if (tree.kind == Kind::leaf) return Permutation{1};
  Permutation acc = to_permutation(tree.children.front());
  for (std::size_t i = 1; i < tree.children.size(); ++i) {
    const Permutation next = to_permutation(tree.children[i]);
    acc = tree.kind == Kind::direct_sum ? direct_sum(acc, next) : skew_sum(acc, next);
  }
  return acc;
}

/// D(pi) folded bottom-up from the tree; no solver calls.
inline Downset separable_dset(const DecompositionTree& tree) {
  using Kind = DecompositionTree::Kind;
  if (tree.kind == Kind::leaf) return Downset{1};
  Downset acc;
  for (const auto& child : tree.children) {
    const Downset d = separable_dset(child);
    acc = tree.kind == Kind::direct_sum ? oplus(acc, d) : ominus(acc, d);
  }
  return acc;
}

/// Nested notation: leaf "1", sums "+(..,..)" and "-(..,..)".
inline std::string to_string(const DecompositionTree& tree) {
  using Kind = DecompositionTree::Kind;
  if (tree.kind == Kind::leaf) return "1";
  std::string out = tree.kind == Kind::direct_sum ? "+(" : "-(";
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    if (i) out += ',';
    out += to_string(tree.children[i]);
  }
  return out + ')';
}

namespace detail {

inline const std::vector<Permutation>& enumerate_memo(
    const Downset& target, std::map<Downset, std::vector<Permutation>>& memo) {
  if (auto it = memo.find(target); it != memo.end()) return it->second;
  std::vector<Permutation> found;
  if (target == Downset{1}) {
    found.push_back(Permutation{1});
  } else {
    for (SumKind kind : {SumKind::direct, SumKind::skew}) {
      for (const auto& [b, c] : splittings(target, kind)) {
        const std::vector<Permutation>& left = enumerate_memo(b, memo);
        const std::vector<Permutation>& right = enumerate_memo(c, memo);
        for (const auto& x : left)
          for (const auto& y : right)
            found.push_back(kind == SumKind::direct ? direct_sum(x, y) : skew_sum(x, y));
      }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
  }
  return memo.emplace(target, std::move(found)).first->second;
}

}  // namespace detail

/**
 * All separable A-critical permutations, in lexicographic order. A separable
 * permutation is A-critical exactly when its D equals A, and such a
 * permutation splits as a sum of critical permutations for a splitting of A.
 */
inline std::vector<Permutation> enumerate_critical(const Downset& target) {
  if (target.empty()) throw std::invalid_argument("enumeration target must be nonempty");
  std::map<Downset, std::vector<Permutation>> memo;
  return detail::enumerate_memo(target, memo);
}

}  // namespace monocover

#endif  // MONOCOVER_SEPARABLE_HPP
