#ifndef MONOCOVER_CRITICALITY_HPP
#define MONOCOVER_CRITICALITY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocover/cover_solver.hpp"
#include "monocover/downset.hpp"
#include "monocover/permutation.hpp"

namespace monocover {

enum class CriticalStatus { coverable, critical, non_critical, resource_exhausted };

inline const char* to_string(CriticalStatus status) {
  switch (status) {
    case CriticalStatus::coverable: return "coverable";
    case CriticalStatus::critical: return "critical";
    case CriticalStatus::non_critical: return "non-critical";
    case CriticalStatus::resource_exhausted: return "resource-exhausted";
  }
  return "unknown";
}

struct CriticalityReport {
  Permutation subject;
  Downset target;
  CriticalStatus status = CriticalStatus::coverable;
  /// For non_critical: a 0-based position whose deletion is still not coverable.
  std::optional<std::size_t> failing_deletion;
  /// Set by is_minimal: whether D(subject) equals the target.
  std::optional<bool> minimal;
  /// Covers of each one-point deletion, when requested and critical.
  std::vector<MonotoneCover> certificates;

  bool critical() const { return status == CriticalStatus::critical; }
};

struct CriticalityOptions {
  SolverLimits limits{};
  bool with_certificates = false;
};

namespace detail {

inline std::optional<MonotoneCover> cover_for(CoverSolver& solver, const Permutation& pi,
                                              const Downset& target) {
  for (auto [r, s] : frontier(target)) {
    auto out = solver.solve(pi, r, s);
    if (out.verdict == Verdict::exhausted) throw resource_exhausted("solver budget exceeded");
    if (out.verdict == Verdict::yes) return out.cover;
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * A-criticality: pi is not A-coverable while each of its one-point
 * deletions is. Coverability is hereditary, so every proper pattern, being
 * a pattern of some one-point deletion, is then coverable as well.
 */
inline CriticalityReport is_critical(const Permutation& pi, const Downset& target,
                                     const CriticalityOptions& options = {}) {
  if (target.empty()) throw std::invalid_argument("criticality target must be nonempty");
  CriticalityReport report{pi, target, CriticalStatus::coverable, {}, {}, {}};
  CoverSolver solver(options.limits);
  try {
    if (solver.coverable(pi, target)) return report;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      const Permutation smaller = delete_at(pi, i);
      if (options.with_certificates) {
        auto cover = detail::cover_for(solver, smaller, target);
        if (!cover) {
          report.status = CriticalStatus::non_critical;
          report.failing_deletion = i;
          report.certificates.clear();
          return report;
        }
        report.certificates.push_back(std::move(*cover));
      } else if (!solver.coverable(smaller, target)) {
        report.status = CriticalStatus::non_critical;
        report.failing_deletion = i;
        return report;
      }
    }
  } catch (const resource_exhausted&) {
    report.status = CriticalStatus::resource_exhausted;
    report.certificates.clear();
    return report;
  }
  report.status = CriticalStatus::critical;
  return report;
}

/// Critical for `target` and D(pi) == target.
inline CriticalityReport is_minimal(const Permutation& pi, const Downset& target,
                                    const CriticalityOptions& options = {}) {
  CriticalityReport report = is_critical(pi, target, options);
  if (report.status == CriticalStatus::resource_exhausted) return report;
  try {
    report.minimal = report.critical() && dset(pi, options.limits) == target;
  } catch (const resource_exhausted&) {
    report.status = CriticalStatus::resource_exhausted;
  }
  return report;
}

/// (r,s)-critical and (0,s+1)-coverable, i.e. lis(pi) <= s + 1.
inline bool is_sharp(const Permutation& pi, std::size_t r, std::size_t s,
                     const SolverLimits& limits = {}) {
  if (lis(pi) > s + 1) return false;
  const auto report = is_critical(pi, rectangle(r, s), {limits, false});
  if (report.status == CriticalStatus::resource_exhausted)
    throw resource_exhausted("solver budget exceeded during sharpness check");
  return report.critical();
}

struct CriticalizeResult {
  Permutation critical;
  /// 0-based positions deleted, each relative to the permutation at that step.
  std::vector<std::size_t> deletion_trace;
};

/**
 * Shrinks a non-A-coverable permutation to an A-critical pattern by deleting
 * the lowest position whose removal keeps it non-coverable. One left-to-right
 * pass suffices: a position whose deletion was coverable stays so after any
 * further deletions, by heredity.
 */
inline CriticalizeResult criticalize(const Permutation& pi, const Downset& target,
                                     const SolverLimits& limits = {}) {
  if (target.empty()) throw std::invalid_argument("criticalize target must be nonempty");
  CoverSolver solver(limits);
  if (solver.coverable(pi, target))
    throw std::invalid_argument("criticalize requires a permutation that is not coverable");
  CriticalizeResult result{pi, {}};
  std::size_t i = 0;
  while (i < result.critical.size()) {
    Permutation smaller = delete_at(result.critical, i);
    if (!solver.coverable(smaller, target)) {
      result.critical = std::move(smaller);
      result.deletion_trace.push_back(i);
    } else {
      ++i;
    }
  }
  return result;
}

}  // namespace monocover

#endif  // MONOCOVER_CRITICALITY_HPP
