#ifndef MONOCOVER_VERIFY_HPP
#define MONOCOVER_VERIFY_HPP

#include "monocover/constructions.hpp"
#include "monocover/cover_solver.hpp"
#include "monocover/criticality.hpp"

namespace monocover {

/// Checks a construction's claimed property with the exact solver.
/// Throws resource_exhausted when the solver budget runs out.
inline bool verify_claim(const Construction& c, const SolverLimits& limits = {}) {
  const auto& recipe = c.recipe;
  if (recipe.claimed_length != c.permutation.size()) return false;
  auto checked = [](const CriticalityReport& rep) {
    if (rep.status == CriticalStatus::resource_exhausted)
      throw resource_exhausted("solver budget exceeded while verifying a claim");
    return rep;
  };
  switch (recipe.claimed_status) {
    case ClaimStatus::critical:
      return checked(is_critical(c.permutation, recipe.claimed_target, {limits, false})).critical();
    case ClaimStatus::minimal:
      return checked(is_minimal(c.permutation, recipe.claimed_target, {limits, false}))
          .minimal.value_or(false);
    case ClaimStatus::sharp:
      return is_sharp(c.permutation, recipe.claimed_target.columns() - 1,
                      recipe.claimed_target.rows() - 1, limits);
    case ClaimStatus::not_coverable:
      return !is_downset_coverable(c.permutation, recipe.claimed_target, limits);
  }
  return false;
}

}  // namespace monocover

#endif  // MONOCOVER_VERIFY_HPP
