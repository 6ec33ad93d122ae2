#ifndef MONOCOVER_MONOCOVER_HPP
#define MONOCOVER_MONOCOVER_HPP

#include "monocover/bounds.hpp"
#include "monocover/constructions.hpp"
#include "monocover/cover_solver.hpp"
#include "monocover/criticality.hpp"
#include "monocover/downset.hpp"
#include "monocover/permutation.hpp"
#include "monocover/search.hpp"
#include "monocover/separable.hpp"
#include "monocover/verify.hpp"

#endif  // MONOCOVER_MONOCOVER_HPP
