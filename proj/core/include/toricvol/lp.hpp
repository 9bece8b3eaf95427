#pragma once

#include <optional>

#include "toricvol/rational.hpp"

namespace toricvol {

/// Exact feasibility for { x >= 0 : A x = b } by phase-one simplex with
/// Bland's rule. Returns a feasible point or nullopt.
std::optional<RatVector> find_nonnegative_solution(const RatMatrix& a, const RatVector& b);

/// Whether `point` is a convex combination of `generators` (exact).
bool in_convex_hull(const std::vector<RatVector>& generators, const RatVector& point);

}  // namespace toricvol
