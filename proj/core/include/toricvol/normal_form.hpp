#pragma once

#include <string>
#include <vector>

#include "toricvol/polytope.hpp"

namespace toricvol {

/// Canonical key of a finite set of integer vectors in Z^d under GL(d, Z).
///
/// The key is the lexicographically smallest (column-major) Hermite normal
/// form of the d x k matrix over all orderings of the vectors. The first j
/// columns of a Hermite normal form depend only on the first j input columns,
/// so orderings are grown one column at a time and only minimal prefixes
/// survive.
std::string linear_normal_form(const std::vector<IntVector>& vectors);

/// Affine normal form of a lattice polytope: equal keys exactly when the two
/// polytopes differ by an integer unimodular map and an integer translation.
/// Throws NotLattice.
std::string normal_form(const Polytope& p);

}  // namespace toricvol
