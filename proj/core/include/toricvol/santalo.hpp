#pragma once

#include <optional>
#include <vector>

#include "toricvol/polytope.hpp"

namespace toricvol {

/// Outcome of minimizing x -> vol((P - x)^*) over the interior of P.
struct SantaloResult {
  RatVector point;        ///< rational approximation of the Santalo point
  Rational dual_volume;   ///< exact vol((P - point)^*)
  Real mahler;            ///< vol(P) * dual_volume
  Real residual;          ///< |barycenter((P - point)^*)|
  int iterations = 0;
  bool exact = false;     ///< point is provably the Santalo point
};

struct SantaloOptions {
  double tol = 1e-9;
  int max_iterations = 10000;
  std::optional<RatVector> start;  ///< defaults to the barycenter of P
};

/// Evaluates vol((P - x)^*) and its derivatives for a fixed polytope.
///
/// The combinatorics of (P - x)^* does not depend on x, so a boundary
/// triangulation of the dual is computed once. A boundary simplex spanned by
/// the dual vertices a_i / h_i(x), with h_i(x) = b_i - <a_i, x>, contributes
/// |det(a_1..a_n)| / (n! * prod h_i(x)).
class DualVolumeEvaluator {
 public:
  explicit DualVolumeEvaluator(const Polytope& p);

  std::size_t dim() const { return dim_; }

  /// Throws OriginNotInterior when x is not strictly inside P.
  Rational value(const RatVector& x) const;
  RatVector gradient(const RatVector& x) const;
  /// Barycenter of (P - x)^*, exact.
  RatVector dual_barycenter(const RatVector& x) const;
  std::vector<std::vector<Real>> hessian(const RatVector& x) const;
  bool is_interior(const RatVector& x) const;

 private:
  std::vector<Rational> slacks(const RatVector& x) const;

  std::size_t dim_;
  std::vector<Halfspace> facets_;
  struct Cell {
    std::vector<std::size_t> facets;
    Rational weight;  // |det| / n!
  };
  std::vector<Cell> cells_;
};

/// vol((P - x)^*) via translate, polar_dual and volume.
Rational polar_volume_at(const Polytope& p, const RatVector& x);

/// Gradient of x -> vol((P - x)^*); equals (n+1) vol(K^*) barycenter(K^*)
/// for K = P - x.
RatVector polar_volume_gradient(const Polytope& p, const RatVector& x);

/// Centre of symmetry of P, when P is centrally symmetric.
std::optional<RatVector> symmetry_center(const Polytope& p);

SantaloResult santalo_point(const Polytope& p, const SantaloOptions& options = {});

struct MahlerVolume {
  Real value;  ///< vol(P) * vol(P^chi) at the computed point
  Real lower;  ///< heuristic lower end: value * (1 - c * residual)
  Real upper;  ///< exact evaluation at a rational point; never below the minimum
  SantaloResult santalo;
};

/// Slack constant c = n * diameter((P - point)^*) used for brackets.
Real bracket_constant(const Polytope& p, const RatVector& point);

MahlerVolume mahler_volume(const Polytope& p, const SantaloOptions& options = {});

}  // namespace toricvol
