#pragma once

#include <string>
#include <vector>

#include "toricvol/polytope.hpp"
#include "toricvol/santalo.hpp"

namespace toricvol {

/// Pointed full-dimensional rational cone in N_R = R^d given by its ray
/// generators. Cones built by cone_from_rays carry primitive extremal rays.
class ToricCone {
 public:
  ToricCone(std::size_t dim, std::vector<RatVector> rays, std::string label = {},
            std::vector<std::string> warnings = {});

  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& rays() const { return rays_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::size_t dim_;
  std::vector<RatVector> rays_;
  std::string label_;
  std::vector<std::string> warnings_;
};

/// Primitivizes, validates pointedness and full dimension, and drops
/// non-extremal rays (recording a warning for each).
ToricCone cone_from_rays(const std::vector<RatVector>& rays, std::string label = {});
ToricCone cone_from_rays(const std::vector<IntVector>& rays, std::string label = {});

struct GorensteinData {
  RatVector u;     ///< <u, v> = 1 on every ray
  long long index; ///< least l with l*u integral
};

GorensteinData gorenstein_data(const ToricCone& cone);

/// sigma = cone(P x {ell}) in the coordinates given by `splitting`.
struct HeightPolytope {
  Polytope polytope;
  long long ell;
  UnimodularMap splitting;  ///< maps every ray v to (p, ell) with p a vertex of P
};

HeightPolytope height_polytope(const ToricCone& cone);

/// Rays of the dual cone (primitive facet normals of the cone).
ToricCone dual_cone(const ToricCone& cone);

/// d! vol({ m in dual cone : <xi, m> <= 1 }). Throws Unbounded unless xi is
/// in the interior of the cone.
Rational truncated_volume(const ToricCone& cone, const RatVector& xi);
Rational truncated_volume_with_dual(const ToricCone& dual, const RatVector& xi);

struct NormalizedVolumeResult {
  Real value;
  Real lower;
  Real upper;
  Rational exact_upper;     ///< ((d-1)!/ell) * dual_volume at the returned point
  RatVector minimizer_xi;   ///< in the original coordinates of N
  long long ell = 1;
  SantaloResult santalo;
  HeightPolytope height;
};

NormalizedVolumeResult normalized_volume(const ToricCone& cone, const SantaloOptions& options = {});

/// ((d-1)!/ell) vol(P^*): the truncated volume at xi_0 = (0, ell) in
/// height coordinates. Throws OriginNotInterior.
Rational weight_volume(const ToricCone& cone);

/// Brute-force minimization of truncated_volume on a refining rational grid
/// over conv{v_rho}, independent of the Santalo machinery.
struct GridMinimum {
  Rational value;
  RatVector xi;
  Rational final_spacing;
  Real discretization_bound;  ///< grid value minus true minimum never exceeds this
  int evaluations = 0;
};

GridMinimum grid_minimize_truncated_volume(const ToricCone& cone, int refinement_exponent = 10);

/// GL(d, Z) canonical key of the ray configuration.
std::string cone_key(const ToricCone& cone);

/// Rays form a lattice basis.
bool is_smooth(const ToricCone& cone);

}  // namespace toricvol
