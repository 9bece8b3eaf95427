#pragma once

#include <string>
#include <vector>

#include "toricvol/polytope.hpp"
#include "toricvol/toric.hpp"

namespace toricvol {

/// Split of n+2 points into two parts whose hulls meet.
struct RadonPartition {
  std::vector<std::size_t> part_a;  ///< the smaller part (ties: the part holding index 0)
  std::vector<std::size_t> part_b;
  RatVector radon_point;
  int p = 0;  ///< |part_a| - 1
  int q = 0;  ///< |part_b| - 1
};

/// One checked inequality lhs (<|<=) rhs.
struct BoundReport {
  std::string name;
  Real lhs;
  Real rhs;
  bool holds = false;
  bool strict = false;
  bool equality_within_tol = false;
  /// Reported for reference only; never counted as a violation.
  bool informational = false;
  std::string notes;
};

struct BoundOptions {
  double equality_tol = 1e-7;  ///< relative
  SantaloOptions santalo;
};

/// lhs < rhs (strict) or lhs <= rhs + tol * max(1, |rhs|).
BoundReport make_report(std::string name, const Real& lhs, const Real& rhs, bool strict,
                        double tol, std::string notes = {});
/// Exact comparison; equality means lhs == rhs.
BoundReport make_exact_report(std::string name, const Rational& lhs, const Rational& rhs,
                              bool strict, std::string notes = {});

/// All partitions of n+2 points spanning R^n whose hulls intersect.
/// Throws WrongCount or DegenerateSpan.
std::vector<RadonPartition> radon_partitions(const std::vector<RatVector>& points);
int minimal_p(const std::vector<RatVector>& points);

/// [lower bound on vol(P) from the minimal partition, upper bound on the
/// dual volume at the Santalo point].
std::vector<BoundReport> partition_volume_bounds(const std::vector<RatVector>& points,
                                                 const BoundOptions& options = {});

/// (p+1)^p (q+1)^(q+1) / (p! q!) <= 2 n^(n+1) / n! with n = p + q.
BoundReport check_partition_inequality(int p, int q);

/// [barycentric Mahler volume <= omega_n^2, Santalo Mahler volume <= omega_n^2].
std::vector<BoundReport> verify_blaschke_santalo(const Polytope& p, const BoundOptions& options = {});

/// Printed and proof-consistent volume/index bounds (four reports).
std::vector<BoundReport> verify_volume_index_bounds(const ToricCone& cone,
                                                    const BoundOptions& options = {});
std::vector<BoundReport> verify_volume_index_bounds(const ToricCone& cone,
                                                    const NormalizedVolumeResult& nv,
                                                    const BoundOptions& options = {});

/// vol^ <= 2 (d-1)^d, with equality reserved for the A1 normal forms.
BoundReport verify_rdp_bound(const ToricCone& cone, const BoundOptions& options = {});
BoundReport verify_rdp_bound(const ToricCone& cone, const NormalizedVolumeResult& nv,
                             const BoundOptions& options = {});

/// Mahler volume of P at least that of the simplex.
BoundReport verify_mahler_conjecture(const Polytope& p, const BoundOptions& options = {});

/// Euler number used by the Euler characteristic reports:
/// ell * (d-1)! * vol(P), the lattice volume of the truncated cone.
Integer euler_characteristic(const ToricCone& cone);
Integer euler_characteristic(const HeightPolytope& height);

/// [vol^ * chi >= d^d, crepant upper bound (proof-consistent),
///  crepant upper bound (printed constant, informational)].
std::vector<BoundReport> euler_bound_report(const ToricCone& cone, const BoundOptions& options = {});
std::vector<BoundReport> euler_bound_report(const ToricCone& cone, const NormalizedVolumeResult& nv,
                                            const BoundOptions& options = {});

/// True when ell = 1 and the origin of the height coordinates is interior to P.
bool c1_bound_defined(const ToricCone& cone);

/// vol^ <= weight volume; equality flag set when the Santalo point is the
/// origin. Throws OriginNotInterior, or InvalidArgument when ell != 1.
BoundReport verify_c1_bound(const ToricCone& cone, const BoundOptions& options = {});
BoundReport verify_c1_bound(const ToricCone& cone, const NormalizedVolumeResult& nv,
                            const BoundOptions& options = {});

/// True when no report is a non-informational violation.
bool all_hold(const std::vector<BoundReport>& reports);

}  // namespace toricvol
