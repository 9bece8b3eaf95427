#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>

#include "test_support.hpp"
#include "toricvol/bounds.hpp"
#include "toricvol/error.hpp"
#include "toricvol/lp.hpp"

using namespace toricvol;
using namespace toricvol::testing;

namespace {

ToricCone cone(std::vector<IntVector> rays) { return cone_from_rays(rays); }

ToricCone cone_over(const std::vector<RatVector>& pts, long long ell = 1) {
  std::vector<RatVector> rays;
  for (auto v : pts) {
    v.push_back(rat(ell));
    rays.push_back(v);
  }
  return cone_from_rays(rays);
}

const BoundReport& find(const std::vector<BoundReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::runtime_error("missing report " + name);
}

ToricCone quadric() { return cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}); }

std::vector<RatVector> pick(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx) {
  std::vector<RatVector> out;
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

}  // namespace

TEST(Radon, Square) {
  auto pts = points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto parts = radon_partitions(pts);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].part_a, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(parts[0].part_b, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(parts[0].radon_point, (RatVector{Q("1/2"), Q("1/2")}));
  EXPECT_EQ(parts[0].p, 1);
  EXPECT_EQ(parts[0].q, 1);
  EXPECT_EQ(minimal_p(pts), 1);
}

TEST(Radon, TriangleWithInteriorPoint) {
  auto pts = points({{0, 0}, {3, 0}, {0, 3}, {1, 1}});
  auto parts = radon_partitions(pts);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].part_a, (std::vector<std::size_t>{3}));
  EXPECT_EQ(parts[0].p, 0);
  EXPECT_EQ(parts[0].q, 2);
  EXPECT_EQ(parts[0].radon_point, V({1, 1}));
  EXPECT_EQ(minimal_p(pts), 0);
}

TEST(Radon, PyramidHasOneTwoPartition) {
  auto pts = iterated_pyramid(3);
  auto parts = radon_partitions(pts);
  bool found = false;
  for (const auto& p : parts)
    if (p.p == 1 && p.q == 2 && p.radon_point == RatVector{Q("1/2"), Q("1/2"), Q("0")}) found = true;
  EXPECT_TRUE(found);
  EXPECT_EQ(minimal_p(pts), 1);
}

TEST(Radon, Errors) {
  try {
    radon_partitions(points({{0, 0}, {1, 0}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongCount);
  }
  try {
    radon_partitions(points({{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSpan);
  }
}

TEST(Radon, WitnessesLieInBothHullsOnRandomConfigurations) {
  std::mt19937_64 rng(51);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      auto pts = random_lattice_points(rng, n, n + 2, 2);
      for (const auto& part : radon_partitions(pts)) {
        EXPECT_EQ(part.part_a.size() + part.part_b.size(), n + 2);
        EXPECT_EQ(part.p + part.q, static_cast<int>(n));
        EXPECT_LE(part.p, part.q);
        EXPECT_TRUE(in_convex_hull(pick(pts, part.part_a), part.radon_point));
        EXPECT_TRUE(in_convex_hull(pick(pts, part.part_b), part.radon_point));
      }
    }
}

TEST(Radon, LatticeVolumeAtLeastMinimalPPlusOne) {
  std::mt19937_64 rng(52);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      auto pts = random_lattice_points(rng, n, n + 2, 2);
      EXPECT_GE(lattice_volume(convex_hull(pts)), minimal_p(pts) + 1);
    }
}

TEST(PartitionBounds, UnitSquareIsEqualityCase) {
  auto rs = partition_volume_bounds(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_TRUE(rs[0].holds);
  EXPECT_TRUE(rs[0].equality_within_tol);
  EXPECT_EQ(rs[0].lhs, 1);
  EXPECT_TRUE(rs[1].holds);
  EXPECT_EQ(rs[1].lhs, 8);
  EXPECT_EQ(rs[1].rhs, 8);
  EXPECT_TRUE(rs[1].equality_within_tol);
}

TEST(PartitionBounds, TriangleWithInteriorPoint) {
  auto rs = partition_volume_bounds(points({{0, 0}, {3, 0}, {0, 3}, {1, 1}}));
  EXPECT_EQ(rs[0].lhs, Real(1) / 2);
  EXPECT_TRUE(rs[0].holds);
  EXPECT_TRUE(rs[1].informational);
}

TEST(PartitionBounds, PyramidIsStrict) {
  auto rs = partition_volume_bounds(iterated_pyramid(3));
  EXPECT_EQ(rs[1].rhs, 27);
  EXPECT_TRUE(rs[1].holds);
  EXPECT_FALSE(rs[1].equality_within_tol);
  EXPECT_LT(abs(rs[1].lhs - Real(2048) / 81), Real("1e-9"));
}

TEST(PartitionInequality, Examples) {
  auto a = check_partition_inequality(1, 1);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(a.equality_within_tol);
  EXPECT_EQ(a.lhs, 8);
  auto b = check_partition_inequality(2, 1);
  EXPECT_EQ(b.lhs, 18);
  EXPECT_EQ(b.rhs, 27);
  EXPECT_FALSE(b.equality_within_tol);
  EXPECT_TRUE(check_partition_inequality(2, 2).holds);
  EXPECT_FALSE(check_partition_inequality(2, 2).equality_within_tol);
}

TEST(PartitionInequality, AllSmallCasesEqualityExactlyAtPOne) {
  for (int n = 2; n <= 12; ++n)
    for (int p = 1; p < n; ++p) {
      auto r = check_partition_inequality(p, n - p);
      EXPECT_TRUE(r.holds) << p << "," << n - p;
      EXPECT_EQ(r.equality_within_tol, p == 1) << p << "," << n - p;
    }
}

TEST(BlaschkeSantalo, Examples) {
  const Real pi2 = boost::math::constants::pi<Real>() * boost::math::constants::pi<Real>();
  auto sq = verify_blaschke_santalo(convex_hull(points({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}})));
  EXPECT_EQ(sq[0].lhs, 8);
  EXPECT_EQ(sq[0].rhs, pi2);
  EXPECT_TRUE(all_hold(sq));
  auto simplex = verify_blaschke_santalo(convex_hull(standard_simplex(2)));
  EXPECT_EQ(simplex[0].lhs, Real(27) / 4);
  EXPECT_TRUE(all_hold(simplex));
  auto seg = verify_blaschke_santalo(convex_hull(points({{-1}, {1}})));
  EXPECT_EQ(seg[0].lhs, 4);
  EXPECT_TRUE(seg[0].holds);
  EXPECT_TRUE(seg[0].equality_within_tol);
}

TEST(VolumeIndexBounds, QuadricPrintedFailsProofConsistentHolds) {
  auto rs = verify_volume_index_bounds(quadric());
  ASSERT_EQ(rs.size(), 4u);
  const Real pi2 = boost::math::constants::pi<Real>() * boost::math::constants::pi<Real>();
  const auto& printed = find(rs, "volume_bound_printed");
  EXPECT_FALSE(printed.holds);
  EXPECT_TRUE(printed.informational);
  EXPECT_LT(abs(printed.rhs - pi2 / 48), Real("1e-40"));
  const auto& fixed = find(rs, "volume_bound");
  EXPECT_TRUE(fixed.holds);
  EXPECT_TRUE(fixed.strict);
  EXPECT_LT(abs(fixed.rhs - 2 * pi2 / 16), Real("1e-40"));
  EXPECT_TRUE(all_hold(rs));
}

TEST(VolumeIndexBounds, SurfaceBoundaryCases) {
  auto a1 = verify_volume_index_bounds(cone({{1, 0}, {1, 2}}));
  const auto& v = find(a1, "volume_bound");
  EXPECT_EQ(v.lhs, 2);
  EXPECT_TRUE(v.equality_within_tol);
  EXPECT_FALSE(v.strict);
  EXPECT_TRUE(v.holds);
  auto third = verify_volume_index_bounds(cone({{1, 0}, {-1, 3}}));
  const auto& idx = find(third, "index_bound");
  EXPECT_EQ(idx.lhs, 3);
  EXPECT_TRUE(idx.equality_within_tol);
  EXPECT_TRUE(all_hold(third));
}

TEST(RdpBound, Examples) {
  auto a1 = verify_rdp_bound(cone({{1, 0}, {1, 2}}));
  EXPECT_TRUE(a1.holds);
  EXPECT_TRUE(a1.equality_within_tol);
  auto q = verify_rdp_bound(quadric());
  EXPECT_TRUE(q.holds);
  EXPECT_TRUE(q.equality_within_tol);
  EXPECT_EQ(q.lhs, 16);
  std::vector<RatVector> cube;
  for (long a : {0, 1})
    for (long b : {0, 1})
      for (long c : {0, 1}) cube.push_back(V({a, b, c}));
  auto c4 = verify_rdp_bound(cone_over(cube));
  EXPECT_EQ(c4.lhs, 64);
  EXPECT_EQ(c4.rhs, 162);
  EXPECT_TRUE(c4.holds);
  EXPECT_FALSE(c4.equality_within_tol);
}

TEST(RdpBound, SmoothPointNotApplicable) {
  auto r = verify_rdp_bound(cone({{1, 0}, {0, 1}}));
  EXPECT_TRUE(r.informational);
  EXPECT_TRUE(r.holds);
}

TEST(MahlerConjecture, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = verify_mahler_conjecture(convex_hull(standard_simplex(n)));
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.equality_within_tol);
  }
  auto sq = verify_mahler_conjecture(convex_hull(points({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  EXPECT_EQ(sq.rhs, 8);
  EXPECT_EQ(sq.lhs, Real(27) / 4);
  EXPECT_TRUE(sq.holds);
}

TEST(MahlerConjecture, RandomPolygonsHold) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = convex_hull(random_lattice_points(rng, 2, 3 + trial % 8, 4));
    EXPECT_TRUE(verify_mahler_conjecture(p).holds);
  }
}

TEST(EulerBound, Examples) {
  auto a1 = euler_bound_report(cone({{1, 0}, {1, 2}}));
  EXPECT_EQ(euler_characteristic(cone({{1, 0}, {1, 2}})), 2);
  EXPECT_TRUE(find(a1, "euler_lower").equality_within_tol);
  EXPECT_EQ(find(a1, "euler_lower").rhs, 4);
  auto q = euler_bound_report(quadric());
  EXPECT_EQ(euler_characteristic(quadric()), 2);
  EXPECT_EQ(find(q, "euler_lower").rhs, 32);
  EXPECT_TRUE(all_hold(q));
  EXPECT_FALSE(find(q, "euler_upper_printed").holds);
  auto third = euler_bound_report(cone({{1, 0}, {-1, 3}}));
  EXPECT_EQ(euler_characteristic(cone({{1, 0}, {-1, 3}})), 3);
  EXPECT_EQ(find(third, "euler_lower").rhs, 4);
  EXPECT_TRUE(find(third, "euler_lower").equality_within_tol);
}

TEST(EulerBound, AkSurfacesAttainEquality) {
  for (long k = 1; k <= 10; ++k) {
    auto c = cone({{0, 1}, {k, 1}});
    EXPECT_EQ(euler_characteristic(c), k);
    const auto& r = find(euler_bound_report(c), "euler_lower");
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.equality_within_tol);
  }
}

TEST(C1Bound, Examples) {
  auto cross = verify_c1_bound(cone_over(points({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
  EXPECT_EQ(cross.lhs, 8);
  EXPECT_EQ(cross.rhs, 8);
  EXPECT_TRUE(cross.holds);
  EXPECT_TRUE(cross.equality_within_tol);
  auto refl = verify_c1_bound(cone_over(points({{-1, -1}, {2, -1}, {-1, 2}})));
  EXPECT_TRUE(refl.holds);
  EXPECT_TRUE(refl.equality_within_tol);
  auto off = verify_c1_bound(cone_over(points({{-1, -1}, {3, -1}, {-1, 1}})));
  EXPECT_TRUE(off.holds);
  EXPECT_FALSE(off.equality_within_tol);
  EXPECT_LT(off.lhs, off.rhs);
}

TEST(C1Bound, OriginOnBoundaryRejected) {
  EXPECT_FALSE(c1_bound_defined(cone_over(standard_simplex(2))));
  try {
    verify_c1_bound(cone_over(standard_simplex(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OriginNotInterior);
  }
}

TEST(C1Bound, HoldsOnRandomReflexiveStyleCones) {
  std::mt19937_64 rng(54);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    auto pts = random_lattice_points(rng, 2, 5, 2);
    auto c = cone_over(convex_hull(pts).vertices());
    if (!c1_bound_defined(c)) continue;
    ++checked;
    EXPECT_TRUE(verify_c1_bound(c).holds);
  }
  EXPECT_GT(checked, 5);
}
