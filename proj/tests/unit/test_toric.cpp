#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "test_support.hpp"
#include "toricvol/error.hpp"
#include "toricvol/normal_form.hpp"
#include "toricvol/toric.hpp"

using namespace toricvol;
using namespace toricvol::testing;

namespace {

ToricCone cone(std::vector<IntVector> rays) { return cone_from_rays(rays); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

ToricCone cone_over(const std::vector<RatVector>& pts, long long ell = 1) {
  std::vector<RatVector> rays;
  for (auto v : pts) {
    v.push_back(rat(ell));
    rays.push_back(v);
  }
  return cone_from_rays(rays);
}

}  // namespace

TEST(Cone, ValidTwoRays) {
  auto c = cone({{1, 0}, {1, 2}});
  EXPECT_EQ(c.rays().size(), 2u);
  EXPECT_TRUE(c.warnings().empty());
}

TEST(Cone, NonExtremalRayDroppedWithWarning) {
  auto c = cone({{1, 0}, {1, 1}, {1, 2}});
  EXPECT_EQ(c.rays(), points({{1, 0}, {1, 2}}));
  ASSERT_EQ(c.warnings().size(), 1u);
  EXPECT_NE(c.warnings()[0].find("(1,1)"), std::string::npos);
}

TEST(Cone, Errors) {
  EXPECT_EQ(code_of([] { cone({{1, 0}, {-1, 0}}); }), ErrorCode::NotPointed);
  EXPECT_EQ(code_of([] { cone({{1, 0, 0}, {0, 1, 0}}); }), ErrorCode::NotFullDimensional);
  EXPECT_EQ(code_of([] { cone_from_rays(std::vector<RatVector>{{Q("1/2"), Q("1")}, {Q("0"), Q("1")}}); }),
            ErrorCode::NotLattice);
}

TEST(Gorenstein, Examples) {
  auto a1 = gorenstein_data(cone({{1, 0}, {1, 2}}));
  EXPECT_EQ(a1.u, V({1, 0}));
  EXPECT_EQ(a1.index, 1);
  auto third = gorenstein_data(cone({{1, 0}, {-1, 3}}));
  EXPECT_EQ(third.u, (RatVector{Q("1"), Q("2/3")}));
  EXPECT_EQ(third.index, 3);
  EXPECT_EQ(code_of([] { gorenstein_data(cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, -1}})); }),
            ErrorCode::NotQGorenstein);
}

TEST(HeightPolytope, Examples) {
  auto a1 = height_polytope(cone({{1, 0}, {1, 2}}));
  EXPECT_EQ(a1.ell, 1);
  EXPECT_EQ(lattice_volume(a1.polytope), 2);
  auto third = height_polytope(cone({{1, 0}, {-1, 3}}));
  EXPECT_EQ(third.ell, 3);
  EXPECT_EQ(lattice_volume(third.polytope), 1);
  auto quadric = height_polytope(cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(quadric.ell, 1);
  EXPECT_EQ(quadric.polytope.vertices(), points({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(HeightPolytope, SplittingSendsRaysToHeightEll) {
  std::mt19937_64 rng(41);
  IntMatrix a{{1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  ASSERT_EQ(std::llabs(integer_determinant(a)), 1);
  for (int trial = 0; trial < 20; ++trial) {
    const long long ell = 1 + trial % 3;
    Polytope base;
    auto primitive_lift = [&](const Polytope& q) {
      return std::all_of(q.vertices().begin(), q.vertices().end(), [&](const RatVector& v) {
        return std::gcd(std::gcd(to_int(v)[0], to_int(v)[1]), ell) == 1;
      });
    };
    do {
      base = convex_hull(random_lattice_points(rng, 2, 4, 2));
    } while (!primitive_lift(base));
    std::vector<IntVector> rays;
    for (const auto& v : base.vertices()) {
      IntVector r{to_int(v)[0], to_int(v)[1], ell};
      IntVector out(3, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += a[i][j] * r[j];
      rays.push_back(out);
    }
    auto c = cone(rays);
    auto hp = height_polytope(c);
    for (const auto& r : c.rays()) EXPECT_EQ(hp.splitting.apply(r).back(), rat(hp.ell));
    EXPECT_EQ(hp.polytope.vertices().size(), c.rays().size());
  }
}

TEST(DualCone, Examples) {
  auto d = dual_cone(cone({{1, 0}, {1, 2}}));
  std::vector<RatVector> rays = d.rays();
  std::sort(rays.begin(), rays.end());
  EXPECT_EQ(rays, points({{0, 1}, {2, -1}}));
  auto orthant = dual_cone(cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(orthant.rays(), points({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(DualCone, OverSquareIsConeOverCrossPolytope) {
  auto d = dual_cone(cone({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}));
  std::vector<RatVector> rays = d.rays();
  std::sort(rays.begin(), rays.end());
  EXPECT_EQ(rays, points({{-1, 0, 1}, {0, -1, 1}, {0, 1, 1}, {1, 0, 1}}));
}

TEST(TruncatedVolume, Examples) {
  EXPECT_EQ(truncated_volume(cone({{1, 0}, {1, 2}}), V({1, 1})), 2);
  EXPECT_EQ(truncated_volume(cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}),
                             RatVector{Q("1/2"), Q("1/2"), Q("1")}),
            16);
  EXPECT_EQ(code_of([] { truncated_volume(cone({{1, 0}, {1, 2}}), V({1, 0})); }), ErrorCode::Unbounded);
}

TEST(NormalizedVolume, ClosedForms) {
  EXPECT_EQ(normalized_volume(cone({{1, 0}, {1, 2}})).exact_upper, 2);
  EXPECT_EQ(normalized_volume(cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})).exact_upper, 16);
  auto third = normalized_volume(cone({{1, 0}, {-1, 3}}));
  EXPECT_EQ(third.exact_upper, Q("4/3"));
  EXPECT_EQ(third.ell, 3);
  for (long d = 2; d <= 5; ++d) {
    auto r = normalized_volume(cone_over(standard_simplex(static_cast<std::size_t>(d - 1))));
    EXPECT_TRUE(r.santalo.exact);
    EXPECT_EQ(r.exact_upper, Rational(ipow(d, d)));
  }
}

TEST(NormalizedVolume, MinimizerRealizesValue) {
  auto c = cone({{1, 0}, {-1, 3}});
  auto r = normalized_volume(c);
  EXPECT_EQ(truncated_volume(c, r.minimizer_xi), r.exact_upper);
}

TEST(NormalizedVolume, CyclicQuotientsAreFourOverK) {
  for (const auto& cq : cyclic_quotients(12)) {
    auto r = normalized_volume(cone({{1, 0}, {cq.a, cq.k}}));
    EXPECT_EQ(r.exact_upper, frac(4, cq.k)) << cq.k << " " << cq.a;
  }
}

TEST(NormalizedVolume, InvariantUnderLatticeAutomorphisms) {
  auto c = cone({{-1, -1, 1}, {3, -1, 1}, {-1, 1, 1}, {0, 1, 1}});
  IntMatrix a{{1, 1, 0}, {0, 1, 0}, {2, 3, 1}};
  std::vector<IntVector> mapped;
  for (const auto& r : c.rays()) {
    auto v = to_int(r);
    IntVector out(3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i] += a[i][j] * v[j];
    mapped.push_back(out);
  }
  auto c2 = cone(mapped);
  EXPECT_EQ(cone_key(c), cone_key(c2));
  EXPECT_LT(abs(normalized_volume(c).value - normalized_volume(c2).value), Real("1e-12"));
}

TEST(WeightVolume, Examples) {
  EXPECT_EQ(weight_volume(cone_over(points({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}))), 8);
  EXPECT_EQ(weight_volume(cone_over(points({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}))), 4);
  EXPECT_EQ(code_of([] { weight_volume(cone_over(standard_simplex(2))); }), ErrorCode::OriginNotInterior);
}

TEST(GridMinimum, BracketsNormalizedVolume) {
  for (auto c : {cone({{1, 0}, {-1, 3}}), cone({{-1, -1, 1}, {3, -1, 1}, {-1, 1, 1}, {0, 1, 1}}),
                 cone({{0, 0, 2}, {1, 0, 2}, {1, 3, 2}})}) {
    auto nv = normalized_volume(c);
    auto g = grid_minimize_truncated_volume(c);
    EXPECT_GE(to_real(g.value), nv.lower * (1 - Real("1e-12")));
    EXPECT_LE(to_real(g.value), nv.upper + g.discretization_bound);
  }
}

TEST(Smoothness, Detection) {
  EXPECT_TRUE(is_smooth(cone({{1, 0}, {0, 1}})));
  EXPECT_TRUE(is_smooth(cone({{1, 0}, {1, 1}})));
  EXPECT_FALSE(is_smooth(cone({{1, 0}, {1, 2}})));
  EXPECT_FALSE(is_smooth(cone({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})));
}
