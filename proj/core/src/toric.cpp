#include "toricvol/toric.hpp"

#include <algorithm>
#include <map>

#include "toricvol/error.hpp"
#include "toricvol/lp.hpp"
#include "toricvol/normal_form.hpp"

namespace toricvol {

namespace {

Rational factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return Rational(f);
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Unimodular U whose last row is the primitive integer vector h.
IntMatrix complete_to_unimodular(const IntVector& h) {
  const std::size_t d = h.size();
  IntMatrix w(d, IntVector(d, 0));
  for (std::size_t i = 0; i < d; ++i) w[i][i] = 1;
  IntVector r = h;
  auto col_axpy = [&](std::size_t target, std::size_t source, long long q) {
    r[target] -= q * r[source];
    for (std::size_t i = 0; i < d; ++i) w[i][target] -= q * w[i][source];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    std::swap(r[a], r[b]);
    for (std::size_t i = 0; i < d; ++i) std::swap(w[i][a], w[i][b]);
  };
  const std::size_t last = d - 1;
  for (std::size_t i = 0; i < last; ++i) {
    while (r[i] != 0) {
      col_axpy(last, i, r[last] / r[i]);
      col_swap(i, last);
    }
  }
  if (r[last] == -1) {
    r[last] = 1;
    for (std::size_t i = 0; i < d; ++i) w[i][last] = -w[i][last];
  }
  if (r[last] != 1) throw Error(ErrorCode::InvalidArgument, "height functional is not primitive");
  // h W = e_d, hence W^{-1} has last row h.
  return UnimodularMap(w, zeros(d)).inverse().matrix();
}

}  // namespace

ToricCone::ToricCone(std::size_t dim, std::vector<RatVector> rays, std::string label,
                     std::vector<std::string> warnings)
    : dim_(dim), rays_(std::move(rays)), label_(std::move(label)), warnings_(std::move(warnings)) {
  for (const auto& r : rays_)
    if (r.size() != dim_) throw Error(ErrorCode::InvalidArgument, "ray dimension mismatch");
}

ToricCone cone_from_rays(const std::vector<RatVector>& input, std::string label) {
  if (input.empty()) throw Error(ErrorCode::InvalidArgument, "a cone needs at least one ray");
  const std::size_t d = input[0].size();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero-dimensional rays");

  std::vector<RatVector> rays;
  for (const auto& v : input) {
    if (v.size() != d) throw Error(ErrorCode::InvalidArgument, "rays of mixed dimension");
    if (!is_integral(v)) throw Error(ErrorCode::NotLattice, "ray " + to_string(v) + " is not integral");
    if (is_zero(v)) throw Error(ErrorCode::InvalidArgument, "zero ray");
    RatVector prim = primitive_integer(v);
    if (std::find(rays.begin(), rays.end(), prim) == rays.end()) rays.push_back(std::move(prim));
  }

  // Pointed iff no nonnegative nonzero combination of rays vanishes.
  {
    RatMatrix a(d + 1, zeros(rays.size()));
    RatVector b = zeros(d + 1);
    for (std::size_t j = 0; j < rays.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) a[i][j] = rays[j][i];
      a[d][j] = 1;
    }
    b[d] = 1;
    if (find_nonnegative_solution(a, b))
      throw Error(ErrorCode::NotPointed, "cone contains a line");
  }
  if (rank(rays) < d) throw Error(ErrorCode::NotFullDimensional, "rays do not span the ambient space");

  std::vector<RatVector> extremal;
  std::vector<std::string> warnings;
  for (std::size_t j = 0; j < rays.size(); ++j) {
    RatMatrix a(d, RatVector{});
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (k == j) continue;
      for (std::size_t i = 0; i < d; ++i) a[i].push_back(rays[k][i]);
    }
    bool redundant = rays.size() > 1 && find_nonnegative_solution(a, rays[j]).has_value();
    if (redundant)
      warnings.push_back("ray " + to_string(rays[j]) + " is not extremal; removed");
    else
      extremal.push_back(rays[j]);
  }
  return ToricCone(d, std::move(extremal), std::move(label), std::move(warnings));
}

ToricCone cone_from_rays(const std::vector<IntVector>& rays, std::string label) {
  std::vector<RatVector> r;
  r.reserve(rays.size());
  for (const auto& v : rays) r.push_back(to_rat(v));
  return cone_from_rays(r, std::move(label));
}

GorensteinData gorenstein_data(const ToricCone& cone) {
  RatVector ones(cone.rays().size(), Rational(1));
  auto sol = solve(cone.rays(), ones);
  if (sol.status == SolveStatus::Inconsistent)
    throw Error(ErrorCode::NotQGorenstein, "no u with <u, v> = 1 on every ray");
  if (sol.status == SolveStatus::Underdetermined)
    throw Error(ErrorCode::AmbiguousU, "rays do not determine u");
  Integer l = lcm_of_denominators(sol.x);
  if (!l.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "Gorenstein index too large");
  return {std::move(sol.x), l.get_si()};
}

HeightPolytope height_polytope(const ToricCone& cone) {
  const std::size_t d = cone.dim();
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "height polytope needs d >= 2");
  auto gd = gorenstein_data(cone);
  RatVector h = rat(gd.index) * gd.u;
  IntMatrix u = complete_to_unimodular(to_int(h));
  UnimodularMap split(std::move(u), zeros(d));

  std::vector<RatVector> pts;
  for (const auto& ray : cone.rays()) {
    RatVector img = split.apply(ray);
    if (img[d - 1] != rat(gd.index))
      throw Error(ErrorCode::InvalidArgument, "splitting does not place rays at height ell");
    img.pop_back();
    pts.push_back(std::move(img));
  }
  return {convex_hull(pts), gd.index, std::move(split)};
}

ToricCone dual_cone(const ToricCone& cone) {
  const std::size_t d = cone.dim();
  std::vector<RatVector> pts{zeros(d)};
  for (const auto& r : cone.rays()) pts.push_back(r);
  Polytope hull = convex_hull(pts);
  std::vector<RatVector> rays;
  for (const auto& f : hull.facets())
    if (f.offset == 0) rays.push_back(Rational(-1) * f.normal);
  std::sort(rays.begin(), rays.end(), lex_less);
  return ToricCone(d, std::move(rays), cone.label().empty() ? "" : cone.label() + "^dual");
}

Rational truncated_volume_with_dual(const ToricCone& dual, const RatVector& xi) {
  const std::size_t d = dual.dim();
  if (xi.size() != d) throw Error(ErrorCode::InvalidArgument, "xi dimension mismatch");
  std::vector<RatVector> pts{zeros(d)};
  for (const auto& w : dual.rays()) {
    Rational s = dot(w, xi);
    if (s <= 0)
      throw Error(ErrorCode::Unbounded, "xi " + to_string(xi) + " is not interior to the cone");
    pts.push_back((Rational(1) / s) * w);
  }
  return volume(convex_hull(pts)) * factorial(d);
}

Rational truncated_volume(const ToricCone& cone, const RatVector& xi) {
  return truncated_volume_with_dual(dual_cone(cone), xi);
}

NormalizedVolumeResult normalized_volume(const ToricCone& cone, const SantaloOptions& options) {
  NormalizedVolumeResult r;
  r.height = height_polytope(cone);
  r.ell = r.height.ell;
  const std::size_t n = r.height.polytope.dim();
  r.santalo = santalo_point(r.height.polytope, options);

  RatVector lifted = r.santalo.point;
  lifted.push_back(rat(r.ell));
  r.minimizer_xi = r.height.splitting.inverse().apply(lifted);

  r.exact_upper = factorial(n) / rat(r.ell) * r.santalo.dual_volume;
  r.value = to_real(r.exact_upper);
  r.upper = r.value;
  if (r.santalo.exact) {
    r.lower = r.value;
  } else {
    r.lower = r.value * (1 - bracket_constant(r.height.polytope, r.santalo.point) * r.santalo.residual);
  }
  return r;
}

Rational weight_volume(const ToricCone& cone) {
  auto hp = height_polytope(cone);
  const auto& p = hp.polytope;
  if (!p.contains_in_interior(zeros(p.dim())))
    throw Error(ErrorCode::OriginNotInterior, "origin is not interior to the height polytope");
  return factorial(p.dim()) / rat(hp.ell) * volume(polar_dual(p));
}

GridMinimum grid_minimize_truncated_volume(const ToricCone& cone, int refinement_exponent) {
  const auto hp = height_polytope(cone);
  const auto dual = dual_cone(cone);
  const auto back = hp.splitting.inverse();
  const auto& p = hp.polytope;
  const std::size_t n = p.dim();

  Real diameter = 0;
  for (const auto& a : p.vertices())
    for (const auto& b : p.vertices()) diameter = std::max(diameter, distance(a, b));
  const Real target = diameter / Real(1ULL << refinement_exponent);

  RatVector lo = p.vertices()[0], hi = lo;
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  Rational side = 0;
  for (std::size_t i = 0; i < n; ++i) side = std::max(side, Rational(hi[i] - lo[i]));

  GridMinimum g;
  std::map<RatVector, Rational> cache;
  auto evaluate = [&](const RatVector& chi) -> std::optional<Rational> {
    if (!p.contains_in_interior(chi)) return std::nullopt;
    if (auto it = cache.find(chi); it != cache.end()) return it->second;
    RatVector lifted = chi;
    lifted.push_back(rat(hp.ell));
    Rational v = truncated_volume_with_dual(dual, back.apply(lifted));
    ++g.evaluations;
    cache.emplace(chi, v);
    return v;
  };

  // Scan points center + k * spacing for |k_i| <= radius.
  auto scan = [&](const RatVector& center, const Rational& spacing, int radius, RatVector& best,
                  std::optional<Rational>& best_value) {
    std::vector<int> k(n, -radius);
    while (true) {
      RatVector x = center;
      for (std::size_t i = 0; i < n; ++i) x[i] += rat(k[i]) * spacing;
      if (auto v = evaluate(x); v && (!best_value || *v < *best_value)) {
        best_value = v;
        best = x;
      }
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (k[i] < radius) {
          ++k[i];
          break;
        }
        k[i] = -radius;
      }
      if (i == n) break;
    }
  };

  RatVector center = lo;
  Rational spacing = side / 16;
  for (std::size_t i = 0; i < n; ++i) center[i] = (lo[i] + hi[i]) / 2;
  RatVector best;
  std::optional<Rational> best_value;
  scan(center, spacing, 8, best, best_value);
  if (!best_value) throw Error(ErrorCode::InvalidArgument, "grid found no interior point");
  while (to_real(spacing) > target) {
    spacing /= 2;
    const RatVector window = best;
    scan(window, spacing, 4, best, best_value);
  }

  // Curvature from second differences at the final spacing; the trace
  // bounds the largest Hessian eigenvalue.
  Rational trace = 0;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector plus = best, minus = best;
    plus[i] += spacing;
    minus[i] -= spacing;
    auto fp = evaluate(plus), fm = evaluate(minus);
    if (fp && fm) trace += (*fp + *fm - 2 * *best_value) / (spacing * spacing);
  }
  const Real h = to_real(spacing);
  g.value = *best_value;
  g.xi = best;
  g.final_spacing = spacing;
  g.discretization_bound = 2 * to_real(trace) * Real(static_cast<unsigned>(n)) * h * h;
  return g;
}

std::string cone_key(const ToricCone& cone) {
  std::vector<IntVector> rays;
  for (const auto& r : cone.rays()) rays.push_back(to_int(r));
  return linear_normal_form(rays);
}

bool is_smooth(const ToricCone& cone) {
  if (cone.rays().size() != cone.dim()) return false;
  return abs(determinant(cone.rays())) == 1;
}

}  // namespace toricvol
