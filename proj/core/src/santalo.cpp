#include "toricvol/santalo.hpp"

#include <algorithm>

#include "toricvol/error.hpp"

namespace toricvol {

namespace {

Rational factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return Rational(f);
}

RatVector vertex_mean(const Polytope& p) {
  RatVector c = zeros(p.dim());
  for (const auto& v : p.vertices()) c = c + v;
  return Rational(1, static_cast<unsigned long>(p.vertices().size())) * c;
}

// Solves H x = b by Cholesky; false when H is not positive definite.
bool cholesky_solve(std::vector<std::vector<Real>> h, std::vector<Real> b, std::vector<Real>& x) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j < n; ++j) {
    Real d = h[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= h[j][k] * h[j][k];
    if (!(d > 0)) return false;
    h[j][j] = boost::multiprecision::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      Real s = h[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= h[i][k] * h[j][k];
      h[i][j] = s / h[j][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) b[i] -= h[i][k] * b[k];
    b[i] /= h[i][i];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k < n; ++k) b[i] -= h[k][i] * b[k];
    b[i] /= h[i][i];
  }
  x = std::move(b);
  return true;
}

}  // namespace

DualVolumeEvaluator::DualVolumeEvaluator(const Polytope& p) : dim_(p.dim()), facets_(p.facets()) {
  const RatVector inside = vertex_mean(p);
  std::vector<RatVector> dual_points;
  dual_points.reserve(facets_.size());
  for (const auto& f : facets_) dual_points.push_back(Rational(1) / f.slack(inside) * f.normal);

  std::vector<std::vector<std::size_t>> dual_facets(p.vertices().size());
  for (std::size_t f = 0; f < p.facet_vertices().size(); ++f)
    for (auto v : p.facet_vertices()[f]) dual_facets[v].push_back(f);

  const Rational inv_fact = Rational(1) / factorial(dim_);
  for (const auto& face : dual_facets) {
    for (auto& simplex : triangulate_face(dual_points, dual_facets, face, static_cast<int>(dim_) - 1)) {
      RatMatrix normals;
      for (auto f : simplex) normals.push_back(facets_[f].normal);
      Rational w = abs(determinant(std::move(normals))) * inv_fact;
      cells_.push_back({std::move(simplex), std::move(w)});
    }
  }
}

std::vector<Rational> DualVolumeEvaluator::slacks(const RatVector& x) const {
  std::vector<Rational> h;
  h.reserve(facets_.size());
  for (const auto& f : facets_) {
    Rational s = f.slack(x);
    if (s <= 0) throw Error(ErrorCode::OriginNotInterior, "point " + to_string(x) + " is not interior");
    h.push_back(std::move(s));
  }
  return h;
}

bool DualVolumeEvaluator::is_interior(const RatVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& f) { return f.slack(x) > 0; });
}

Rational DualVolumeEvaluator::value(const RatVector& x) const {
  const auto h = slacks(x);
  Rational total = 0;
  for (const auto& cell : cells_) {
    Rational prod = 1;
    for (auto f : cell.facets) prod *= h[f];
    total += cell.weight / prod;
  }
  return total;
}

RatVector DualVolumeEvaluator::gradient(const RatVector& x) const {
  const auto h = slacks(x);
  std::vector<RatVector> scaled(facets_.size());
  for (std::size_t f = 0; f < facets_.size(); ++f) scaled[f] = (Rational(1) / h[f]) * facets_[f].normal;
  RatVector g = zeros(dim_);
  for (const auto& cell : cells_) {
    Rational prod = 1;
    RatVector dir = zeros(dim_);
    for (auto f : cell.facets) {
      prod *= h[f];
      dir = dir + scaled[f];
    }
    g = g + (cell.weight / prod) * dir;
  }
  return g;
}

RatVector DualVolumeEvaluator::dual_barycenter(const RatVector& x) const {
  return (Rational(1) / (Rational(static_cast<unsigned long>(dim_ + 1)) * value(x))) * gradient(x);
}

std::vector<std::vector<Real>> DualVolumeEvaluator::hessian(const RatVector& x) const {
  const auto h = slacks(x);
  const std::size_t n = dim_;
  std::vector<std::vector<Real>> scaled(facets_.size(), std::vector<Real>(n));
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    Real inv = 1 / to_real(h[f]);
    for (std::size_t i = 0; i < n; ++i) scaled[f][i] = to_real(facets_[f].normal[i]) * inv;
  }
  std::vector<std::vector<Real>> hess(n, std::vector<Real>(n, Real(0)));
  for (const auto& cell : cells_) {
    Real prod = 1;
    for (auto f : cell.facets) prod *= to_real(h[f]);
    Real vol = to_real(cell.weight) / prod;
    std::vector<Real> dir(n, Real(0));
    for (auto f : cell.facets)
      for (std::size_t i = 0; i < n; ++i) dir[i] += scaled[f][i];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Real diag = 0;
        for (auto f : cell.facets) diag += scaled[f][i] * scaled[f][j];
        hess[i][j] += vol * (dir[i] * dir[j] + diag);
      }
    }
  }
  return hess;
}

Rational polar_volume_at(const Polytope& p, const RatVector& x) {
  if (!p.contains_in_interior(x))
    throw Error(ErrorCode::OriginNotInterior, "point " + to_string(x) + " is not interior");
  RatVector neg = Rational(-1) * x;
  return volume(polar_dual(translate(p, neg)));
}

RatVector polar_volume_gradient(const Polytope& p, const RatVector& x) {
  return DualVolumeEvaluator(p).gradient(x);
}

std::optional<RatVector> symmetry_center(const Polytope& p) {
  RatVector c = vertex_mean(p);
  const auto& vs = p.vertices();
  for (const auto& v : vs) {
    RatVector mirror = Rational(2) * c - v;
    if (!std::binary_search(vs.begin(), vs.end(), mirror,
                            [](const RatVector& a, const RatVector& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                            }))
      return std::nullopt;
  }
  return c;
}

SantaloResult santalo_point(const Polytope& p, const SantaloOptions& options) {
  if (!(options.tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const std::size_t n = p.dim();
  const DualVolumeEvaluator eval(p);
  const Rational vol = volume(p);

  auto finish = [&](RatVector x, int iterations, bool exact) {
    SantaloResult r;
    r.dual_volume = eval.value(x);
    r.residual = exact ? Real(0) : norm(eval.dual_barycenter(x));
    r.mahler = to_real(vol * r.dual_volume);
    r.point = std::move(x);
    r.iterations = iterations;
    r.exact = exact;
    return r;
  };

  if (!options.start) {
    if (auto c = symmetry_center(p)) return finish(*c, 0, true);
    if (p.is_simplex()) return finish(vertex_mean(p), 0, true);
  }

  RatVector x = options.start ? *options.start : barycenter(p);
  if (x.size() != n) throw Error(ErrorCode::InvalidArgument, "start point dimension mismatch");
  if (!eval.is_interior(x))
    throw Error(ErrorCode::OriginNotInterior, "start point " + to_string(x) + " is not interior");

  const Real armijo = Real("1e-4");
  const Real min_step = Real("1e-40");
  for (int it = 0; it < options.max_iterations; ++it) {
    Rational f = eval.value(x);
    RatVector g = eval.gradient(x);
    Real residual = norm(g) / (Real(static_cast<unsigned>(n + 1)) * to_real(f));
    if (residual <= Real(options.tol)) return finish(std::move(x), it, is_zero(g));

    std::vector<Real> grad(n), step;
    for (std::size_t i = 0; i < n; ++i) grad[i] = to_real(g[i]);
    std::vector<Real> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -grad[i];
    if (!cholesky_solve(eval.hessian(x), rhs, step)) step = rhs;

    Real slope = 0;
    for (std::size_t i = 0; i < n; ++i) slope += grad[i] * step[i];
    const Real f_real = to_real(f);

    bool moved = false;
    for (Real t = 1; t >= min_step; t /= 2) {
      RatVector trial(n);
      for (std::size_t i = 0; i < n; ++i) trial[i] = round_dyadic(to_real(x[i]) + t * step[i]);
      if (trial == x) break;
      if (!eval.is_interior(trial)) continue;
      Rational ft = eval.value(trial);
      if (to_real(ft) <= f_real + armijo * t * slope || ft < f) {
        x = std::move(trial);
        moved = true;
        break;
      }
    }
    if (!moved) {
      throw Error(ErrorCode::ToleranceNotReached,
                  "line search stalled at residual " + residual.str(6) + " after " +
                      std::to_string(it) + " iterations");
    }
  }
  throw Error(ErrorCode::ToleranceNotReached,
              "iteration cap " + std::to_string(options.max_iterations) + " reached");
}

Real bracket_constant(const Polytope& p, const RatVector& point) {
  std::vector<std::vector<Real>> verts;
  for (const auto& f : p.facets()) {
    Real inv = 1 / to_real(f.slack(point));
    std::vector<Real> w;
    for (const auto& a : f.normal) w.push_back(to_real(a) * inv);
    verts.push_back(std::move(w));
  }
  Real diam = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Real s = 0;
      for (std::size_t k = 0; k < verts[i].size(); ++k) s += (verts[i][k] - verts[j][k]) * (verts[i][k] - verts[j][k]);
      diam = std::max(diam, Real(boost::multiprecision::sqrt(s)));
    }
  return Real(static_cast<unsigned>(p.dim())) * diam;
}

MahlerVolume mahler_volume(const Polytope& p, const SantaloOptions& options) {
  MahlerVolume m;
  m.santalo = santalo_point(p, options);
  m.value = m.santalo.mahler;
  m.upper = m.value;
  if (m.santalo.exact) {
    m.lower = m.value;
  } else {
    Real c = bracket_constant(p, m.santalo.point);
    m.lower = m.value * (1 - c * m.santalo.residual);
  }
  return m;
}

}  // namespace toricvol
