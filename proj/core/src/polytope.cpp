#include "toricvol/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/math/constants/constants.hpp>

#include "toricvol/error.hpp"

namespace toricvol {

namespace {

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool facet_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

// Oriented hyperplane through `pts` (affine dimension n-1) with `inside`
// strictly on the <= side.
Halfspace hyperplane_through(const std::vector<RatVector>& pts, const RatVector& inside) {
  const std::size_t n = inside.size();
  RatMatrix rows;
  rows.reserve(pts.size());
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
  auto basis = nullspace(rows, n);
  Halfspace h;
  h.normal = primitive_integer(basis.at(0));
  h.offset = dot(h.normal, pts[0]);
  if (dot(h.normal, inside) > h.offset) {
    for (auto& c : h.normal) c = -c;
    h.offset = -h.offset;
  }
  return h;
}

Polytope hull_1d(const std::vector<RatVector>& pts) {
  auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                      [](const RatVector& a, const RatVector& b) { return a[0] < b[0]; });
  if ((*lo)[0] == (*hi)[0]) throw Error(ErrorCode::DegenerateInput, "points do not span a segment");
  std::vector<Halfspace> facets{{RatVector{Rational(1)}, (*hi)[0]}, {RatVector{Rational(-1)}, -(*lo)[0]}};
  return Polytope::from_vh(1, {*lo, *hi}, std::move(facets));
}

Rational cross(const RatVector& o, const RatVector& a, const RatVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; input sorted and unique.
Polytope hull_2d(const std::vector<RatVector>& pts) {
  std::vector<RatVector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k > 0 ? k - 1 : 0);
  if (h.size() < 3) throw Error(ErrorCode::DegenerateInput, "points are collinear");
  std::vector<Halfspace> facets;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    RatVector normal = primitive_integer(RatVector{b[1] - a[1], a[0] - b[0]});
    facets.push_back({normal, dot(normal, a)});
  }
  return Polytope::from_vh(2, std::move(h), std::move(facets));
}

struct WorkFacet {
  Halfspace plane;
  std::vector<std::size_t> on;  // sorted indices of processed points on the plane
};

Polytope hull_incremental(const std::vector<RatVector>& pts) {
  const std::size_t n = pts[0].size();

  std::vector<std::size_t> simplex{0};
  {
    RatMatrix basis;
    for (std::size_t i = 1; i < pts.size() && simplex.size() < n + 1; ++i) {
      RatMatrix trial = basis;
      trial.push_back(pts[i] - pts[0]);
      if (rank(trial) == trial.size()) {
        basis = std::move(trial);
        simplex.push_back(i);
      }
    }
  }
  if (simplex.size() < n + 1)
    throw Error(ErrorCode::DegenerateInput, "points span a proper affine subspace");

  RatVector inside = zeros(n);
  for (auto i : simplex) inside = inside + pts[i];
  inside = Rational(1, static_cast<unsigned long>(n + 1)) * inside;

  std::vector<std::size_t> processed(simplex.begin(), simplex.end());
  std::sort(processed.begin(), processed.end());

  auto points_on = [&](const Halfspace& h) {
    std::vector<std::size_t> on;
    for (auto i : processed)
      if (dot(h.normal, pts[i]) == h.offset) on.push_back(i);
    return on;
  };
  auto gather = [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> g;
    g.reserve(idx.size());
    for (auto i : idx) g.push_back(pts[i]);
    return g;
  };

  std::vector<WorkFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<RatVector> face;
    for (std::size_t j = 0; j < simplex.size(); ++j)
      if (j != skip) face.push_back(pts[simplex[j]]);
    Halfspace h = hyperplane_through(face, inside);
    facets.push_back({h, points_on(h)});
  }

  std::vector<bool> in_simplex(pts.size(), false);
  for (auto i : simplex) in_simplex[i] = true;

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (in_simplex[p]) continue;
    std::vector<std::size_t> visible, hidden;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (dot(facets[f].plane.normal, pts[p]) > facets[f].plane.offset)
        visible.push_back(f);
      else
        hidden.push_back(f);
    }
    processed.insert(std::upper_bound(processed.begin(), processed.end(), p), p);

    if (visible.empty()) {
      for (auto& f : facets)
        if (dot(f.plane.normal, pts[p]) == f.plane.offset)
          f.on.insert(std::upper_bound(f.on.begin(), f.on.end(), p), p);
      continue;
    }

    std::vector<Halfspace> created;
    for (auto v : visible) {
      for (auto h : hidden) {
        std::vector<std::size_t> ridge;
        std::set_intersection(facets[v].on.begin(), facets[v].on.end(), facets[h].on.begin(),
                              facets[h].on.end(), std::back_inserter(ridge));
        if (static_cast<int>(ridge.size()) < static_cast<int>(n) - 1) continue;
        if (affine_dimension(gather(ridge)) != static_cast<int>(n) - 2) continue;
        if (dot(facets[h].plane.normal, pts[p]) == facets[h].plane.offset) continue;
        auto face = gather(ridge);
        face.push_back(pts[p]);
        Halfspace plane = hyperplane_through(face, inside);
        if (std::find(created.begin(), created.end(), plane) == created.end())
          created.push_back(std::move(plane));
      }
    }

    std::vector<WorkFacet> next;
    next.reserve(hidden.size() + created.size());
    for (auto h : hidden) {
      WorkFacet f = std::move(facets[h]);
      if (dot(f.plane.normal, pts[p]) == f.plane.offset)
        f.on.insert(std::upper_bound(f.on.begin(), f.on.end(), p), p);
      next.push_back(std::move(f));
    }
    for (auto& plane : created) {
      auto on = points_on(plane);
      next.push_back({std::move(plane), std::move(on)});
    }
    facets = std::move(next);
  }

  std::vector<RatVector> vertices;
  for (auto i : processed) {
    RatMatrix normals;
    for (const auto& f : facets)
      if (std::binary_search(f.on.begin(), f.on.end(), i)) normals.push_back(f.plane.normal);
    if (normals.size() >= n && rank(normals) == n) vertices.push_back(pts[i]);
  }
  std::vector<Halfspace> planes;
  planes.reserve(facets.size());
  for (auto& f : facets) planes.push_back(std::move(f.plane));
  return Polytope::from_vh(n, std::move(vertices), std::move(planes));
}

}  // namespace

Polytope Polytope::from_vh(std::size_t dim, std::vector<RatVector> vertices,
                           std::vector<Halfspace> facets) {
  Polytope p;
  p.dim_ = dim;
  std::sort(vertices.begin(), vertices.end(), lex_less);
  std::sort(facets.begin(), facets.end(), facet_less);
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  p.facet_vertices_.resize(p.facets_.size());
  for (std::size_t f = 0; f < p.facets_.size(); ++f)
    for (std::size_t v = 0; v < p.vertices_.size(); ++v)
      if (p.facets_[f].slack(p.vertices_[v]) == 0) p.facet_vertices_[f].push_back(v);
  p.is_lattice_ = std::all_of(p.vertices_.begin(), p.vertices_.end(),
                              [](const RatVector& v) { return is_integral(v); });
  return p;
}

bool Polytope::contains(const RatVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.slack(x) >= 0; });
}

bool Polytope::contains_in_interior(const RatVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& h) { return h.slack(x) > 0; });
}

long long integer_determinant(const IntMatrix& m) {
  RatMatrix r;
  for (const auto& row : m) r.push_back(to_rat(row));
  Rational d = determinant(r);
  return d.get_num().get_si();
}

UnimodularMap::UnimodularMap(IntMatrix matrix, RatVector shift)
    : matrix_(std::move(matrix)), shift_(std::move(shift)) {
  const std::size_t n = matrix_.size();
  for (const auto& row : matrix_)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "unimodular matrix must be square");
  if (shift_.size() != n) throw Error(ErrorCode::InvalidArgument, "shift dimension mismatch");
  auto det = integer_determinant(matrix_);
  if (det != 1 && det != -1)
    throw Error(ErrorCode::InvalidArgument, "matrix determinant is " + std::to_string(det) + ", not +-1");
}

UnimodularMap UnimodularMap::identity(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return UnimodularMap(std::move(m), zeros(n));
}

RatVector UnimodularMap::apply(const RatVector& x) const {
  RatVector y = shift_;
  for (std::size_t i = 0; i < matrix_.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += Rational(static_cast<long>(matrix_[i][j])) * x[j];
  return y;
}

UnimodularMap UnimodularMap::inverse() const {
  RatMatrix m;
  for (const auto& row : matrix_) m.push_back(to_rat(row));
  RatMatrix inv = toricvol::inverse(m);
  IntMatrix imat;
  for (const auto& row : inv) imat.push_back(to_int(row));
  RatVector s = zeros(shift_.size());
  for (std::size_t i = 0; i < inv.size(); ++i) s[i] = -dot(inv[i], shift_);
  return UnimodularMap(std::move(imat), std::move(s));
}

Polytope convex_hull(std::span<const RatVector> points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "no points");
  const std::size_t n = points[0].size();
  if (n == 0) throw Error(ErrorCode::DegenerateInput, "zero-dimensional ambient space");
  for (const auto& p : points)
    if (p.size() != n) throw Error(ErrorCode::InvalidArgument, "points of mixed dimension");
  std::vector<RatVector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < n + 1)
    throw Error(ErrorCode::DegenerateInput, "fewer than n+1 distinct points");
  if (n == 1) return hull_1d(pts);
  if (n == 2) return hull_2d(pts);
  return hull_incremental(pts);
}

Polytope polar_dual(const Polytope& p) {
  const std::size_t n = p.dim();
  std::vector<RatVector> vertices;
  vertices.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    if (f.offset <= 0)
      throw Error(ErrorCode::OriginNotInterior, "origin is not in the interior of the polytope");
    vertices.push_back(Rational(1) / f.offset * f.normal);
  }
  std::vector<Halfspace> facets;
  facets.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    RatVector normal = primitive_integer(v);
    Rational scale;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) {
        scale = normal[i] / v[i];
        break;
      }
    facets.push_back({std::move(normal), scale});
  }
  return Polytope::from_vh(n, std::move(vertices), std::move(facets));
}

Rational simplex_volume(std::span<const RatVector> vertices) {
  const std::size_t n = vertices.size() - 1;
  RatMatrix m;
  m.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) m.push_back(vertices[i] - vertices[0]);
  Rational d = abs(determinant(std::move(m)));
  Integer fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  return d / Rational(fact);
}

std::vector<std::vector<std::size_t>> triangulate_face(
    const std::vector<RatVector>& points, const std::vector<std::vector<std::size_t>>& facets,
    const std::vector<std::size_t>& face, int face_dim) {
  if (face.size() == static_cast<std::size_t>(face_dim) + 1) return {face};
  std::size_t apex = face[0];
  for (auto i : face)
    if (lex_less(points[i], points[apex])) apex = i;

  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& f : facets) {
    std::vector<std::size_t> g;
    std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(g));
    if (static_cast<int>(g.size()) < face_dim) continue;
    if (std::binary_search(g.begin(), g.end(), apex)) continue;
    if (g.size() == face.size()) continue;
    std::vector<RatVector> coords;
    for (auto i : g) coords.push_back(points[i]);
    if (affine_dimension(coords) == face_dim - 1) subfaces.insert(std::move(g));
  }

  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : subfaces) {
    for (auto& s : triangulate_face(points, facets, g, face_dim - 1)) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Triangulation triangulate(const Polytope& p) {
  std::vector<std::size_t> all(p.vertices().size());
  std::iota(all.begin(), all.end(), 0);
  return {triangulate_face(p.vertices(), p.facet_vertices(), all, static_cast<int>(p.dim()))};
}

Rational volume(const Polytope& p) {
  Rational total = 0;
  for (const auto& s : triangulate(p).simplices) {
    std::vector<RatVector> pts;
    for (auto i : s) pts.push_back(p.vertices()[i]);
    total += simplex_volume(pts);
  }
  return total;
}

Rational lattice_volume(const Polytope& p) {
  Integer fact = 1;
  for (std::size_t i = 2; i <= p.dim(); ++i) fact *= static_cast<unsigned long>(i);
  return volume(p) * Rational(fact);
}

RatVector barycenter(const Polytope& p) {
  const std::size_t n = p.dim();
  RatVector acc = zeros(n);
  Rational total = 0;
  for (const auto& s : triangulate(p).simplices) {
    std::vector<RatVector> pts;
    RatVector centroid = zeros(n);
    for (auto i : s) {
      pts.push_back(p.vertices()[i]);
      centroid = centroid + p.vertices()[i];
    }
    Rational vol = simplex_volume(pts);
    acc = acc + (vol / Rational(static_cast<unsigned long>(n + 1))) * centroid;
    total += vol;
  }
  return (Rational(1) / total) * acc;
}

Polytope apply_map(const Polytope& p, const UnimodularMap& t) {
  if (t.dim() != p.dim()) throw Error(ErrorCode::InvalidArgument, "map dimension mismatch");
  RatMatrix m;
  for (const auto& row : t.matrix()) m.push_back(to_rat(row));
  RatMatrix inv_t = transpose(inverse(m));
  std::vector<RatVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(t.apply(v));
  std::vector<Halfspace> facets;
  for (const auto& f : p.facets()) {
    RatVector normal(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) normal[i] = dot(inv_t[i], f.normal);
    Rational offset = f.offset + dot(normal, t.shift());
    facets.push_back({std::move(normal), std::move(offset)});
  }
  return Polytope::from_vh(p.dim(), std::move(vertices), std::move(facets));
}

Polytope translate(const Polytope& p, const RatVector& x) {
  if (x.size() != p.dim()) throw Error(ErrorCode::InvalidArgument, "translation dimension mismatch");
  std::vector<RatVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(v + x);
  std::vector<Halfspace> facets;
  for (const auto& f : p.facets()) facets.push_back({f.normal, f.offset + dot(f.normal, x)});
  return Polytope::from_vh(p.dim(), std::move(vertices), std::move(facets));
}

Real unit_ball_volume(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
  const Real pi = boost::math::constants::pi<Real>();
  Real even = 1, odd = 2;
  if (n == 0) return even;
  if (n == 1) return odd;
  Real w = (n % 2 == 0) ? even : odd;
  for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) w = w * 2 * pi / k;
  return w;
}

std::vector<RatVector> lattice_points(const Polytope& p) {
  const std::size_t n = p.dim();
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    mpz_cdiv_q(lo[i].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(hi[i].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  std::vector<RatVector> out;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Rational(lo[i]);
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (x[i] < Rational(hi[i])) {
        x[i] += 1;
        break;
      }
      x[i] = Rational(lo[i]);
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace toricvol
