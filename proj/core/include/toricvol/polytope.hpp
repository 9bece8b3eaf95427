#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "toricvol/rational.hpp"

namespace toricvol {

/// The closed halfspace { x : <normal, x> <= offset }. Normals are always
/// primitive integer vectors.
struct Halfspace {
  RatVector normal;
  Rational offset;

  /// offset - <normal, x>; positive strictly inside.
  Rational slack(const RatVector& x) const { return offset - dot(normal, x); }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Full-dimensional rational polytope with both representations.
///
/// Vertices are sorted lexicographically and facets by (normal, offset), so
/// two equal polytopes compare equal member-wise. `facet_vertices()[f]`
/// lists the indices of the vertices lying on facet f.
class Polytope {
 public:
  Polytope() = default;

  /// Builds from known irredundant V- and H-representations; incidences are
  /// recomputed. No redundancy check is made.
  static Polytope from_vh(std::size_t dim, std::vector<RatVector> vertices,
                          std::vector<Halfspace> facets);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return facet_vertices_; }
  bool is_lattice() const { return is_lattice_; }
  bool is_simplex() const { return vertices_.size() == dim_ + 1; }

  bool contains(const RatVector& x) const;
  bool contains_in_interior(const RatVector& x) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  bool is_lattice_ = false;
};

/// x -> matrix * x + shift with an integer matrix of determinant +-1.
class UnimodularMap {
 public:
  UnimodularMap() = default;
  UnimodularMap(IntMatrix matrix, RatVector shift);
  static UnimodularMap identity(std::size_t n);

  const IntMatrix& matrix() const { return matrix_; }
  const RatVector& shift() const { return shift_; }
  std::size_t dim() const { return matrix_.size(); }

  RatVector apply(const RatVector& x) const;
  UnimodularMap inverse() const;

 private:
  IntMatrix matrix_;
  RatVector shift_;
};

long long integer_determinant(const IntMatrix& m);

/// Index tuples into an underlying point list; each tuple spans a
/// full-dimensional simplex.
struct Triangulation {
  std::vector<std::vector<std::size_t>> simplices;
};

/// Irredundant hull of a full-dimensional point set. Throws DegenerateInput
/// when the points span a proper affine subspace.
Polytope convex_hull(std::span<const RatVector> points);

/// { y : <x, y> <= 1 for all x in P }. Throws OriginNotInterior.
Polytope polar_dual(const Polytope& p);

Rational simplex_volume(std::span<const RatVector> vertices);

Rational volume(const Polytope& p);
/// n! times the Euclidean volume.
Rational lattice_volume(const Polytope& p);
RatVector barycenter(const Polytope& p);

Polytope apply_map(const Polytope& p, const UnimodularMap& t);
Polytope translate(const Polytope& p, const RatVector& x);

/// Pulling triangulation: fan from the lexicographically smallest vertex over
/// the recursively triangulated facets that avoid it.
Triangulation triangulate(const Polytope& p);

/// Pulling triangulation of one face of a polytope, where the face is a set
/// of point indices and `facets` lists the point indices on every facet.
std::vector<std::vector<std::size_t>> triangulate_face(
    const std::vector<RatVector>& points, const std::vector<std::vector<std::size_t>>& facets,
    const std::vector<std::size_t>& face, int face_dim);

/// Volume of the n-dimensional Euclidean unit ball.
Real unit_ball_volume(int n);

/// Lattice points (integer coordinates) contained in P.
std::vector<RatVector> lattice_points(const Polytope& p);

}  // namespace toricvol
