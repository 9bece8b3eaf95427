#include "toricvol/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/number.hpp>

#include "toricvol/error.hpp"
#include "toricvol/normal_form.hpp"

namespace toricvol {

namespace {

Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer power(long base, long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

Real tol_scale(const Real& rhs) {
  using boost::multiprecision::abs;
  return std::max(Real(1), abs(rhs));
}

RatVector vertex_mean(const std::vector<RatVector>& points, const std::vector<std::size_t>& idx) {
  RatVector m = zeros(points[0].size());
  for (auto i : idx) m = m + points[i];
  return Rational(1, static_cast<unsigned long>(idx.size())) * m;
}

Rational partition_bound(int p, int q) {
  return make_rational(power(p + 1, p) * power(q + 1, q + 1), factorial(p) * factorial(q));
}

// Compares with exact rationals when the Santalo point is exact.
BoundReport compare_volume(std::string name, const Rational& lhs, const Rational& rhs, bool exact,
                           bool strict, double tol, std::string notes) {
  if (exact) return make_exact_report(std::move(name), lhs, rhs, strict, std::move(notes));
  return make_report(std::move(name), to_real(lhs), to_real(rhs), strict, tol, std::move(notes));
}

const std::string& a1_segment_key() {
  static const std::string key =
      normal_form(convex_hull(std::vector<RatVector>{{Rational(0)}, {Rational(2)}}));
  return key;
}

const std::string& a1_square_key() {
  static const std::string key = normal_form(convex_hull(std::vector<RatVector>{
      {Rational(0), Rational(0)}, {Rational(1), Rational(0)},
      {Rational(0), Rational(1)}, {Rational(1), Rational(1)}}));
  return key;
}

std::string chi_label(std::size_t d, long long ell) {
  if (d == 2) return "chi = k, the lattice volume of the truncated cone (exact for cyclic quotients)";
  if (d == 3 && ell == 1) return "chi = 2 area(P), the cell count of a unimodular triangulation (exact)";
  if (d == 3) return "chi = ell * 2 area(P), the lattice volume of the truncated cone";
  return "chi proxy = ell * (d-1)! vol(P), labelled as a proxy in dimension > 3";
}

}  // namespace

BoundReport make_report(std::string name, const Real& lhs, const Real& rhs, bool strict,
                        double tol, std::string notes) {
  using boost::multiprecision::abs;
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.strict = strict;
  const Real slack = Real(tol) * tol_scale(rhs);
  r.holds = strict ? lhs < rhs : lhs <= rhs + slack;
  r.equality_within_tol = abs(lhs - rhs) <= slack;
  r.notes = std::move(notes);
  return r;
}

BoundReport make_exact_report(std::string name, const Rational& lhs, const Rational& rhs,
                              bool strict, std::string notes) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = to_real(lhs);
  r.rhs = to_real(rhs);
  r.strict = strict;
  r.holds = strict ? lhs < rhs : lhs <= rhs;
  r.equality_within_tol = lhs == rhs;
  r.notes = std::move(notes);
  return r;
}

std::vector<RadonPartition> radon_partitions(const std::vector<RatVector>& points) {
  if (points.empty()) throw Error(ErrorCode::WrongCount, "no points given");
  const std::size_t n = points[0].size();
  if (points.size() != n + 2)
    throw Error(ErrorCode::WrongCount, "expected " + std::to_string(n + 2) + " points in dimension " +
                                           std::to_string(n) + ", got " + std::to_string(points.size()));
  for (const auto& x : points)
    if (x.size() != n) throw Error(ErrorCode::WrongCount, "points of mixed dimension");
  if (affine_dimension(points) != static_cast<int>(n))
    throw Error(ErrorCode::DegenerateSpan, "points do not affinely span R^" + std::to_string(n));

  RatMatrix a(n + 1, zeros(n + 2));
  for (std::size_t j = 0; j < n + 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = points[j][i];
    a[n][j] = 1;
  }
  const auto kernel = nullspace(a, n + 2);
  if (kernel.size() != 1) throw Error(ErrorCode::DegenerateSpan, "affine dependence is not unique");
  const RatVector& lambda = kernel[0];

  std::vector<std::size_t> pos, neg, zero;
  Rational pos_sum = 0;
  RatVector radon = zeros(n);
  for (std::size_t j = 0; j < n + 2; ++j) {
    if (lambda[j] > 0) {
      pos.push_back(j);
      pos_sum += lambda[j];
      radon = radon + lambda[j] * points[j];
    } else if (lambda[j] < 0) {
      neg.push_back(j);
    } else {
      zero.push_back(j);
    }
  }
  radon = (1 / pos_sum) * radon;

  std::vector<RadonPartition> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << zero.size()); ++mask) {
    std::vector<std::size_t> a_side = pos, b_side = neg;
    for (std::size_t z = 0; z < zero.size(); ++z)
      ((mask >> z) & 1 ? a_side : b_side).push_back(zero[z]);
    std::sort(a_side.begin(), a_side.end());
    std::sort(b_side.begin(), b_side.end());
    if (b_side.size() < a_side.size() || (b_side.size() == a_side.size() && b_side[0] < a_side[0]))
      std::swap(a_side, b_side);
    RadonPartition part;
    part.p = static_cast<int>(a_side.size()) - 1;
    part.q = static_cast<int>(b_side.size()) - 1;
    part.part_a = std::move(a_side);
    part.part_b = std::move(b_side);
    part.radon_point = radon;
    out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end(), [](const RadonPartition& x, const RadonPartition& y) {
    return std::tie(x.p, x.part_a) < std::tie(y.p, y.part_a);
  });
  return out;
}

int minimal_p(const std::vector<RatVector>& points) {
  return radon_partitions(points).front().p;
}

std::vector<BoundReport> partition_volume_bounds(const std::vector<RatVector>& points,
                                                 const BoundOptions& options) {
  const auto parts = radon_partitions(points);
  const int p = parts.front().p;
  const int q = parts.front().q;
  const std::size_t n = points[0].size();
  const Polytope poly = convex_hull(points);

  std::vector<BoundReport> out;
  out.push_back(make_exact_report(
      "partition_volume_lower", make_rational(Integer(p + 1), factorial(static_cast<long>(n))), volume(poly), false,
      "vol(P) >= (p_min + 1)/n! with p_min = " + std::to_string(p)));

  if (p < 1) {
    BoundReport r;
    r.name = "partition_dual_upper";
    r.holds = true;
    r.informational = true;
    r.notes = "not applicable: the minimal partition has p = 0";
    out.push_back(std::move(r));
    return out;
  }

  const auto s = santalo_point(poly, options.santalo);
  const Rational bound = partition_bound(p, q);
  auto r = compare_volume("partition_dual_upper", s.dual_volume, bound, s.exact, false,
                          options.equality_tol, {});
  bool centred = false;
  for (const auto& part : parts) {
    if (part.p != p) continue;
    if (vertex_mean(points, part.part_a) == part.radon_point &&
        vertex_mean(points, part.part_b) == part.radon_point)
      centred = true;
  }
  r.notes = "vol(P^chi) <= (p+1)^p (q+1)^(q+1)/(p! q!) for the (" + std::to_string(p) + "," +
            std::to_string(q) + ")-partition; Radon point " +
            (centred ? "equals" : "differs from") + " both simplex barycentres";
  out.push_back(std::move(r));
  return out;
}

BoundReport check_partition_inequality(int p, int q) {
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidArgument, "need p >= 1 and q >= 1");
  const long n = p + q;
  const Rational rhs = make_rational(2 * power(n, n + 1), factorial(n));
  return make_exact_report("partition_inequality", partition_bound(p, q), rhs, false,
                           "(p+1)^p (q+1)^(q+1)/(p! q!) <= 2 n^(n+1)/n!; equality exactly at p = 1");
}

std::vector<BoundReport> verify_blaschke_santalo(const Polytope& p, const BoundOptions& options) {
  const int n = static_cast<int>(p.dim());
  const Real omega = unit_ball_volume(n);
  const Real rhs = omega * omega;
  const Rational vol = volume(p);

  std::vector<BoundReport> out;
  const Polytope centred = translate(p, Rational(-1) * barycenter(p));
  const Rational bary = vol * volume(polar_dual(centred));
  out.push_back(make_report("blaschke_santalo_barycentric", to_real(bary), rhs, false,
                            options.equality_tol,
                            "vol(P) vol((P - b)^*) <= omega_n^2 with b the barycentre"));

  const auto mv = mahler_volume(p, options.santalo);
  out.push_back(make_report("blaschke_santalo", mv.upper, rhs, false, options.equality_tol,
                            "vol(P) vol(P^chi) <= omega_n^2 at the Santalo point"));
  return out;
}

std::vector<BoundReport> verify_volume_index_bounds(const ToricCone& cone, const BoundOptions& options) {
  return verify_volume_index_bounds(cone, normalized_volume(cone, options.santalo), options);
}

std::vector<BoundReport> verify_volume_index_bounds(const ToricCone& cone,
                                                    const NormalizedVolumeResult& nv,
                                                    const BoundOptions& options) {
  const long d = static_cast<long>(cone.dim());
  const Real omega = unit_ball_volume(static_cast<int>(d - 1));
  const Real omega2 = omega * omega;
  const Real fact = to_real(factorial(d - 1));
  const Real vhat = nv.upper;
  const Real ell = Real(nv.ell);
  const Real vol = to_real(volume(nv.height.polytope));
  const double tol = options.equality_tol;
  // In dimension 1 Blaschke-Santalo is an equality for every segment.
  const bool strict = d > 2;
  const std::string printed_note =
      "constant without the d! normalization of vol^; reported for reference only";

  std::vector<BoundReport> out;
  auto a = make_report("volume_bound_printed", vol, omega2 / (ell * Real(d) * vhat), true, tol,
                       printed_note);
  a.informational = true;
  auto b = make_report("index_bound_printed", ell, fact * omega2 / (Real(d) * vhat), true, tol,
                       printed_note);
  b.informational = true;
  out.push_back(std::move(a));
  out.push_back(std::move(b));

  std::string note = "vol^ = ((d-1)!/ell) vol(P^chi) carried through Blaschke-Santalo";
  if (!strict) note += "; d = 2 forces equality, so the bound is checked as <=";
  out.push_back(make_report("volume_bound", vol, omega2 * fact / (ell * vhat), strict, tol, note));
  out.push_back(make_report("index_bound", ell, fact * fact * omega2 / vhat, strict, tol,
                            note + "; uses vol(P) >= 1/(d-1)!"));
  return out;
}

BoundReport verify_rdp_bound(const ToricCone& cone, const BoundOptions& options) {
  if (is_smooth(cone)) return verify_rdp_bound(cone, NormalizedVolumeResult{}, options);
  return verify_rdp_bound(cone, normalized_volume(cone, options.santalo), options);
}

BoundReport verify_rdp_bound(const ToricCone& cone, const NormalizedVolumeResult& nv,
                             const BoundOptions& options) {
  const long d = static_cast<long>(cone.dim());
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "need d >= 2");
  const Rational rhs(2 * power(d - 1, d));
  if (is_smooth(cone)) {
    BoundReport r;
    r.name = "rdp_bound";
    r.rhs = to_real(rhs);
    r.lhs = Real(0);
    r.holds = true;
    r.informational = true;
    r.notes = "not applicable: smooth point (vol^ = d^d)";
    return r;
  }
  auto r = compare_volume("rdp_bound", nv.exact_upper, rhs, nv.santalo.exact, false,
                          options.equality_tol, "vol^ <= 2 (d-1)^d");
  if (r.equality_within_tol) {
    const std::string key = normal_form(nv.height.polytope);
    const bool a1 = nv.ell == 1 && ((d == 2 && key == a1_segment_key()) ||
                                    (d == 3 && key == a1_square_key()));
    if (a1) {
      r.notes += "; equality at the A1 singularity";
    } else {
      r.holds = false;
      r.notes += "; equality outside the A1 normal forms";
    }
  }
  return r;
}

BoundReport verify_mahler_conjecture(const Polytope& p, const BoundOptions& options) {
  const long n = static_cast<long>(p.dim());
  const Rational lhs = make_rational(power(n + 1, n + 1), factorial(n) * factorial(n));
  const auto mv = mahler_volume(p, options.santalo);
  const std::string note =
      "Mahler volume at least that of the simplex; a violation would refute an open conjecture "
      "and far more likely indicates a solver defect";
  if (mv.santalo.exact)
    return make_exact_report("mahler_conjecture", lhs, volume(p) * mv.santalo.dual_volume, false, note);
  return make_report("mahler_conjecture", to_real(lhs), mv.value, false, options.equality_tol, note);
}

Integer euler_characteristic(const HeightPolytope& height) {
  const Rational lv = lattice_volume(height.polytope) * rat(height.ell);
  if (lv.get_den() != 1) throw Error(ErrorCode::NotLattice, "height polytope is not a lattice polytope");
  return lv.get_num();
}

Integer euler_characteristic(const ToricCone& cone) {
  return euler_characteristic(height_polytope(cone));
}

std::vector<BoundReport> euler_bound_report(const ToricCone& cone, const BoundOptions& options) {
  return euler_bound_report(cone, normalized_volume(cone, options.santalo), options);
}

std::vector<BoundReport> euler_bound_report(const ToricCone& cone, const NormalizedVolumeResult& nv,
                                            const BoundOptions& options) {
  const long d = static_cast<long>(cone.dim());
  const Integer chi = euler_characteristic(nv.height);
  const std::string label = chi_label(cone.dim(), nv.ell) + ", chi = " + chi.get_str();
  const double tol = options.equality_tol;

  std::vector<BoundReport> out;
  out.push_back(compare_volume("euler_lower", Rational(power(d, d)), nv.exact_upper * Rational(chi),
                               nv.santalo.exact, false, tol, "d^d <= vol^ * chi; " + label));

  const Real omega = unit_ball_volume(static_cast<int>(d - 1));
  const Real fact = to_real(factorial(d - 1));
  const Real chi_r = to_real(chi);
  out.push_back(make_report("euler_upper", nv.upper, fact * fact * omega * omega / chi_r, false, tol,
                            "vol^ <= ((d-1)!)^2 omega_{d-1}^2 / chi; " + label));
  auto printed = make_report("euler_upper_printed", nv.upper, fact * omega * omega / chi_r, true, tol,
                             "vol^ < (d-1)! omega_{d-1}^2 / chi, without the extra (d-1)! factor; reported for reference only");
  printed.informational = true;
  out.push_back(std::move(printed));
  return out;
}

bool c1_bound_defined(const ToricCone& cone) {
  const auto hp = height_polytope(cone);
  return hp.ell == 1 && hp.polytope.contains_in_interior(zeros(hp.polytope.dim()));
}

BoundReport verify_c1_bound(const ToricCone& cone, const BoundOptions& options) {
  return verify_c1_bound(cone, normalized_volume(cone, options.santalo), options);
}

BoundReport verify_c1_bound(const ToricCone& cone, const NormalizedVolumeResult& nv,
                            const BoundOptions& options) {
  if (nv.ell != 1)
    throw Error(ErrorCode::InvalidArgument, "first Chern class bound needs Gorenstein index 1");
  const Rational weight = weight_volume(cone);
  const auto& p = nv.height.polytope;
  bool reflexive = p.is_lattice() && polar_dual(p).is_lattice();
  auto r = compare_volume("c1_bound", nv.exact_upper, weight, nv.santalo.exact, false,
                          options.equality_tol,
                          std::string("vol^ <= weight volume; P reflexive: ") + (reflexive ? "yes" : "no"));
  if (nv.santalo.exact)
    r.equality_within_tol = is_zero(nv.santalo.point);
  else
    r.equality_within_tol = norm(nv.santalo.point) <= Real(options.equality_tol);
  r.notes += r.equality_within_tol ? "; Santalo point at the origin" : "; Santalo point away from the origin";
  return r;
}

bool all_hold(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const BoundReport& r) { return r.informational || r.holds; });
}

}  // namespace toricvol
