#include "toricvol/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "toricvol/bounds.hpp"
#include "toricvol/error.hpp"
#include "toricvol/normal_form.hpp"

namespace toricvol {

namespace {

long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long floor_ll(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

long long ceil_ll(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

long long integral(const Rational& q) {
  if (q.get_den() != 1) throw Error(ErrorCode::NotLattice, "expected an integer");
  return q.get_num().get_si();
}

struct PrimitiveFacet {
  RatVector normal;  // primitive integer
  Rational offset;
};

std::vector<PrimitiveFacet> primitive_facets(const Polytope& p) {
  std::vector<PrimitiveFacet> out;
  for (const auto& f : p.facets()) {
    RatVector a = primitive_integer(f.normal);
    // a = s * normal for some s > 0.
    std::size_t i = 0;
    while (f.normal[i] == 0) ++i;
    Rational s = a[i] / f.normal[i];
    out.push_back({std::move(a), s * f.offset});
  }
  return out;
}

// Lattice points x outside q with <a_F, x> <= b_F + slack for every facet,
// restricted to the box of half-width box_side around the first vertex.
void growth_points(const Polytope& q, long long slack_ll, long long box_side,
                   std::vector<RatVector>& points, std::uint64_t& clipped) {
  const Rational slack = rat(slack_ll);
  const auto facets = primitive_facets(q);
  Rational lo0, hi0, lo1, hi1;
  bool first = true;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      RatMatrix a{facets[i].normal, facets[j].normal};
      auto sol = solve(a, RatVector{facets[i].offset + slack, facets[j].offset + slack});
      if (sol.status != SolveStatus::Unique) continue;
      bool feasible = true;
      for (const auto& f : facets)
        if (dot(f.normal, sol.x) > f.offset + slack) feasible = false;
      if (!feasible) continue;
      if (first) {
        lo0 = hi0 = sol.x[0];
        lo1 = hi1 = sol.x[1];
        first = false;
      }
      lo0 = std::min(lo0, sol.x[0]);
      hi0 = std::max(hi0, sol.x[0]);
      lo1 = std::min(lo1, sol.x[1]);
      hi1 = std::max(hi1, sol.x[1]);
    }
  const RatVector& anchor = q.vertices().front();
  const long long c0 = integral(anchor[0]), c1 = integral(anchor[1]);
  for (long long x = ceil_ll(lo0); x <= floor_ll(hi0); ++x)
    for (long long y = ceil_ll(lo1); y <= floor_ll(hi1); ++y) {
      RatVector pt{rat(x), rat(y)};
      bool inside = true, within = true;
      for (const auto& f : facets) {
        Rational s = dot(f.normal, pt);
        if (s > f.offset) inside = false;
        if (s > f.offset + slack) within = false;
      }
      if (inside || !within) continue;
      if (std::llabs(x - c0) > box_side || std::llabs(y - c1) > box_side) {
        ++clipped;
        continue;
      }
      points.push_back(std::move(pt));
    }
}

Polytope segment(long long m) {
  return convex_hull(std::vector<RatVector>{{Rational(0)}, {rat(m)}});
}

struct Candidate {
  long long ell;
  std::size_t polytope;
  IntVector shift;
};

std::optional<SpectrumEntry> evaluate(const Candidate& c, const Polytope& q, const EnumerationJob& job) {
  std::vector<IntVector> rays;
  for (const auto& v : q.vertices()) {
    IntVector r = to_int(v);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += c.shift[i];
    r.push_back(c.ell);
    // A non-primitive ray means the cone's height polytope is not q at this ell.
    if (primitive_integer(to_rat(r)) != to_rat(r)) return std::nullopt;
    rays.push_back(std::move(r));
  }
  ToricCone cone = cone_from_rays(rays);
  if (gorenstein_data(cone).index != c.ell) return std::nullopt;

  SantaloOptions opts;
  const auto nv = normalized_volume(cone, opts);
  const Rational eps(job.epsilon);
  const bool above = nv.santalo.exact ? nv.exact_upper > eps : nv.value > Real(job.epsilon);
  if (!above) return std::nullopt;

  SpectrumEntry e;
  e.normal_form_key = cone_key(cone);
  e.polytope_key = normal_form(nv.height.polytope);
  e.ell = c.ell;
  e.volume_value = nv.value;
  e.volume_lower = nv.lower;
  e.volume_upper = nv.upper;
  e.exact_upper = nv.exact_upper;
  e.exact = nv.santalo.exact;
  for (const auto& r : cone.rays()) e.representative_rays.push_back(to_int(r));
  e.passes_rdp = verify_rdp_bound(cone, nv).holds;
  e.passes_bs = all_hold(verify_blaschke_santalo(nv.height.polytope));
  return e;
}

}  // namespace

EnumerationJob make_job(int d, double epsilon, std::uint64_t budget, int jobs) {
  if (d != 2 && d != 3) throw Error(ErrorCode::InvalidArgument, "enumeration supports d = 2 or 3");
  if (!(epsilon > 0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  if (jobs < 1) throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
  const int n = d - 1;
  const Real omega = unit_ball_volume(n);
  const Real fact = Real(factorial_ll(n));
  const Real c = fact * fact * omega * omega / Real(epsilon);

  EnumerationJob job;
  job.d = d;
  job.epsilon = epsilon;
  job.budget = budget;
  job.jobs = jobs;
  // Caps are non-strict, so they also admit the boundary cases.
  job.max_index = static_cast<long long>(floor(c * Real(1 + 1e-12)));
  long long max_cap = 0;
  for (long long ell = 1; ell <= job.max_index; ++ell) {
    long long cap = static_cast<long long>(floor(c / Real(ell) * Real(1 + 1e-12)));
    job.volume_caps.push_back(cap);
    max_cap = std::max(max_cap, cap);
  }
  job.max_volume = job.volume_caps.empty() ? Rational(0)
                                           : Rational(rat(job.volume_caps[0]) / rat(factorial_ll(n)));
  job.box_side = std::max<long long>(1, n * factorial_ll(n) * max_cap);
  std::ostringstream notes;
  notes << "max_index = floor(((d-1)!)^2 omega_{d-1}^2 / epsilon); "
        << "lattice volume cap = floor(((d-1)!)^2 omega_{d-1}^2 / (ell epsilon)); "
        << "box_side = n n! max lattice volume";
  job.notes = notes.str();
  return job;
}

EnumerationJob doubled(const EnumerationJob& job) {
  EnumerationJob out = job;
  out.max_index = 2 * job.max_index;
  out.volume_caps.clear();
  for (long long ell = 1; ell <= out.max_index; ++ell) {
    long long base = ell <= job.max_index ? job.volume_caps[ell - 1] : 0;
    out.volume_caps.push_back(2 * std::max<long long>(base, 1));
  }
  out.max_volume = 2 * job.max_volume;
  out.box_side = 2 * job.box_side;
  out.notes = job.notes + "; doubled for saturation";
  return out;
}

PolygonEnumeration enumerate_polygons_detailed(long long max_lattice_volume, long long box_side,
                                               std::uint64_t budget) {
  if (max_lattice_volume < 1) throw Error(ErrorCode::InvalidArgument, "volume bound must be >= 1");
  if (box_side <= 0) box_side = 4 * max_lattice_volume;

  PolygonEnumeration out;
  std::map<std::string, Polytope> found;
  std::vector<std::string> frontier;
  auto add = [&](Polytope p) {
    std::string key = normal_form(p);
    if (found.emplace(key, std::move(p)).second) frontier.push_back(std::move(key));
  };
  for (long long m = 1; m <= max_lattice_volume; ++m)
    add(convex_hull(std::vector<RatVector>{{Rational(0), Rational(0)}, {rat(m), Rational(0)},
                                           {Rational(0), Rational(1)}}));

  while (!frontier.empty()) {
    std::vector<std::string> current;
    current.swap(frontier);
    for (const auto& key : current) {
      const Polytope q = found.at(key);
      const long long lv = integral(lattice_volume(q));
      if (lv >= max_lattice_volume) continue;
      std::vector<RatVector> points;
      growth_points(q, max_lattice_volume - lv, box_side, points, out.box_clipped);
      for (const auto& x : points) {
        if (++out.candidates > budget)
          throw Error(ErrorCode::BudgetExceeded, "polygon candidates exceed budget " + std::to_string(budget));
        std::vector<RatVector> pts = q.vertices();
        pts.push_back(x);
        Polytope child = convex_hull(pts);
        if (integral(lattice_volume(child)) <= max_lattice_volume) add(std::move(child));
      }
    }
  }

  std::vector<std::pair<long long, std::string>> order;
  for (const auto& [key, p] : found) order.emplace_back(integral(lattice_volume(p)), key);
  std::sort(order.begin(), order.end());
  for (auto& [lv, key] : order) {
    out.polygons.push_back(found.at(key));
    out.keys.push_back(key);
  }
  return out;
}

std::vector<Polytope> enumerate_polygons(long long max_lattice_volume) {
  return enumerate_polygons_detailed(max_lattice_volume).polygons;
}

EnumerationResult enumerate_singularities_detailed(const EnumerationJob& job) {
  if (job.d != 2 && job.d != 3) throw Error(ErrorCode::InvalidArgument, "enumeration supports d = 2 or 3");
  EnumerationResult result;
  long long max_cap = 0;
  for (auto c : job.volume_caps) max_cap = std::max(max_cap, c);
  if (max_cap < 1) return result;

  std::vector<Polytope> polys;
  if (job.d == 2) {
    for (long long m = 1; m <= max_cap; ++m) polys.push_back(segment(m));
  } else {
    auto pe = enumerate_polygons_detailed(max_cap, job.box_side, job.budget);
    polys = std::move(pe.polygons);
    result.candidates += pe.candidates;
    result.box_clipped += pe.box_clipped;
  }

  const std::size_t n = static_cast<std::size_t>(job.d - 1);
  std::vector<Candidate> candidates;
  for (long long ell = 1; ell <= job.max_index; ++ell) {
    const long long cap = job.volume_caps[ell - 1];
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (integral(lattice_volume(polys[i])) > cap) continue;
      IntVector t(n, 0);
      while (true) {
        candidates.push_back({ell, i, t});
        if (result.candidates + candidates.size() > job.budget)
          throw Error(ErrorCode::BudgetExceeded, "cone candidates exceed budget " + std::to_string(job.budget));
        std::size_t k = 0;
        for (; k < n; ++k) {
          if (++t[k] < ell) break;
          t[k] = 0;
        }
        if (k == n) break;
      }
    }
  }
  result.candidates += candidates.size();

  std::vector<std::optional<SpectrumEntry>> evaluated(candidates.size());
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(job.jobs));
  auto worker = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < candidates.size(); i += static_cast<std::size_t>(job.jobs))
        evaluated[i] = evaluate(candidates[i], polys[candidates[i].polytope], job);
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (job.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < job.jobs; ++w) threads.emplace_back(worker, static_cast<std::size_t>(w));
    for (auto& t : threads) t.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::set<std::string> seen;
  for (auto& e : evaluated)
    if (e && seen.insert(e->normal_form_key).second) result.entries.push_back(std::move(*e));
  std::stable_sort(result.entries.begin(), result.entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) {
                     if (a.volume_upper != b.volume_upper) return a.volume_upper > b.volume_upper;
                     return a.normal_form_key < b.normal_form_key;
                   });
  return result;
}

std::vector<SpectrumEntry> enumerate_singularities(const EnumerationJob& job) {
  return enumerate_singularities_detailed(job).entries;
}

std::vector<SpectrumValue> volume_spectrum(const std::vector<SpectrumEntry>& entries) {
  std::vector<SpectrumValue> out;
  for (const auto& e : entries) {
    bool same = false;
    if (!out.empty()) {
      auto& last = out.back();
      if (e.exact && last.exact)
        same = *last.exact == e.exact_upper;
      else
        same = abs(last.value - e.volume_upper) <= Real(1e-9) * last.value;
    }
    if (same) {
      ++out.back().multiplicity;
      continue;
    }
    SpectrumValue v;
    v.value = e.volume_upper;
    if (e.exact) v.exact = e.exact_upper;
    v.multiplicity = 1;
    v.gap = out.empty() ? Real(0) : out.back().value - v.value;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SpectrumValue> volume_spectrum(const EnumerationJob& job) {
  return volume_spectrum(enumerate_singularities(job));
}

std::string spectrum_csv(const std::vector<SpectrumValue>& values) {
  std::ostringstream os;
  os << "value,exact,multiplicity,gap\n";
  for (const auto& v : values) {
    os << v.value.str(17) << ',' << (v.exact ? to_string(*v.exact) : std::string()) << ','
       << v.multiplicity << ',' << v.gap.str(17) << '\n';
  }
  return os.str();
}

std::vector<std::string> saturation_new_keys(const EnumerationJob& job) {
  std::set<std::string> base;
  for (const auto& e : enumerate_singularities(job)) base.insert(e.normal_form_key);
  std::vector<std::string> added;
  for (const auto& e : enumerate_singularities(doubled(job)))
    if (!base.count(e.normal_form_key)) added.push_back(e.normal_form_key);
  return added;
}

}  // namespace toricvol
