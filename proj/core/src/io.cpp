#include "toricvol/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "toricvol/error.hpp"

namespace toricvol {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

Rational parse_entry(const json& v) {
  if (v.is_number_float()) throw Error(ErrorCode::ParseError, "floating-point entry " + v.dump() + " rejected");
  if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<unsigned long long>())));
  if (v.is_number_integer()) return rat(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer or \"p/q\" string, got " + v.dump());
}

std::vector<RatVector> parse_rows(const json& doc, const char* field) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top-level JSON must be an object");
  if (!doc.contains(field) || !doc[field].is_array())
    throw Error(ErrorCode::ParseError, std::string("missing array \"") + field + "\"");
  std::vector<RatVector> rows;
  for (const auto& row : doc[field]) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, std::string("entries of \"") + field + "\" must be arrays");
    RatVector v;
    for (const auto& x : row) v.push_back(parse_entry(x));
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, std::string("\"") + field + "\" is empty");
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"dim\" must be an integer");
    const auto dim = doc["dim"].get<long long>();
    for (const auto& r : rows)
      if (static_cast<long long>(r.size()) != dim)
        throw Error(ErrorCode::ParseError, "entry " + to_string(r) + " does not have dimension " + std::to_string(dim));
  }
  return rows;
}

json rational_array(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json int_array(const IntVector& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

double real_value(const Real& x) { return to_double(x); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json report_object(const BoundReport& r) {
  ordered_json o;
  o["name"] = r.name;
  o["lhs"] = real_value(r.lhs);
  o["rhs"] = real_value(r.rhs);
  o["holds"] = r.holds;
  o["strict"] = r.strict;
  o["equality"] = r.equality_within_tol;
  o["informational"] = r.informational;
  o["notes"] = r.notes;
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rays_text(const std::vector<IntVector>& rays) {
  json a = json::array();
  for (const auto& r : rays) a.push_back(int_array(r));
  return a.dump();
}

}  // namespace

InputKind detect_input_kind(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (doc.is_object() && doc.contains("rays")) return InputKind::Cone;
  if (doc.is_object() && (doc.contains("vertices") || doc.contains("points"))) return InputKind::Polytope;
  throw Error(ErrorCode::ParseError, "input has neither \"rays\" nor \"vertices\"");
}

std::vector<RatVector> parse_points(std::string_view json_text) {
  const json doc = parse_json(json_text);
  return parse_rows(doc, doc.is_object() && doc.contains("points") ? "points" : "vertices");
}

Polytope parse_polytope(std::string_view json_text) { return convex_hull(parse_points(json_text)); }

ToricCone parse_cone(std::string_view json_text) {
  const json doc = parse_json(json_text);
  auto rays = parse_rows(doc, "rays");
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw Error(ErrorCode::ParseError, "\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  return cone_from_rays(rays, label);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

std::string format_real(const Real& x) { return x.str(17); }

std::string polytope_json(const Polytope& p, const EmitOptions& options) {
  ordered_json o;
  o["dim"] = p.dim();
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(rational_array(v));
  o["vertices"] = verts;
  ordered_json facets = ordered_json::array();
  for (const auto& f : p.facets()) {
    ordered_json fo;
    fo["normal"] = rational_array(f.normal);
    fo["offset"] = to_string(f.offset);
    facets.push_back(fo);
  }
  o["facets"] = facets;
  o["lattice"] = p.is_lattice();
  const Rational vol = volume(p);
  o["volume"] = to_string(vol);
  if (options.with_float) o["volume_float"] = to_double(to_real(vol));
  return dump(o);
}

std::string cone_json(const ToricCone& cone) {
  ordered_json o;
  o["dim"] = cone.dim();
  json rays = json::array();
  for (const auto& r : cone.rays()) rays.push_back(rational_array(r));
  o["rays"] = rays;
  if (!cone.label().empty()) o["label"] = cone.label();
  return dump(o);
}

std::string volume_json(const Polytope& p, const EmitOptions& options) {
  ordered_json o;
  const Rational vol = volume(p);
  o["volume"] = to_string(vol);
  if (p.is_lattice()) o["lattice_volume"] = to_string(lattice_volume(p));
  o["barycenter"] = rational_array(barycenter(p));
  if (options.with_float) o["volume_float"] = to_double(to_real(vol));
  return dump(o);
}

std::string santalo_json(const SantaloResult& r, const Polytope& p, const EmitOptions& options) {
  ordered_json o;
  o["point"] = rational_array(r.point);
  o["dual_volume"] = to_string(r.dual_volume);
  o["mahler"] = real_value(r.mahler);
  o["residual"] = real_value(r.residual);
  o["iterations"] = r.iterations;
  o["exact"] = r.exact;
  o["volume"] = to_string(volume(p));
  if (options.with_float) {
    json pf = json::array();
    for (const auto& x : r.point) pf.push_back(to_double(to_real(x)));
    o["point_float"] = pf;
    o["dual_volume_float"] = to_double(to_real(r.dual_volume));
  }
  return dump(o);
}

std::string normalized_volume_json(const ToricCone& cone, const NormalizedVolumeResult& r,
                                   const GridMinimum* cross_check, const EmitOptions& options) {
  ordered_json o;
  if (!cone.label().empty()) o["label"] = cone.label();
  o["value"] = real_value(r.value);
  o["bracket"] = json::array({real_value(r.lower), real_value(r.upper)});
  o["exact_upper"] = to_string(r.exact_upper);
  o["exact"] = r.santalo.exact;
  o["ell"] = r.ell;
  o["minimizer_xi"] = rational_array(r.minimizer_xi);
  json verts = json::array();
  for (const auto& v : r.height.polytope.vertices()) verts.push_back(rational_array(v));
  o["height_polytope"] = verts;
  o["santalo_point"] = rational_array(r.santalo.point);
  o["residual"] = real_value(r.santalo.residual);
  if (!cone.warnings().empty()) o["warnings"] = cone.warnings();
  if (cross_check) {
    ordered_json g;
    g["grid_value"] = real_value(to_real(cross_check->value));
    g["grid_xi"] = rational_array(cross_check->xi);
    g["spacing"] = to_string(cross_check->final_spacing);
    g["discretization_bound"] = real_value(cross_check->discretization_bound);
    g["evaluations"] = cross_check->evaluations;
    g["agrees"] = to_real(cross_check->value) >= r.lower * (1 - Real(1e-12)) &&
                  to_real(cross_check->value) <= r.upper + cross_check->discretization_bound;
    o["cross_check"] = g;
  }
  if (options.with_float) o["exact_upper_float"] = to_double(to_real(r.exact_upper));
  return dump(o);
}

std::string radon_json(const std::vector<RadonPartition>& parts) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : parts) {
    ordered_json o;
    o["part_a"] = p.part_a;
    o["part_b"] = p.part_b;
    o["radon_point"] = rational_array(p.radon_point);
    o["p"] = p.p;
    o["q"] = p.q;
    arr.push_back(o);
  }
  return dump(arr);
}

std::string reports_json(const std::vector<BoundReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_object(r));
  return dump(arr);
}

std::string reports_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "name,lhs,rhs,holds,strict,equality,informational,notes\n";
  for (const auto& r : reports)
    os << csv_field(r.name) << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
       << (r.holds ? "true" : "false") << ',' << (r.strict ? "true" : "false") << ','
       << (r.equality_within_tol ? "true" : "false") << ','
       << (r.informational ? "true" : "false") << ',' << csv_field(r.notes) << '\n';
  return os.str();
}

std::string entries_json(const EnumerationJob& job, const std::vector<SpectrumEntry>& entries) {
  ordered_json o;
  o["dim"] = job.d;
  o["epsilon"] = job.epsilon;
  o["max_index"] = job.max_index;
  o["volume_caps"] = job.volume_caps;
  o["box_side"] = job.box_side;
  o["proof_consistent_only"] = job.proof_consistent_only;
  o["notes"] = job.notes;
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json eo;
    eo["normal_form_key"] = e.normal_form_key;
    eo["polytope_key"] = e.polytope_key;
    eo["ell"] = e.ell;
    eo["volume"] = real_value(e.volume_value);
    eo["bracket"] = json::array({real_value(e.volume_lower), real_value(e.volume_upper)});
    eo["exact_upper"] = to_string(e.exact_upper);
    eo["exact"] = e.exact;
    json rays = json::array();
    for (const auto& r : e.representative_rays) rays.push_back(int_array(r));
    eo["rays"] = rays;
    eo["passes_rdp"] = e.passes_rdp;
    eo["passes_bs"] = e.passes_bs;
    arr.push_back(eo);
  }
  o["entries"] = arr;
  return dump(o);
}

std::string entries_csv(const std::vector<SpectrumEntry>& entries, const EmitOptions& options) {
  std::ostringstream os;
  os << "normal_form_key,ell,rays,volume_lower,volume_upper,passes_rdp,passes_bs";
  if (options.with_float) os << ",exact_upper";
  os << '\n';
  for (const auto& e : entries) {
    os << csv_field(e.normal_form_key) << ',' << e.ell << ',' << csv_field(rays_text(e.representative_rays))
       << ',' << format_real(e.volume_lower) << ',' << format_real(e.volume_upper) << ','
       << (e.passes_rdp ? "true" : "false") << ',' << (e.passes_bs ? "true" : "false");
    if (options.with_float) os << ',' << to_string(e.exact_upper);
    os << '\n';
  }
  return os.str();
}

std::string spectrum_json(const EnumerationJob& job, const std::vector<SpectrumValue>& values) {
  ordered_json o;
  o["dim"] = job.d;
  o["epsilon"] = job.epsilon;
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) {
    ordered_json vo;
    vo["value"] = real_value(v.value);
    if (v.exact) vo["exact"] = to_string(*v.exact);
    vo["multiplicity"] = v.multiplicity;
    vo["gap"] = real_value(v.gap);
    arr.push_back(vo);
  }
  o["values"] = arr;
  return dump(o);
}

}  // namespace toricvol
