#include "cli.hpp"

#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "toricvol/bounds.hpp"
#include "toricvol/enumerate.hpp"
#include "toricvol/error.hpp"
#include "toricvol/io.hpp"
#include "toricvol/santalo.hpp"
#include "toricvol/toric.hpp"

namespace toricvol::cli {

namespace {

constexpr const char* kVersion = "toricvol 0.3.0";

struct Flags {
  std::string input;
  double tol = 1e-9;
  double equality_tol = 1e-7;
  std::string suite = "all";
  int dim = 2;
  double epsilon = 1.0;
  std::uint64_t budget = 10'000'000;
  int jobs = 1;
  bool csv = false;
  bool with_float = false;
  bool cross_check = false;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

void emit(const Flags& f, std::ostream& out, const std::string& text) {
  if (f.out_path.empty())
    out << text;
  else
    write_file(f.out_path, text);
}

bool wants_csv(const Flags& f) {
  return f.csv || (f.out_path.size() >= 4 && f.out_path.compare(f.out_path.size() - 4, 4, ".csv") == 0);
}

SantaloOptions santalo_options(const Flags& f) {
  SantaloOptions o;
  o.tol = f.tol;
  return o;
}

BoundOptions bound_options(const Flags& f) {
  BoundOptions o;
  o.equality_tol = f.equality_tol;
  o.santalo = santalo_options(f);
  return o;
}

// Random interior point: a positive dyadic convex combination of the vertices.
RatVector random_interior_point(const Polytope& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> weight(1, 1L << 20);
  RatVector x = zeros(p.dim());
  Rational total = 0;
  for (const auto& v : p.vertices()) {
    Rational w(weight(rng));
    x = x + w * v;
    total += w;
  }
  return (1 / total) * x;
}

bool suite_has(const std::string& suite, const char* name) { return suite == "all" || suite == name; }

void append(std::vector<BoundReport>& to, std::vector<BoundReport> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

std::vector<BoundReport> verify_polytope(const Polytope& p, const std::vector<RatVector>& points,
                                         const Flags& f) {
  const auto opts = bound_options(f);
  std::vector<BoundReport> reports;
  if (suite_has(f.suite, "bs")) append(reports, verify_blaschke_santalo(p, opts));
  if (suite_has(f.suite, "mahler")) reports.push_back(verify_mahler_conjecture(p, opts));
  if (suite_has(f.suite, "partition") && points.size() == p.dim() + 2 && p.is_lattice())
    append(reports, partition_volume_bounds(points, opts));
  return reports;
}

std::vector<BoundReport> verify_cone(const ToricCone& cone, const Flags& f) {
  const auto opts = bound_options(f);
  std::vector<BoundReport> reports;
  const bool smooth = is_smooth(cone);
  const auto nv = normalized_volume(cone, opts.santalo);
  if (suite_has(f.suite, "index")) append(reports, verify_volume_index_bounds(cone, nv, opts));
  if (suite_has(f.suite, "rdp"))
    reports.push_back(smooth ? verify_rdp_bound(cone, opts) : verify_rdp_bound(cone, nv, opts));
  if (suite_has(f.suite, "euler")) append(reports, euler_bound_report(cone, nv, opts));
  if (suite_has(f.suite, "c1")) {
    if (c1_bound_defined(cone)) {
      reports.push_back(verify_c1_bound(cone, nv, opts));
    } else if (f.suite == "c1") {
      throw Error(ErrorCode::OriginNotInterior,
                  "first Chern class bound needs index 1 and the origin interior to P");
    }
  }
  if (suite_has(f.suite, "bs")) append(reports, verify_blaschke_santalo(nv.height.polytope, opts));
  if (suite_has(f.suite, "mahler")) reports.push_back(verify_mahler_conjecture(nv.height.polytope, opts));
  return reports;
}

int execute(const std::string& verb, const Flags& f, std::ostream& out) {
  const EmitOptions eo{f.with_float};
  if (verb == "hull") {
    emit(f, out, polytope_json(parse_polytope(read_file(f.input)), eo));
  } else if (verb == "dual") {
    emit(f, out, polytope_json(polar_dual(parse_polytope(read_file(f.input))), eo));
  } else if (verb == "volume") {
    emit(f, out, volume_json(parse_polytope(read_file(f.input)), eo));
  } else if (verb == "santalo") {
    const Polytope p = parse_polytope(read_file(f.input));
    auto opts = santalo_options(f);
    if (f.seed) opts.start = random_interior_point(p, *f.seed);
    emit(f, out, santalo_json(santalo_point(p, opts), p, eo));
  } else if (verb == "normvol") {
    const ToricCone cone = parse_cone(read_file(f.input));
    const auto nv = normalized_volume(cone, santalo_options(f));
    std::optional<GridMinimum> grid;
    if (f.cross_check) grid = grid_minimize_truncated_volume(cone);
    emit(f, out, normalized_volume_json(cone, nv, grid ? &*grid : nullptr, eo));
  } else if (verb == "radon") {
    emit(f, out, radon_json(radon_partitions(parse_points(read_file(f.input)))));
  } else if (verb == "verify") {
    const std::string text = read_file(f.input);
    std::vector<BoundReport> reports;
    if (detect_input_kind(text) == InputKind::Cone) {
      reports = verify_cone(parse_cone(text), f);
    } else {
      const auto points = parse_points(text);
      reports = verify_polytope(convex_hull(points), points, f);
    }
    emit(f, out, wants_csv(f) ? reports_csv(reports) : reports_json(reports));
    return all_hold(reports) ? kOk : kViolation;
  } else if (verb == "enumerate") {
    const auto job = make_job(f.dim, f.epsilon, f.budget, f.jobs);
    const auto entries = enumerate_singularities(job);
    emit(f, out, wants_csv(f) ? entries_csv(entries, eo) : entries_json(job, entries));
  } else if (verb == "spectrum") {
    const auto job = make_job(f.dim, f.epsilon, f.budget, f.jobs);
    const auto values = volume_spectrum(job);
    emit(f, out, wants_csv(f) ? spectrum_csv(values) : spectrum_json(job, values));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric normalized volumes, Santalo points and volume bounds", "toricvol"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print the version and exit");

  Flags f;
  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", f.input, what)->required();
    sub->add_option("--out", f.out_path, "Write output to a file instead of stdout");
  };
  auto tol = [&](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "Santalo residual tolerance")->check(CLI::PositiveNumber);
  };

  auto* hull = app.add_subcommand("hull", "Vertices and facets of a polytope");
  input(hull, "polytope JSON");
  hull->add_flag("--float", f.with_float, "Add decimal companions");
  auto* dual = app.add_subcommand("dual", "Polar dual of a polytope containing the origin");
  input(dual, "polytope JSON");
  dual->add_flag("--float", f.with_float, "Add decimal companions");
  auto* vol = app.add_subcommand("volume", "Exact volume and barycentre");
  input(vol, "polytope JSON");
  vol->add_flag("--float", f.with_float, "Add decimal companions");
  auto* san = app.add_subcommand("santalo", "Santalo point and Mahler volume");
  input(san, "polytope JSON");
  tol(san);
  san->add_option("--seed", f.seed, "Start the optimizer from a seeded random interior point");
  san->add_flag("--float", f.with_float, "Add decimal companions");
  auto* nv = app.add_subcommand("normvol", "Normalized volume of a toric cone");
  input(nv, "cone JSON");
  tol(nv);
  nv->add_flag("--cross-check", f.cross_check, "Compare with a brute-force grid minimum");
  nv->add_flag("--float", f.with_float, "Add decimal companions");
  auto* radon = app.add_subcommand("radon", "Radon partitions of n+2 points");
  input(radon, "points JSON");
  auto* verify = app.add_subcommand("verify", "Check inequality suites");
  input(verify, "cone or polytope JSON");
  tol(verify);
  verify->add_option("--suite", f.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "bs", "rdp", "euler", "c1", "index", "mahler", "partition"}));
  verify->add_option("--equality-tol", f.equality_tol, "Relative tolerance for equality flags")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--csv", f.csv, "Tabular output");
  for (auto* sub : {app.add_subcommand("enumerate", "Singularities with normalized volume above epsilon"),
                    app.add_subcommand("spectrum", "Distinct normalized volumes above epsilon")}) {
    sub->add_option("--dim", f.dim, "Dimension d (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
    sub->add_option("--epsilon", f.epsilon, "Volume threshold")->required()->check(CLI::PositiveNumber);
    sub->add_option("--budget", f.budget, "Candidate cap");
    sub->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--out", f.out_path, "Write output to a file (CSV when it ends in .csv)");
    sub->add_flag("--csv", f.csv, "CSV output");
    sub->add_flag("--float", f.with_float, "Add the exact value column");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    err << "error: " << error_code_name(ErrorCode::InvalidArgument) << ": " << msg << '\n';
    return kError;
  }

  if (version) {
    out << kVersion << '\n';
    return kOk;
  }
  const auto subs = app.get_subcommands();
  if (subs.empty()) {
    err << "error: " << error_code_name(ErrorCode::InvalidArgument) << ": no command given\n";
    return kError;
  }

  try {
    return execute(subs.front()->get_name(), f, out);
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << error_code_name(ErrorCode::InvalidArgument) << ": " << e.what() << '\n';
  }
  return kError;
}

}  // namespace toricvol::cli
