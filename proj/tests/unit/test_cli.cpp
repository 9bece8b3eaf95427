#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "test_support.hpp"
#include "toricvol/io.hpp"

using namespace toricvol;
using namespace toricvol::testing;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cone_file(const char* name) { return data_path(std::string("cones/") + name + ".json"); }
std::string poly_file(const char* name) { return data_path(std::string("polytopes/") + name + ".json"); }

}  // namespace

TEST(Cli, NormvolA1) {
  auto r = call({"normvol", cone_file("a1_surface")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["value"].get<double>(), 2.0);
  EXPECT_EQ(j["bracket"][0].get<double>(), 2.0);
  EXPECT_EQ(j["bracket"][1].get<double>(), 2.0);
  EXPECT_EQ(j["exact_upper"], "2");
}

TEST(Cli, NormvolCrossCheck) {
  auto r = call({"normvol", cone_file("one_third_11"), "--cross-check"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["exact_upper"], "4/3");
  EXPECT_TRUE(j["cross_check"]["agrees"].get<bool>());
}

TEST(Cli, NotQGorensteinDiagnostic) {
  auto r = call({"normvol", cone_file("not_qgor")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: NotQGorenstein: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, VerifyQuadricRdpEquality) {
  auto r = call({"verify", cone_file("quadric3"), "--suite", "rdp"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_TRUE(j[0]["equality"].get<bool>());
  EXPECT_TRUE(j[0]["holds"].get<bool>());
}

TEST(Cli, VerifyAllPassesOnCorpus) {
  for (const auto& entry : std::filesystem::directory_iterator(data_path("cones"))) {
    const auto name = entry.path().stem().string();
    if (name == "not_qgor" || name == "not_pointed") continue;
    auto r = call({"verify", entry.path().string()});
    EXPECT_EQ(r.code, 0) << name << ": " << r.err << r.out;
  }
}

TEST(Cli, VerifyCsvHasHeader) {
  auto r = call({"verify", cone_file("a1_surface"), "--csv", "--suite", "euler"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("name,lhs,rhs,holds,strict,equality,informational,notes\n", 0), 0u);
}

TEST(Cli, VerifyPolytopeSuites) {
  auto r = call({"verify", poly_file("radon_square"), "--suite", "partition"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["lhs"].get<double>(), 8.0);
}

TEST(Cli, HullDualVolume) {
  auto h = call({"hull", poly_file("square_with_centre")});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(json::parse(h.out)["vertices"].size(), 4u);
  auto d = call({"dual", poly_file("centred_simplex2")});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json::parse(d.out)["volume"], "27/2");
  auto v = call({"volume", poly_file("unit_cube")});
  EXPECT_EQ(json::parse(v.out)["lattice_volume"], "6");
  auto bad = call({"dual", poly_file("simplex2")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("error: OriginNotInterior: ", 0), 0u);
}

TEST(Cli, HullRoundTrip) {
  auto h = call({"hull", poly_file("centred_simplex2")});
  ASSERT_EQ(h.code, 0);
  auto reparsed = parse_polytope(h.out);
  auto original = parse_polytope(read_file(poly_file("centred_simplex2")));
  EXPECT_EQ(reparsed.vertices(), original.vertices());
}

TEST(Cli, SantaloSchemaAndSeed) {
  auto r = call({"santalo", poly_file("pyramid3")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j.contains("point"));
  EXPECT_TRUE(j["dual_volume"].is_string());
  EXPECT_TRUE(j.contains("residual"));
  auto s1 = call({"santalo", poly_file("pyramid3"), "--seed", "5"});
  auto s2 = call({"santalo", poly_file("pyramid3"), "--seed", "5"});
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_LT(std::abs(json::parse(s1.out)["mahler"].get<double>() - j["mahler"].get<double>()), 1e-9);
}

TEST(Cli, Radon) {
  auto r = call({"radon", poly_file("triangle_interior_point")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j[0]["p"], 0);
  EXPECT_EQ(j[0]["radon_point"], json::array({"1", "1"}));
}

TEST(Cli, EnumerateCsvColumnsAndDeterminism) {
  auto a = call({"enumerate", "--dim", "2", "--epsilon", "0.5", "--csv"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.rfind("normal_form_key,ell,rays,volume_lower,volume_upper,passes_rdp,passes_bs\n", 0), 0u);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1 + 1 + 1 + 2 + 2 + 3 + 2 + 4);
  auto b = call({"enumerate", "--dim", "2", "--epsilon", "0.5", "--csv", "--jobs", "2"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EnumerateWritesFile) {
  auto path = (std::filesystem::temp_directory_path() / "toricvol_cli_spectrum.csv").string();
  auto r = call({"enumerate", "--dim", "3", "--epsilon", "8", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path).rfind("normal_form_key,", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, Spectrum) {
  auto r = call({"spectrum", "--dim", "2", "--epsilon", "0.5"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["values"].size(), 7u);
  EXPECT_EQ(j["values"][6]["exact"], "4/7");
}

TEST(Cli, RejectsUnknownFlagsAndBadInput) {
  auto r = call({"normvol", cone_file("a1_surface"), "--frobnicate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: InvalidArgument: ", 0), 0u);
  auto f = call({"hull", poly_file("float_vertices")});
  EXPECT_EQ(f.code, 1);
  EXPECT_EQ(f.err.rfind("error: ParseError: ", 0), 0u);
  auto missing = call({"hull", "/nonexistent/file.json"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err.rfind("error: IoError: ", 0), 0u);
  EXPECT_EQ(call({"enumerate", "--dim", "4", "--epsilon", "1"}).code, 1);
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"bogus"}).code, 1);
}

TEST(Cli, Version) {
  auto r = call({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "toricvol 0.3.0\n");
}

TEST(Cli, DegenerateAndNotPointed) {
  auto d = call({"hull", poly_file("planar_in_3d")});
  EXPECT_EQ(d.err.rfind("error: DegenerateInput: ", 0), 0u);
  auto p = call({"normvol", cone_file("not_pointed")});
  EXPECT_EQ(p.err.rfind("error: NotPointed: ", 0), 0u);
}
