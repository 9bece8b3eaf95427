#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricvol/polytope.hpp"
#include "toricvol/toric.hpp"

namespace toricvol {

/// Search parameters for singularities with vol^ > epsilon.
///
/// Caps come from the proof-consistent volume/index bounds:
///   ell <= ((d-1)!)^2 omega_{d-1}^2 / epsilon
///   (d-1)! vol(P) <= ((d-1)!)^2 omega_{d-1}^2 / (ell epsilon)
struct EnumerationJob {
  int d = 2;
  double epsilon = 1.0;
  long long max_index = 1;
  Rational max_volume;                  ///< cap on vol(P) at ell = 1
  std::vector<long long> volume_caps;   ///< lattice-volume cap per ell, entry ell - 1
  long long box_side = 1;               ///< search box half-width for polygon growth
  std::uint64_t budget = 10'000'000;    ///< candidate cap before BudgetExceeded
  int jobs = 1;
  bool proof_consistent_only = true;    ///< audit flag: caps never use the printed constants
  std::string notes;
};

EnumerationJob make_job(int d, double epsilon, std::uint64_t budget = 10'000'000, int jobs = 1);

/// Job with every cap and the box doubled, for saturation checks.
EnumerationJob doubled(const EnumerationJob& job);

struct PolygonEnumeration {
  std::vector<Polytope> polygons;   ///< one representative per class, by (lattice volume, key)
  std::vector<std::string> keys;
  std::uint64_t candidates = 0;
  std::uint64_t box_clipped = 0;    ///< growth points discarded by the box only
};

/// Lattice polygons with lattice volume <= max_lattice_volume up to affine
/// unimodular equivalence. box_side <= 0 selects 2 * 2! * max_lattice_volume.
PolygonEnumeration enumerate_polygons_detailed(long long max_lattice_volume, long long box_side = 0,
                                               std::uint64_t budget = 10'000'000);
std::vector<Polytope> enumerate_polygons(long long max_lattice_volume);

struct SpectrumEntry {
  std::string normal_form_key;  ///< GL(d, Z) key of the rays
  std::string polytope_key;     ///< affine normal form of the height polytope
  long long ell = 1;
  Real volume_value;
  Real volume_lower;
  Real volume_upper;
  Rational exact_upper;
  bool exact = false;
  std::vector<IntVector> representative_rays;
  bool passes_rdp = false;
  bool passes_bs = false;
};

struct EnumerationResult {
  std::vector<SpectrumEntry> entries;  ///< descending by volume, ties by key
  std::uint64_t candidates = 0;
  std::uint64_t box_clipped = 0;
};

EnumerationResult enumerate_singularities_detailed(const EnumerationJob& job);
std::vector<SpectrumEntry> enumerate_singularities(const EnumerationJob& job);

struct SpectrumValue {
  Real value;
  std::optional<Rational> exact;
  int multiplicity = 0;
  Real gap;  ///< distance to the next larger value (0 for the largest)
};

std::vector<SpectrumValue> volume_spectrum(const std::vector<SpectrumEntry>& entries);
std::vector<SpectrumValue> volume_spectrum(const EnumerationJob& job);

std::string spectrum_csv(const std::vector<SpectrumValue>& values);

/// Keys found by the doubled job but not by the job itself.
std::vector<std::string> saturation_new_keys(const EnumerationJob& job);

}  // namespace toricvol
