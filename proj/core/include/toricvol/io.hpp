#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toricvol/bounds.hpp"
#include "toricvol/enumerate.hpp"
#include "toricvol/polytope.hpp"
#include "toricvol/santalo.hpp"
#include "toricvol/toric.hpp"

namespace toricvol {

enum class InputKind { Polytope, Cone };

/// Polytope files carry "vertices" (or "points"); cone files carry "rays".
InputKind detect_input_kind(std::string_view json_text);

/// {"dim": n, "vertices": [[...], ...]} with integer or "p/q" entries.
/// Floats are rejected with ParseError.
std::vector<RatVector> parse_points(std::string_view json_text);
Polytope parse_polytope(std::string_view json_text);

/// {"dim": d, "rays": [[...], ...], "label": "..."}.
ToricCone parse_cone(std::string_view json_text);

/// Throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

struct EmitOptions {
  bool with_float = false;  ///< add decimal companions next to exact values
};

std::string polytope_json(const Polytope& p, const EmitOptions& options = {});
std::string cone_json(const ToricCone& cone);
std::string volume_json(const Polytope& p, const EmitOptions& options = {});
std::string santalo_json(const SantaloResult& r, const Polytope& p, const EmitOptions& options = {});
std::string normalized_volume_json(const ToricCone& cone, const NormalizedVolumeResult& r,
                                   const GridMinimum* cross_check = nullptr,
                                   const EmitOptions& options = {});
std::string radon_json(const std::vector<RadonPartition>& parts);
std::string reports_json(const std::vector<BoundReport>& reports);
std::string reports_csv(const std::vector<BoundReport>& reports);
std::string entries_json(const EnumerationJob& job, const std::vector<SpectrumEntry>& entries);
/// Columns: normal_form_key, ell, rays, volume_lower, volume_upper, passes_rdp, passes_bs.
std::string entries_csv(const std::vector<SpectrumEntry>& entries, const EmitOptions& options = {});
std::string spectrum_json(const EnumerationJob& job, const std::vector<SpectrumValue>& values);

/// Reals are written with 17 significant digits.
std::string format_real(const Real& x);

}  // namespace toricvol
