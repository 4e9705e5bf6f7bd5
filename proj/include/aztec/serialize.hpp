// Wire formats: JSON for tilings and particle systems, SVG renderings
// (shaded dominoes, particle dots, the path family, arctic overlay), and the
// arctic CSV table.  Outputs are deterministic for a fixed input.
#pragma once

#include <string>

#include "json.hpp"

#include "aztec/asymptotics.hpp"
#include "aztec/half.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kSvgUnit = 20;  // pixels per lattice unit

nlohmann::ordered_json tiling_to_json(const DominoTiling& tiling);
DominoTiling tiling_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json system_to_json(const ParticleSystem& system);
ParticleSystem system_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json half_system_to_json(const HalfParticleSystem& system);
HalfParticleSystem half_system_from_json(const nlohmann::ordered_json& j);

// Tiling rendering; optionally overlays particles and the path family.
std::string svg_tiling(const DominoTiling& tiling, bool particles, bool paths);

// Tiling with the limiting circle overlaid.
std::string svg_arctic_overlay(const DominoTiling& tiling);

// Arctic CSV: header comment carries the schema version and config; rows are
// s, a_theory, b_theory, a_emp, b_emp.
struct ArcticRow {
  double s, a_theory, b_theory, a_emp, b_emp;
};
std::string csv_arctic(const std::string& config_line,
                       const std::vector<ArcticRow>& rows);

// Fixed-format decimal used in CSV/SVG output (deterministic).
std::string format_double(double v);

}  // namespace aztec
