// Domino tilings of the Aztec diamond and their bijections with interlaced
// particle systems and non-intersecting lattice paths.
//
// Geometry conventions (this module owns them; all distributional results are
// invariant under the reflection ambiguity):
//  - square (sx, sy) is the unit square [sx, sx+1) x [sy, sy+1);
//  - the order-N diamond holds the squares with reach(sx) + reach(sy) <= N+1,
//    where reach(t) = t >= 0 ? t+1 : -t;
//  - a square is black iff sx + sy + N is odd (the top-left square is white);
//  - particle line k (1..N) is the black anti-diagonal sy - sx = N+1-2k, and
//    the black square at position x on line k is (x+k-N-1, x-k).
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aztec/combinatorics.hpp"

namespace aztec {

enum class DominoType { east, west, south, north };

// A domino anchored at its lower-left covered square.
struct Domino {
  int x = 0, y = 0;
  bool horizontal = true;
  DominoType type = DominoType::east;

  bool operator==(const Domino&) const = default;
};

struct DominoTiling {
  int order = 0;
  std::vector<Domino> dominoes;  // canonical order: by (y, x, horizontal)

  bool operator==(const DominoTiling&) const = default;
};

// Lattice path vertex; y is stored doubled so midpoints stay integral.
struct PathPoint {
  int x = 0;
  int y2 = 0;  // 2*y + 1 for a left-edge midpoint at height y + 1/2
  bool operator==(const PathPoint&) const = default;
};

struct PathFamily {
  int order = 0;
  std::vector<std::vector<PathPoint>> paths;
};

// --- region geometry --------------------------------------------------------

int diamond_reach(int t);
bool in_diamond(int order, int sx, int sy);
bool square_is_black(int order, int sx, int sy);

// Black square carrying the particle at (line k, position x).
std::pair<int, int> particle_square(int order, int k, int x);

// Inverse of particle_square; expects a black square.
std::pair<int, int> particle_coords(int order, int sx, int sy);

// Type of a domino from the checkerboard colouring (E/S are the shaded ones).
DominoType classify_domino(int order, int x, int y, bool horizontal);

// Sorts dominoes canonically and validates exact coverage of the diamond.
DominoTiling make_tiling(int order, std::vector<Domino> dominoes);

// --- bijections --------------------------------------------------------------

// Reads the shaded (E/S) dominoes off the tiling; line k yields k particles.
ParticleSystem particles_from_tiling(const DominoTiling& tiling);

// Rebuilds the unique tiling determined by a particle system together with
// one orientation bit per non-adjacent particle below the last line, ordered
// lexicographically by (line, particle index); bit 0 = horizontal (E),
// bit 1 = vertical (S).
DominoTiling reconstruct_tiling(const ParticleSystem& system,
                                const std::vector<bool>& orientation_bits);

// Extracts the orientation bits realized by `tiling` over `system`.
std::vector<bool> orientation_bits(const DominoTiling& tiling,
                                   const ParticleSystem& system);

// All tilings mapping to `system` (size 2^{free bits}).
std::vector<DominoTiling> tiling_fiber(const ParticleSystem& system);

// Per-line set complement y^{(N+1-n)} = {0..N} \ x^{(n)}; an involution.
ParticleSystem hole_complement(const ParticleSystem& system);

// Non-intersecting path family threading the E/N/S dominoes.
PathFamily paths_from_tiling(const DominoTiling& tiling);

// --- independent enumeration (oracle; no particle machinery) ----------------

// Counts tilings of the order-N diamond by direct exact-cover backtracking
// (N <= 6) or by transfer-matrix frontier dynamic programming (N <= 16).
// When `visit` is given, streams every tiling (N <= 6 only).
BigInt enumerate_tilings(
    int order, const std::function<void(const DominoTiling&)>* visit = nullptr);

}  // namespace aztec
