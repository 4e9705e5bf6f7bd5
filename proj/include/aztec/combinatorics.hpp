// Shared combinatorial primitives for interlaced particle systems on the
// integer lattice: difference/sum products, adjacency counts, chain validity
// and configuration weights, plus exhaustive enumeration helpers.
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "aztec/exact.hpp"

namespace aztec {

// One line of a particle system.  Positions are stored strictly decreasing
// (x_1 > x_2 > ... ); constructors normalize and reject duplicates.
struct LineConfig {
  int line = 0;                // 1-based line index
  std::vector<int> positions;  // strictly decreasing

  LineConfig() = default;
  LineConfig(int line_index, std::vector<int> pos);

  int count() const { return static_cast<int>(positions.size()); }
  bool strictly_decreasing() const;
  bool within(int lo, int hi) const;

  bool operator==(const LineConfig&) const = default;
};

// prod_{i<j} (x_i - x_j).  Antisymmetric under swaps; zero iff two entries
// coincide (coincident inputs are legal).
BigInt vandermonde(std::span<const int> xs);

// prod_{i<j} (x_i + x_j - 1).  Symmetric; 1 for sequences of length <= 1.
BigInt sprod(std::span<const int> xs);

// True if `lower` interlaces below `upper`.  Supports both line patterns:
//  - |upper| == |lower| + 1:  up[i+1] <= low[i] <= up[i]
//  - |upper| == |lower|    :  up[i+1] <= low[i] <= up[i], with the missing
//                             bottom bound dropped (handled by lattice range)
bool lines_interlace(std::span<const int> lower, std::span<const int> upper);

// Number of particles on `lower` equal to one of their sandwiching positions
// on `upper` (each contributes at most 1).  Throws std::invalid_argument if
// the pair does not interlace or sizes are incompatible.
int adjacency_count(std::span<const int> lower, std::span<const int> upper);

// Sum of adjacency_count over consecutive pairs lines[i], lines[i+1].
int chain_adjacency(std::span<const LineConfig> lines);

// True iff every line is strictly decreasing within [lattice_min, lattice_max]
// (lattice_min is 0, or 1 when strict_lower is set) and every consecutive
// pair interlaces.
bool is_valid_chain(std::span<const LineConfig> lines, int lattice_max,
                    bool strict_lower = false);

// Full-diamond particle system of order N: lines 1..N, line k holding k
// particles at positions in 0..N.
struct ParticleSystem {
  int order = 0;
  std::vector<LineConfig> lines;

  ParticleSystem() = default;
  ParticleSystem(int order_n, std::vector<LineConfig> ls);
  bool valid() const;
};

// Number of distinct tilings mapping to this particle system:
// 2^{N(N-1)/2 - alpha(lines 1..N-1)}.  Throws on invalid chains.
BigInt config_weight(const ParticleSystem& system);

// Exponent N(N-1)/2 - alpha, i.e. the number of free orientation bits.
long free_bit_count(const ParticleSystem& system);

// --- enumeration helpers (exhaustive oracles, small order) -----------------

// All strictly decreasing n-element subsets of {lo..hi}, descending order.
std::vector<std::vector<int>> descending_subsets(int lo, int hi, int n);

// All lines that interlace below `upper`.  If |lower| == |upper| the bottom
// particle ranges down to bottom_min.
std::vector<std::vector<int>> lower_lines(std::span<const int> upper,
                                          int lower_count, int bottom_min);

// Visits every valid order-N particle system.
void for_each_system(int N, const std::function<void(const ParticleSystem&)>& fn);

}  // namespace aztec
