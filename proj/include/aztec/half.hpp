// The half Aztec diamond: counting, the 2M-line interlaced particle system
// with its joint/tail/one-line laws, and the hole-side forms.
//
// Line pattern: lines 2n-1 and 2n (n = 1..M) each hold n particles at lattice
// positions 1..M+1.  Between equal-count lines, particle i satisfies
// x_{i+1}^{(2n)} <= x_i^{(2n-1)} <= x_i^{(2n)} with the missing bottom bound
// replaced by the lattice floor 1.
#pragma once

#include <functional>
#include <span>

#include "aztec/combinatorics.hpp"

namespace aztec {

struct HalfParticleSystem {
  int order = 0;                  // M
  std::vector<LineConfig> lines;  // lines 1..2M

  HalfParticleSystem() = default;
  HalfParticleSystem(int order_m, std::vector<LineConfig> ls);
  bool valid() const;
};

// Number of particles expected on line j (j = 1..2M).
int half_line_count(int j);

// Tilings of the half diamond of order M: 2^{M(M+1)}.
BigInt count_half(int M);

// Symmetric tilings of the full diamond of order 2(M+1): H_M * 2^{M+1}.
BigInt count_symmetric(int M);

// Tilings mapping to one half system: 2^{M^2 - alpha(lines 1..2M-1)}.
BigInt half_config_weight(const HalfParticleSystem& system);

// Joint probability of a full 2M-line system: 2^{-(M + alpha)} on valid chains.
BigRat half_joint_pdf(const HalfParticleSystem& system);

// Normalizations for the tail marginals.
BigRat half_norm_odd(int n, int M);   // start line 2n-1
BigRat half_norm_even(int n, int M);  // start line 2n

// Marginal of lines j..2M.  Odd start 2n-1: Delta*S / (H 2^alpha);
// even start 2n: Delta*S*prod(x_i - 1/2) / (H 2^alpha).
BigRat half_tail_pdf(int M, std::span<const LineConfig> tail);

// Joint law of hole lines 1..r (complements of particle lines 2M..2M+1-r).
BigRat half_y_pdf(int M, std::span<const LineConfig> hole_lines);

// One-line law of hole line j (odd j: squared Delta*S with the factorial
// weight; even j: the extra squared half-integer product).
BigRat half_one_line_pdf(int j, int M, std::span<const int> positions);

// Constant prefactor of the one-line law (the inverse of the corresponding
// summation-identity constant).
BigRat half_one_line_prefactor(int j, int M);

// Per-line complement over {1..M+1}, lines relabelled right to left.
HalfParticleSystem half_complement(const HalfParticleSystem& system);

// Complements of a particle tail (lines j0..2M) as hole lines 1..2M+1-j0.
std::vector<LineConfig> half_hole_lines(int M, std::span<const LineConfig> tail);

// Symmetric-tiling constraint on a full-diamond system of order 2(M+1): a
// particle at x on line j forbids a particle at x on line N+1-j.
bool symmetric_constraint_holds(const ParticleSystem& system);

// Visits every valid order-M half system.
void for_each_half_system(
    int M, const std::function<void(const HalfParticleSystem&)>& fn);

}  // namespace aztec
