// Closed-form exact probabilities for the full Aztec diamond particle system:
// joint law, tail marginals with their normalization constants, the hole-side
// joint law and the one-line law.  Invalid configurations get probability 0.
#pragma once

#include <span>

#include "aztec/combinatorics.hpp"

namespace aztec {

// Number of domino tilings of the order-N diamond: 2^{N(N+1)/2}.
BigInt count_tilings(int N);

// Joint probability of a full N-line system under the uniform tiling measure:
// 2^{N(N-1)/2 - alpha} / A_N on valid chains.
BigRat joint_pdf(const ParticleSystem& system);

// Normalization D_{m,N} = A_N 2^{-N(N-1)/2} prod_{i<m} i!.
BigRat tail_normalization(int m, int N);

// Marginal probability of lines m..N (tail.front().line == m must hold):
// Delta(x^{(m)}) / (D_{m,N} 2^{alpha(lines m..N-1)}).
BigRat tail_marginal_pdf(int N, std::span<const LineConfig> tail);

// Joint probability of hole lines 1..n (per-line complements of the particle
// lines N..N+1-n, relabelled right to left).
BigRat y_joint_pdf(int N, std::span<const LineConfig> hole_lines);

// Probability that line n of an order-N system sits exactly at `positions`
// (strictly decreasing in 0..N): squared difference product times the
// symmetric binomial-type weight.
BigRat one_line_pdf(int n, int N, std::span<const int> positions);

}  // namespace aztec
