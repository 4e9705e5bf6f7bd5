// Large-order objects: log-densities of the GUE-star and anti-symmetric GUE
// minor processes, pointwise scaling-limit error of the lattice laws against
// them, log-gas support equations, and the arctic boundary curves with their
// Monte Carlo verification helpers.  Everything here is floating point; all
// factorials go through lgamma.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "aztec/combinatorics.hpp"
#include "aztec/half.hpp"

namespace aztec {

// Joint log-density of the first n GUE-star minor eigenvalue lines
// (line j holds j values, descending).  -inf off the strict interlacing set.
double gue_minor_logpdf(const std::vector<std::vector<double>>& z_lines);

// Joint log-density of the positive minor eigenvalues of the anti-symmetric
// ensemble, lines 1..n where line j holds floor(j/2) positive values (odd
// lines carry an implicit zero).  -inf off the interlacing set.
double agum_minor_logpdf(const std::vector<std::vector<double>>& x_lines);

// Normalization of the level-n density; the odd-n power of two differs from
// a transcribed value and is pinned by the quadrature oracle.
double agum_log_norm(int n);

// Log of the hole-side joint law of lines 1..n (lattice, log-gamma form).
// -inf on invalid configurations.
double y_joint_logpdf(int N, std::span<const LineConfig> hole_lines);
double half_y_logpdf(int M, std::span<const LineConfig> hole_lines);

// One scaling-limit comparison configuration: z-lines as passed to the
// corresponding minor log-density.
using ZGrid = std::vector<std::vector<std::vector<double>>>;

// Sup over the grid of |log(lattice mass * cell volume^-1) - minor log pdf|,
// where each z maps to the lattice through y = round((z sqrt(N) + N)/2) and
// the minor density is evaluated at the lattice points mapped back.
double scaling_limit_error(int n, int N, const ZGrid& grid);

// Half-diamond analogue: grid lines j=1..n map through y = round(z sqrt(M))
// and are compared against the anti-symmetric minor law on lines 1..n+1.
double half_scaling_limit_error(int n, int M, const ZGrid& grid);

// Arctic boundary of the full diamond, scaled support of line s = n/N.
struct Boundary {
  double a, b;
};
Boundary arctic_boundary(double s);

// Half-diamond boundary (support is [0, a(s)] in the folded coordinate).
double half_boundary(double s);

// Closed-form half-width c(s) solving the support equation, s in [0, 1/2].
double support_half_width(double s);

// Residual of the support integral at half-width c and line label s:
// integral_{-c}^{c} u log(1+2u)/sqrt(c^2-u^2) du - pi s, computed by adaptive
// quadrature after the square-root substitution u = c sin(theta).
double support_integral_residual(double c, double s);

// Adaptive Gauss-Kronrod integration to absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

// Seeded collection of sampled configurations; keeps per-line extremes and
// occupancy counts.  Lines may also be populated individually (per-line
// samplers), in which case only the populated lines carry statistics.
struct EmpiricalEnsemble {
  int order = 0;
  bool half = false;
  uint64_t seed = 0;
  int sample_count = 0;
  std::vector<std::vector<int>> line_min;  // [line-1][sample]
  std::vector<std::vector<int>> line_max;
  std::vector<std::vector<long>> occupancy;  // [line-1][position]

  void init_full(int N);
  void init_half(int M);
  void add(const ParticleSystem& sys);
  void add(const HalfParticleSystem& sys);
  void add_line(const LineConfig& line);  // after init_full/init_half
};

// Scaled support band of one line: the eps and 1-eps quantiles of the
// per-sample extreme positions (t = x/N, or t = (x-1/2)/M for the half).
// Requires at least 30 samples on that line.
struct SupportBand {
  double lo, hi;
};
SupportBand empirical_support(const EmpiricalEnsemble& ens, int line,
                              double eps);

}  // namespace aztec
