// Shared test helpers: chi-square goodness-of-fit machinery and brute-force
// conditional tables kept independent of the sampler kernel.
#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "aztec/combinatorics.hpp"

namespace aztec_test {

// Regularized lower incomplete gamma P(a, x).
inline double gamma_p(double a, double x) {
  if (x <= 0) return 0;
  if (x < a + 1.0) {  // series
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  // continued fraction for Q(a, x)
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
  return 1.0 - q;
}

inline double chi_square_cdf(double x, double dof) {
  return gamma_p(dof / 2.0, x / 2.0);
}

// Pearson goodness-of-fit: observed counts vs exact probabilities, small
// cells pooled to expected >= 5.  Returns the CDF value of the statistic
// (test at 99%: require <= 0.99).
inline double chi_square_test(const std::vector<long>& observed,
                              const std::vector<double>& probs, long total) {
  double stat = 0;
  long pooled_obs = 0;
  double pooled_exp = 0;
  int cells = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    double e = probs[i] * static_cast<double>(total);
    if (e < 5.0) {
      pooled_obs += observed[i];
      pooled_exp += e;
      continue;
    }
    double d = static_cast<double>(observed[i]) - e;
    stat += d * d / e;
    ++cells;
  }
  if (pooled_exp > 0) {
    double d = static_cast<double>(pooled_obs) - pooled_exp;
    stat += d * d / pooled_exp;
    ++cells;
  }
  if (cells < 2) return 0.0;
  return chi_square_cdf(stat, cells - 1);
}

// Brute-force conditional law of the line below `upper`: weights
// Delta(lower) * 2^{-adjacency} over every interlacing lower line, normalized.
// `equal_pair` selects the half-diamond equal-length pattern with bottom
// bound 1; `odd_factor` multiplies in prod (x_i - 1/2) (growth steps of the
// half chain carry it through the squared-variable structure).
struct ConditionalTable {
  std::vector<std::vector<int>> lines;  // descending positions
  std::vector<aztec::BigRat> probs;
};

inline ConditionalTable brute_conditional(const std::vector<int>& upper_desc,
                                          bool equal_pair, bool half_lattice) {
  using namespace aztec;
  ConditionalTable out;
  int lower_count = equal_pair ? static_cast<int>(upper_desc.size())
                               : static_cast<int>(upper_desc.size()) - 1;
  int bottom = half_lattice ? 1 : 0;
  BigRat total(0);
  for (auto& cand : lower_lines(upper_desc, lower_count, bottom)) {
    BigRat w(vandermonde(cand));
    if (half_lattice) w *= BigRat(sprod(cand));
    int alpha = adjacency_count(cand, upper_desc);
    w *= pow2_rat(-alpha);
    if (half_lattice && !equal_pair) {
      // growth step: the lower line carries the half-integer product
      for (int x : cand) w *= BigRat(2 * x - 1, 2);
    }
    if (w == 0) continue;
    out.lines.push_back(cand);
    out.probs.push_back(w);
    total += w;
  }
  for (auto& p : out.probs) p /= total;
  return out;
}

}  // namespace aztec_test
