// Discrete orthogonal polynomials over exact rational weights: Gram-Schmidt
// construction, the symmetric binomial-type (Krawtchouk, p = 1/2) norms, the
// shifted half-lattice family, and the squared-variable summation identities
// with their closed-form constants.  Exact arithmetic throughout.
#pragma once

#include <span>
#include <vector>

#include "aztec/exact.hpp"

namespace aztec {

// Weight on the consecutive integer support a..b.
struct DiscreteWeight {
  int a = 0, b = 0;
  std::vector<BigRat> w;  // w[x - a] > 0

  int size() const { return b - a + 1; }
  const BigRat& at(int x) const { return w.at(static_cast<size_t>(x - a)); }
  BigRat midpoint() const { return BigRat(a + b, 2); }
  bool symmetric() const;  // w(m+u) == w(m-u)
};

struct MonicPoly {
  std::vector<BigRat> coeff;  // coeff[i] * x^i, leading coefficient 1

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
};

BigRat poly_eval(const MonicPoly& p, const BigRat& x);

// p has parity (-1)^degree about m, i.e. p(m+u) = (-1)^deg p(m-u).
bool poly_alternating_parity(const MonicPoly& p, const BigRat& m);

struct OrthogonalFamily {
  std::vector<MonicPoly> polys;  // degrees 0..max_degree
  std::vector<BigRat> norms;     // (p_k, p_k)
};

// Monic orthogonal family by Gram-Schmidt on the monomials; requires
// max_degree < support size (throws std::invalid_argument otherwise).
OrthogonalFamily gram_schmidt(const DiscreteWeight& weight, int max_degree);

// Exact inner product sum_x w(x) p(x) q(x).
BigRat inner_product(const DiscreteWeight& weight, const MonicPoly& p,
                     const MonicPoly& q);

// w(x) = 1 / (2^N x! (N-x)!) on 0..N.
DiscreteWeight krawtchouk_weight(int N);

// Closed-form norm a! / (2^{2a} (N-a)!).
BigRat krawtchouk_norm(int N, int a);

// Gram-Schmidt norms equal the closed form for a <= a_max.
bool krawtchouk_norm_check(int N, int a_max);

// Weight 1 / (2^{2M+1} (t+M)! (M+1-t)!) on t = -M..M+1, symmetric about 1/2.
DiscreteWeight shifted_half_weight(int M);

// Orthogonal family of the shifted weight (degrees 0..degree).
OrthogonalFamily shifted_family(int M, int degree);

// Closed-form constants of the halved-range summation identities.
BigRat type_b_constant_odd(int M, int n);   // C_{2n-1}
BigRat type_b_constant_even(int M, int n);  // C_{2n}

// Brute-force multi-sum over {1..M+1}^n of
//   prod_i w~(x_i) * Delta((x-1/2)^2)^2 * [prod_i (x_i-1/2)^2 if with_factor]
// with w~(x) = 1 / ((M+x)! (M+1-x)!).
BigRat type_b_sum(int M, int n, bool with_factor);

// Both summation identities at (M, n): brute sums equal n! * C and also
// n! * 2^{2Mn} * prod of the even/odd Gram-Schmidt norms.
bool type_b_identities_hold(int M, int n);

}  // namespace aztec
