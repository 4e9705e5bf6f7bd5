#include "aztec/krawtchouk.hpp"

#include <stdexcept>

namespace aztec {

bool DiscreteWeight::symmetric() const {
  for (int i = 0, j = size() - 1; i < j; ++i, --j)
    if (w[static_cast<size_t>(i)] != w[static_cast<size_t>(j)]) return false;
  return true;
}

BigRat poly_eval(const MonicPoly& p, const BigRat& x) {
  BigRat acc(0);
  for (size_t i = p.coeff.size(); i-- > 0;) acc = acc * x + p.coeff[i];
  return acc;
}

bool poly_alternating_parity(const MonicPoly& p, const BigRat& m) {
  const int deg = p.degree();
  // evaluate on a few symmetric offsets; degree+1 points pin the polynomial
  for (int k = 1; k <= deg + 1; ++k) {
    BigRat u(k, 2);
    BigRat left = poly_eval(p, m - u);
    BigRat right = poly_eval(p, m + u);
    if (deg % 2 == 0 ? left != right : left != -right) return false;
  }
  return true;
}

BigRat inner_product(const DiscreteWeight& weight, const MonicPoly& p,
                     const MonicPoly& q) {
  BigRat acc(0);
  for (int x = weight.a; x <= weight.b; ++x) {
    BigRat bx(x);
    acc += weight.at(x) * poly_eval(p, bx) * poly_eval(q, bx);
  }
  return acc;
}

OrthogonalFamily gram_schmidt(const DiscreteWeight& weight, int max_degree) {
  if (max_degree >= weight.size())
    throw std::invalid_argument("gram_schmidt: degree exceeds support rank");
  OrthogonalFamily fam;
  for (int k = 0; k <= max_degree; ++k) {
    MonicPoly p;
    p.coeff.assign(static_cast<size_t>(k) + 1, BigRat(0));
    p.coeff[static_cast<size_t>(k)] = 1;  // monomial x^k
    for (int j = 0; j < k; ++j) {
      BigRat c = inner_product(weight, p, fam.polys[static_cast<size_t>(j)]) /
                 fam.norms[static_cast<size_t>(j)];
      const auto& pj = fam.polys[static_cast<size_t>(j)].coeff;
      for (size_t i = 0; i < pj.size(); ++i) p.coeff[i] -= c * pj[i];
    }
    BigRat norm = inner_product(weight, p, p);
    if (norm == 0)
      throw std::invalid_argument("gram_schmidt: rank-deficient weight");
    fam.polys.push_back(std::move(p));
    fam.norms.push_back(std::move(norm));
  }
  return fam;
}

DiscreteWeight krawtchouk_weight(int N) {
  DiscreteWeight w;
  w.a = 0;
  w.b = N;
  BigRat scale = pow2_rat(-N);
  for (int x = 0; x <= N; ++x)
    w.w.push_back(scale / BigRat(factorial(x) * factorial(N - x)));
  return w;
}

BigRat krawtchouk_norm(int N, int a) {
  return BigRat(factorial(a)) / (BigRat(pow2(2 * a)) * BigRat(factorial(N - a)));
}

bool krawtchouk_norm_check(int N, int a_max) {
  if (a_max > N) throw std::invalid_argument("krawtchouk_norm_check: a_max <= N");
  auto fam = gram_schmidt(krawtchouk_weight(N), a_max);
  for (int a = 0; a <= a_max; ++a)
    if (fam.norms[static_cast<size_t>(a)] != krawtchouk_norm(N, a)) return false;
  return true;
}

DiscreteWeight shifted_half_weight(int M) {
  DiscreteWeight w;
  w.a = -M;
  w.b = M + 1;
  BigRat scale = pow2_rat(-(2 * M + 1));
  for (int t = -M; t <= M + 1; ++t)
    w.w.push_back(scale / BigRat(factorial(t + M) * factorial(M + 1 - t)));
  return w;
}

OrthogonalFamily shifted_family(int M, int degree) {
  return gram_schmidt(shifted_half_weight(M), degree);
}

BigRat type_b_constant_odd(int M, int n) {
  BigRat c(pow2(2L * M * n));
  for (int j = 0; j < n; ++j)
    c *= BigRat(factorial(2 * j)) /
         (BigRat(pow2(4L * j)) * BigRat(factorial(2 * (M - j) + 1)));
  return c;
}

BigRat type_b_constant_even(int M, int n) {
  BigRat c(pow2(2L * M * n));
  for (int j = 0; j < n; ++j)
    c *= BigRat(factorial(2 * j + 1)) /
         (BigRat(pow2(4L * j + 2)) * BigRat(factorial(2 * M - 2 * j)));
  return c;
}

BigRat type_b_sum(int M, int n, bool with_factor) {
  if (n < 1 || n > 4 || M > 6)
    throw budget_error("type_b_sum: exhaustive budget is n <= 4, M <= 6");
  std::vector<int> x(static_cast<size_t>(n), 1);
  BigRat total(0);
  while (true) {
    BigRat term(1);
    for (int i = 0; i < n; ++i)
      term /= BigRat(factorial(M + x[static_cast<size_t>(i)]) *
                     factorial(M + 1 - x[static_cast<size_t>(i)]));
    // Delta over the squared shifted variables (x_i - 1/2)^2
    BigRat delta(1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        BigRat ui = BigRat((2 * x[static_cast<size_t>(i)] - 1) *
                           (2 * x[static_cast<size_t>(i)] - 1), 4);
        BigRat uj = BigRat((2 * x[static_cast<size_t>(j)] - 1) *
                           (2 * x[static_cast<size_t>(j)] - 1), 4);
        delta *= ui - uj;
      }
    term *= delta * delta;
    if (with_factor)
      for (int i = 0; i < n; ++i) {
        BigRat f(2 * x[static_cast<size_t>(i)] - 1, 2);
        term *= f * f;
      }
    total += term;
    int carry = n - 1;
    while (carry >= 0 && x[static_cast<size_t>(carry)] == M + 1) {
      x[static_cast<size_t>(carry)] = 1;
      --carry;
    }
    if (carry < 0) break;
    ++x[static_cast<size_t>(carry)];
  }
  return total;
}

bool type_b_identities_hold(int M, int n) {
  BigRat odd_sum = type_b_sum(M, n, false);
  BigRat even_sum = type_b_sum(M, n, true);
  BigRat nf(factorial(n));
  if (odd_sum != nf * type_b_constant_odd(M, n)) return false;
  if (even_sum != nf * type_b_constant_even(M, n)) return false;
  // same constants through the Gram-Schmidt norms of the shifted family
  auto fam = shifted_family(M, 2 * n - 1);
  BigRat even_norms(1), odd_norms(1);
  for (int j = 0; j < n; ++j) {
    even_norms *= fam.norms[static_cast<size_t>(2 * j)];
    odd_norms *= fam.norms[static_cast<size_t>(2 * j + 1)];
  }
  BigRat halved(pow2(2L * M * n));
  if (odd_sum != nf * halved * even_norms) return false;
  if (even_sum != nf * halved * odd_norms) return false;
  return true;
}

}  // namespace aztec
