#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aztec/krawtchouk.hpp"
#include "aztec/rng.hpp"

using namespace aztec;

TEST_CASE("degree zero and the total weight") {
  auto w = krawtchouk_weight(4);
  auto fam = gram_schmidt(w, 0);
  CHECK(fam.polys[0].coeff == std::vector<BigRat>{BigRat(1)});
  BigRat total(0);
  for (int x = 0; x <= 4; ++x) total += w.at(x);
  CHECK(fam.norms[0] == total);
  CHECK(fam.norms[0] == rat(1, 24));  // 1/N!
}

TEST_CASE("norm formula holds exactly") {
  CHECK(krawtchouk_norm(3, 0) == rat(1, 6));
  CHECK(krawtchouk_norm_check(3, 3));
  CHECK(krawtchouk_norm_check(5, 5));
  CHECK(krawtchouk_norm_check(8, 8));
}

TEST_CASE("orthogonality is exact") {
  auto fam = gram_schmidt(krawtchouk_weight(6), 6);
  auto w = krawtchouk_weight(6);
  for (size_t i = 0; i < fam.polys.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      CHECK(inner_product(w, fam.polys[i], fam.polys[j]) == 0);
}

TEST_CASE("degree beyond the support rank is rejected") {
  CHECK_THROWS_AS(gram_schmidt(krawtchouk_weight(3), 4), std::invalid_argument);
}

TEST_CASE("parity alternates about the midpoint for symmetric weights") {
  auto w = krawtchouk_weight(7);
  CHECK(w.symmetric());
  auto fam = gram_schmidt(w, 6);
  for (int j = 0; j <= 6; ++j)
    CHECK(poly_alternating_parity(fam.polys[static_cast<size_t>(j)], w.midpoint()));
}

TEST_CASE("shifted half-lattice weight and family") {
  for (int M = 1; M <= 4; ++M) {
    auto w = shifted_half_weight(M);
    CHECK(w.a == -M);
    CHECK(w.b == M + 1);
    CHECK(w.symmetric());
    CHECK(w.midpoint() == rat(1, 2));
  }
  auto fam = shifted_family(1, 2);
  CHECK(fam.norms[0] == rat(1, 6));
  // norms match the straight family of matching support size
  auto fam5 = shifted_family(2, 5);
  for (int a = 0; a <= 5; ++a)
    CHECK(fam5.norms[static_cast<size_t>(a)] == krawtchouk_norm(5, a));
  // parity about 1/2
  auto w3 = shifted_half_weight(3);
  auto fam3 = gram_schmidt(w3, 6);
  for (int j = 0; j <= 6; ++j)
    CHECK(poly_alternating_parity(fam3.polys[static_cast<size_t>(j)], rat(1, 2)));
}

TEST_CASE("summation identity constants, small cases by hand") {
  // n = 1, M = 1: sum_x 1/((1+x)!(2-x)!) over x = 1,2 equals C_1
  CHECK(type_b_sum(1, 1, false) == rat(1, 2) + rat(1, 6));
  CHECK(type_b_constant_odd(1, 1) == rat(2, 3));
  CHECK(type_b_sum(1, 1, false) == type_b_constant_odd(1, 1));
  // n = 1, M = 2 with the squared half-integer factor
  CHECK(type_b_sum(2, 1, true) == type_b_constant_even(2, 1));
}

TEST_CASE("summation identities hold across the budget") {
  for (int M = 1; M <= 4; ++M)
    for (int n = 1; n <= std::min(3, M); ++n) CHECK(type_b_identities_hold(M, n));
}

TEST_CASE("squared-variable determinant identity on random points") {
  RngStream rng(31, 0);
  auto w = krawtchouk_weight(8);
  auto fam = gram_schmidt(w, 8);
  BigRat m = w.midpoint();  // 4
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      // distinct integer points
      std::vector<int> xs;
      while (static_cast<int>(xs.size()) < n) {
        int c = static_cast<int>(rng.next_u64() % 9);
        bool dup = false;
        for (int v : xs) dup |= v == c;
        if (!dup) xs.push_back(c);
      }
      // Vandermonde in the squared variables: det[u_i^{j-1}] = prod_{i<j}(u_j - u_i)
      BigRat lhs(1);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          BigRat ui = (BigRat(xs[static_cast<size_t>(i)]) - m) *
                      (BigRat(xs[static_cast<size_t>(i)]) - m);
          BigRat uj = (BigRat(xs[static_cast<size_t>(j)]) - m) *
                      (BigRat(xs[static_cast<size_t>(j)]) - m);
          lhs *= uj - ui;
        }
      std::vector<std::vector<BigRat>> mat(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          mat[static_cast<size_t>(i)].push_back(
              poly_eval(fam.polys[static_cast<size_t>(2 * j)],
                        BigRat(xs[static_cast<size_t>(i)])));
      CHECK(exact_det(mat) == lhs);
    }
  }
}
