#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "aztec/half.hpp"
#include "aztec/krawtchouk.hpp"
#include "aztec/verify.hpp"

using namespace aztec;

namespace {
HalfParticleSystem half_sys(int M, std::vector<std::vector<int>> ls) {
  std::vector<LineConfig> lines;
  int j = 1;
  for (auto& v : ls) lines.emplace_back(j++, v);
  return HalfParticleSystem(M, std::move(lines));
}
}  // namespace

TEST_CASE("half counts") {
  CHECK(count_half(1) == 4);
  CHECK(count_half(2) == 64);
  CHECK(count_symmetric(1) == 16);  // 2^{(M+1)^2}
  CHECK(count_symmetric(2) == 512);
}

TEST_CASE("half joint law at M = 1 by hand") {
  auto s11 = half_sys(1, {{1}, {1}});
  auto s12 = half_sys(1, {{1}, {2}});
  auto s22 = half_sys(1, {{2}, {2}});
  CHECK(half_joint_pdf(s11) == rat(1, 4));
  CHECK(half_joint_pdf(s12) == rat(1, 2));
  CHECK(half_joint_pdf(s22) == rat(1, 4));
  auto below_floor = half_sys(1, {{1}, {1}});
  below_floor.lines[0] = LineConfig(1, {0});
  CHECK(half_joint_pdf(below_floor) == 0);
}

TEST_CASE("half joint law sums to one for M <= 3") {
  for (int M = 1; M <= 3; ++M) {
    BigRat sum(0);
    long systems = 0;
    for_each_half_system(M, [&](const HalfParticleSystem& s) {
      sum += half_joint_pdf(s);
      ++systems;
      CHECK(s.valid());
    });
    CHECK(sum == 1);
    CHECK(systems > 0);
  }
}

TEST_CASE("half weights are dyadic and total the half count") {
  for (int M = 1; M <= 3; ++M) {
    BigInt total(0);
    for_each_half_system(M, [&](const HalfParticleSystem& s) {
      total += half_config_weight(s);
    });
    CHECK(total == count_half(M));
  }
}

TEST_CASE("half tail marginals against brute force for M <= 2") {
  CHECK(all_pass(verify_half(1)));
  CHECK(all_pass(verify_half(2)));
}

TEST_CASE("tail start at line 1 reduces to the joint law") {
  for_each_half_system(2, [&](const HalfParticleSystem& s) {
    CHECK(half_tail_pdf(2, s.lines) == half_joint_pdf(s));
  });
}

TEST_CASE("structure factor swap identities") {
  // S({1..M+1}) = prod (2i)!/i!
  for (int M = 1; M <= 5; ++M) {
    std::vector<int> full;
    for (int x = M + 1; x >= 1; --x) full.push_back(x);
    BigInt expect(1);
    for (int i = 1; i <= M; ++i) expect *= factorial(2 * i) / factorial(i);
    CHECK(sprod(full) == expect);
  }

  // half-integer product swap at M = 2: for every even particle line,
  // prod (x_i - 1/2) * prod over the complementary odd hole line (y - 1/2)
  // equals (2M+2)! / (2^{2M+2} (M+1)!)
  const int M = 2;
  BigRat target = BigRat(factorial(2 * M + 2)) /
                  (BigRat(pow2(2 * M + 2)) * BigRat(factorial(M + 1)));
  for_each_half_system(M, [&](const HalfParticleSystem& s) {
    for (int n = 1; n <= M; ++n) {
      std::span<const LineConfig> tail{s.lines.data() + (2 * n - 1),
                                       static_cast<size_t>(2 * M - 2 * n + 1)};
      auto holes = half_hole_lines(M, tail);
      // hole line of x-line 2n is y-line 2(M-n+1)-1
      const auto& yline = holes[static_cast<size_t>(2 * (M - n + 1) - 1 - 1)];
      BigRat lhs(1);
      for (int x : s.lines[static_cast<size_t>(2 * n - 1)].positions)
        lhs *= BigRat(2 * x - 1, 2);
      BigRat rhs(1);
      for (int y : yline.positions) rhs *= BigRat(2 * y - 1, 2);
      CHECK(lhs * rhs == target);
    }
  });
}

TEST_CASE("hole forms match transported tails for M = 3") {
  CHECK(all_pass(verify_half(3)));
}

TEST_CASE("half one-line laws are normalized for M <= 5") {
  for (int M = 1; M <= 5; ++M)
    for (int j = 1; j <= 2 * M; ++j) {
      BigRat sum(0);
      for (auto& pos : descending_subsets(1, M + 1, half_line_count(j)))
        sum += half_one_line_pdf(j, M, pos);
      CHECK(sum == 1);
    }
}

TEST_CASE("one-line prefactors are the inverse summation constants") {
  for (int M = 1; M <= 5; ++M)
    for (int m = 1; m <= std::min(3, M); ++m) {
      CHECK(half_one_line_prefactor(2 * m - 1, M) * type_b_constant_odd(M, m) == 1);
      CHECK(half_one_line_prefactor(2 * m, M) * type_b_constant_even(M, m) == 1);
    }
}

TEST_CASE("entropy exponents agree to linear order") {
  // full diamond exponent N(N+1)/2 vs twice the half exponent M(M+1),
  // N = 2(M+1): the difference is exactly 3(M+1) = 3N/2.
  for (long M = 1; M <= 4999; M += 7) {
    long N = 2 * (M + 1);
    long full_exp = N * (N + 1) / 2;
    long half_exp = M * (M + 1);
    CHECK(full_exp - 2 * half_exp == 3 * (M + 1));
    // scaled difference vanishes in the limit
    CHECK(static_cast<double>(full_exp - 2 * half_exp) / (static_cast<double>(N) * N) <=
          0.75 / M);
  }
}

TEST_CASE("symmetric constraint validator") {
  ParticleSystem ok(2, {LineConfig(1, {0}), LineConfig(2, {2, 1})});
  CHECK(symmetric_constraint_holds(ok));
  ParticleSystem clash(2, {LineConfig(1, {1}), LineConfig(2, {2, 1})});
  CHECK_FALSE(symmetric_constraint_holds(clash));
}
