#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "aztec/combinatorics.hpp"
#include "aztec/distributions.hpp"
#include "aztec/rng.hpp"

using namespace aztec;

TEST_CASE("vandermonde basics") {
  std::vector<int> single{5};
  CHECK(vandermonde(single) == 1);
  std::vector<int> three{2, 1, 0};
  CHECK(vandermonde(three) == 2);
  std::vector<int> four{3, 2, 1, 0};
  CHECK(vandermonde(four) == 12);  // 1! 2! 3!
  std::vector<int> coincident{4, 4, 1};
  CHECK(vandermonde(coincident) == 0);
}

TEST_CASE("vandermonde antisymmetry under transpositions") {
  RngStream rng(7, 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> xs(5);
    for (auto& x : xs) x = static_cast<int>(rng.next_u64() % 19) - 9;
    BigInt base = vandermonde(xs);
    size_t i = rng.next_u64() % 5, j = rng.next_u64() % 5;
    if (i == j) continue;
    std::swap(xs[i], xs[j]);
    CHECK(vandermonde(xs) == -base);
  }
}

TEST_CASE("sprod basics and symmetry") {
  std::vector<int> single{4};
  CHECK(sprod(single) == 1);
  std::vector<int> two{2, 1};
  CHECK(sprod(two) == 2);
  std::vector<int> three{3, 2, 1};
  CHECK(sprod(three) == 24);
  // S({1..M+1}) = prod (2i)!/i!, M = 3
  std::vector<int> full{4, 3, 2, 1};
  BigInt expect(1);
  for (int i = 1; i <= 3; ++i) expect *= factorial(2 * i) / factorial(i);
  CHECK(sprod(full) == expect);
  CHECK(expect == 2880);

  RngStream rng(11, 0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> xs(4);
    for (auto& x : xs) x = static_cast<int>(rng.next_u64() % 15);
    BigInt base = sprod(xs);
    std::swap(xs[rng.next_u64() % 4], xs[rng.next_u64() % 4]);
    CHECK(sprod(xs) == base);
  }
}

TEST_CASE("adjacency_count examples") {
  std::vector<int> l1{1}, u1{2, 0};
  CHECK(adjacency_count(l1, u1) == 0);
  std::vector<int> l2{0}, u2{1, 0};
  CHECK(adjacency_count(l2, u2) == 1);
  std::vector<int> l3{2, 1}, u3{2, 1, 0};
  CHECK(adjacency_count(l3, u3) == 2);
  std::vector<int> bad{2}, ubad{1, 0};
  CHECK_THROWS_AS(adjacency_count(bad, ubad), std::invalid_argument);
}

TEST_CASE("is_valid_chain examples") {
  auto chain = [](std::vector<std::vector<int>> ls) {
    std::vector<LineConfig> out;
    int k = 1;
    for (auto& v : ls) out.emplace_back(k++, v);
    return out;
  };
  auto good = chain({{1}, {2, 0}});
  CHECK(is_valid_chain(good, 2));
  CHECK_THROWS_AS(LineConfig(2, {2, 2}), std::invalid_argument);
  auto broken = chain({{2}, {1, 0}});
  CHECK_FALSE(is_valid_chain(broken, 2));
  auto outside = chain({{3}});
  CHECK_FALSE(is_valid_chain(outside, 2));
}

TEST_CASE("config_weight examples") {
  ParticleSystem s1(1, {LineConfig(1, {0})});
  CHECK(config_weight(s1) == 1);
  ParticleSystem s2(2, {LineConfig(1, {1}), LineConfig(2, {2, 0})});
  CHECK(config_weight(s2) == 2);
  ParticleSystem s3(2, {LineConfig(1, {0}), LineConfig(2, {1, 0})});
  CHECK(config_weight(s3) == 1);
}

TEST_CASE("weights sum to the tiling count for N = 2..5") {
  for (int N = 2; N <= 5; ++N) {
    BigInt sum(0);
    for_each_system(N, [&](const ParticleSystem& s) { sum += config_weight(s); });
    CHECK(sum == pow2(static_cast<long>(N) * (N + 1) / 2));
  }
}

// adjacency swap for arbitrary two-line fillings: with alpha defined through
// set membership on the next line, alpha(x) = alpha(y) + a + b - N*.
namespace {
int alpha_membership(const std::vector<int>& lower, const std::set<int>& upper) {
  int c = 0;
  for (int x : lower) c += upper.count(x) ? 1 : 0;
  return c;
}
}  // namespace

TEST_CASE("two-line adjacency complement identity, exhaustive") {
  for (int nsites = 1; nsites <= 6; ++nsites) {
    for (uint32_t ma = 0; ma < (1u << nsites); ++ma) {
      for (uint32_t mb = 0; mb < (1u << nsites); ++mb) {
        std::vector<int> xa, xb, ya, yb;
        std::set<int> xb_set, yb_set;
        for (int p = nsites - 1; p >= 0; --p) {
          bool a = (ma >> p) & 1, b = (mb >> p) & 1;
          (a ? xa : ya).push_back(p);
          if (b) {
            xb.push_back(p);
            xb_set.insert(p);
          } else {
            yb.push_back(p);
            yb_set.insert(p);
          }
        }
        // x particles interlace line n below n+1; holes read right to left,
        // so the hole roles swap: lower hole line is the complement of xb.
        int ax = alpha_membership(xa, xb_set);
        int ay = alpha_membership(yb, {ya.begin(), ya.end()});
        int a = static_cast<int>(xa.size()), b = static_cast<int>(xb.size());
        CHECK(ax == ay + a + b - nsites);
      }
    }
  }
}

TEST_CASE("indexed adjacency equals membership adjacency under interlacing") {
  for (int N = 2; N <= 4; ++N) {
    for_each_system(N, [&](const ParticleSystem& s) {
      for (int k = 1; k < N; ++k) {
        const auto& low = s.lines[static_cast<size_t>(k - 1)].positions;
        const auto& up = s.lines[static_cast<size_t>(k)].positions;
        std::set<int> up_set(up.begin(), up.end());
        CHECK(adjacency_count(low, up) == alpha_membership(low, up_set));
      }
    });
  }
}
