#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aztec/distributions.hpp"
#include "aztec/tiling.hpp"
#include "aztec/verify.hpp"

using namespace aztec;

namespace {
std::vector<LineConfig> chain(int first_line, std::vector<std::vector<int>> ls) {
  std::vector<LineConfig> out;
  int k = first_line;
  for (auto& v : ls) out.emplace_back(k++, v);
  return out;
}
}  // namespace

TEST_CASE("tiling counts") {
  CHECK(count_tilings(3) == 64);
  CHECK(count_tilings(5) == 32768);
  // the forced full top line has probability one under the extended law:
  // 2^{N(N+1)/2} Delta(N..0) = A_N prod i!
  for (int N = 1; N <= 6; ++N) {
    std::vector<int> full;
    for (int x = N; x >= 0; --x) full.push_back(x);
    BigInt prod_fact(1);
    for (int i = 1; i <= N; ++i) prod_fact *= factorial(i);
    CHECK(pow2(static_cast<long>(N) * (N + 1) / 2) * vandermonde(full) ==
          count_tilings(N) * prod_fact);
  }
}

TEST_CASE("joint pdf examples") {
  ParticleSystem s1(1, {LineConfig(1, {0})});
  CHECK(joint_pdf(s1) == rat(1, 2));
  ParticleSystem s2(2, chain(1, {{1}, {2, 0}}));
  CHECK(joint_pdf(s2) == rat(2, 8));
  ParticleSystem bad(2, chain(1, {{0}, {2, 1}}));
  CHECK(joint_pdf(bad) == 0);
}

TEST_CASE("joint pdf is normalized for N <= 5") {
  for (int N = 1; N <= 5; ++N) {
    BigRat sum(0);
    for_each_system(N, [&](const ParticleSystem& s) { sum += joint_pdf(s); });
    CHECK(sum == 1);
  }
}

TEST_CASE("tail marginal examples") {
  // m = 1 reduces to the joint law
  ParticleSystem s(2, chain(1, {{1}, {2, 0}}));
  CHECK(tail_marginal_pdf(2, s.lines) == joint_pdf(s));
  auto tail = chain(2, {{2, 0}});
  CHECK(tail_marginal_pdf(2, tail) == rat(4, 8));
  // normalization constant recurrence D_{m+1,N} = m! D_{m,N}
  for (int N = 1; N <= 6; ++N)
    for (int m = 1; m <= N; ++m)
      CHECK(tail_normalization(m + 1, N) ==
            BigRat(factorial(m)) * tail_normalization(m, N));
}

TEST_CASE("tail marginals match brute force at N = 3") {
  CHECK(all_pass(verify_prop1(3)));
}

TEST_CASE("one-line pdf examples") {
  std::vector<int> p0{0}, p1{1}, p2{2};
  CHECK(one_line_pdf(1, 1, p0) == rat(1, 2));
  CHECK(one_line_pdf(1, 1, p1) == rat(1, 2));
  CHECK(one_line_pdf(1, 2, p0) == rat(1, 4));
  CHECK(one_line_pdf(1, 2, p1) == rat(1, 2));
  CHECK(one_line_pdf(1, 2, p2) == rat(1, 4));
}

TEST_CASE("one-line pdf sums to one for n <= N <= 8") {
  for (int N = 1; N <= 8; ++N)
    for (int n = 1; n <= N; ++n) {
      BigRat sum(0);
      for (auto& pos : descending_subsets(0, N, n)) sum += one_line_pdf(n, N, pos);
      CHECK(sum == 1);
    }
}

TEST_CASE("one-line pdf matches brute-force marginals for N <= 4") {
  CHECK(all_pass(verify_one_line(4, 4)));
}

TEST_CASE("hole-side joint law") {
  // n = 1, N = 2: p(y^{(1)} = (1)) equals the top-line marginal at (2, 0)
  auto holes = chain(1, {{1}});
  CHECK(y_joint_pdf(2, holes) == rat(4, 8));
  // N = 1: each hole position carries probability 1/2
  auto h0 = chain(1, {{0}});
  auto h1 = chain(1, {{1}});
  CHECK(y_joint_pdf(1, h0) == rat(1, 2));
  CHECK(y_joint_pdf(1, h1) == rat(1, 2));
  CHECK(all_pass(verify_complement(3)));
  CHECK(all_pass(verify_complement(4)));
}

TEST_CASE("count check against enumeration and weights") {
  CHECK(all_pass(verify_counts(4)));
}
