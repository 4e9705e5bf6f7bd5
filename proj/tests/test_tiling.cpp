#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "aztec/rng.hpp"
#include "aztec/sampler.hpp"
#include "aztec/tiling.hpp"

using namespace aztec;

TEST_CASE("direct enumeration counts") {
  CHECK(enumerate_tilings(1) == 2);
  CHECK(enumerate_tilings(2) == 8);
  CHECK(enumerate_tilings(3) == 64);
  CHECK(enumerate_tilings(4) == 1024);
}

TEST_CASE("order-1 particle extraction from both tilings") {
  std::vector<DominoTiling> tilings;
  std::function<void(const DominoTiling&)> collect =
      [&](const DominoTiling& t) { tilings.push_back(t); };
  enumerate_tilings(1, &collect);
  REQUIRE(tilings.size() == 2);
  std::set<int> positions;
  for (const auto& t : tilings) {
    ParticleSystem sys = particles_from_tiling(t);
    REQUIRE(sys.lines.size() == 1);
    REQUIRE(sys.lines[0].count() == 1);
    positions.insert(sys.lines[0].positions[0]);
    // horizontal pair carries one east domino; vertical pair one south
    bool horizontal = t.dominoes[0].horizontal;
    int shaded = 0;
    for (const auto& d : t.dominoes)
      if (d.type == DominoType::east || d.type == DominoType::south) ++shaded;
    CHECK(shaded == 1);
    CHECK(sys.lines[0].positions[0] == (horizontal ? 0 : 1));
  }
  CHECK(positions == std::set<int>{0, 1});
}

TEST_CASE("bijection and fiber sizes for N <= 4") {
  for (int N = 1; N <= 4; ++N) {
    std::map<std::vector<std::vector<int>>, long> fiber_seen;
    long total = 0;
    std::function<void(const DominoTiling&)> visit = [&](const DominoTiling& t) {
      ParticleSystem sys = particles_from_tiling(t);
      auto bits = orientation_bits(t, sys);
      DominoTiling back = reconstruct_tiling(sys, bits);
      REQUIRE(back == t);
      std::vector<std::vector<int>> key;
      for (const auto& ln : sys.lines) key.push_back(ln.positions);
      ++fiber_seen[key];
      ++total;
    };
    enumerate_tilings(N, &visit);
    CHECK(total == (1L << (N * (N + 1) / 2)));

    long systems = 0;
    for_each_system(N, [&](const ParticleSystem& sys) {
      ++systems;
      std::vector<std::vector<int>> key;
      for (const auto& ln : sys.lines) key.push_back(ln.positions);
      REQUIRE(fiber_seen.count(key));
      CHECK(BigInt(fiber_seen[key]) == config_weight(sys));
      // distinct bit patterns give distinct tilings
      auto fiber = tiling_fiber(sys);
      std::set<std::vector<std::vector<int>>> unique;
      for (auto& t : fiber) {
        std::vector<std::vector<int>> tk;
        for (auto& d : t.dominoes)
          tk.push_back({d.x, d.y, d.horizontal ? 1 : 0});
        unique.insert(tk);
      }
      CHECK(unique.size() == fiber.size());
    });
    CHECK(systems == static_cast<long>(fiber_seen.size()));
  }
}

TEST_CASE("fiber sum over order-3 systems reaches the full count") {
  long total = 0;
  for_each_system(3, [&](const ParticleSystem& sys) {
    total += static_cast<long>(tiling_fiber(sys).size());
  });
  CHECK(total == 64);
}

TEST_CASE("reconstruct rejects wrong bit counts") {
  ParticleSystem sys(2, {LineConfig(1, {1}), LineConfig(2, {2, 0})});
  CHECK(free_bit_count(sys) == 1);
  CHECK_THROWS_AS(reconstruct_tiling(sys, {}), std::invalid_argument);
  CHECK_NOTHROW(reconstruct_tiling(sys, {true}));
  CHECK(reconstruct_tiling(sys, {true}) != reconstruct_tiling(sys, {false}));
}

TEST_CASE("complement is an involution and swaps the difference product") {
  for (int N = 2; N <= 5; ++N) {
    BigInt prod_fact(1);
    for (int i = 1; i <= N; ++i) prod_fact *= factorial(i);
    for_each_system(N, [&](const ParticleSystem& sys) {
      ParticleSystem holes = hole_complement(sys);
      CHECK(holes.valid());
      CHECK(hole_complement(holes).lines == sys.lines);
      for (int n = 1; n <= N; ++n) {
        const auto& x = sys.lines[static_cast<size_t>(n - 1)].positions;
        const auto& y = holes.lines[static_cast<size_t>(N - n)].positions;
        BigInt fac(1);
        for (int yi : y) fac *= factorial(yi) * factorial(N - yi);
        CHECK(vandermonde(x) * fac == vandermonde(y) * prod_fact);
      }
    });
  }
}

TEST_CASE("complement examples at N = 2") {
  ParticleSystem sys(2, {LineConfig(1, {1}), LineConfig(2, {2, 0})});
  ParticleSystem holes = hole_complement(sys);
  CHECK(holes.lines[1].positions == std::vector<int>{2, 0});  // from x^{(1)}
  CHECK(holes.lines[0].positions == std::vector<int>{1});     // from x^{(2)}
}

TEST_CASE("path families are non-intersecting and rebuild the verticals") {
  RngStream rng(3, 0);
  for (int trial = 0; trial < 20; ++trial) {
    DominoTiling t = sample_tiling(5, rng);
    PathFamily fam = paths_from_tiling(t);
    CHECK(fam.paths.size() == 5);
    std::set<std::pair<int, int>> seen;
    for (const auto& path : fam.paths)
      for (const auto& p : path) {
        auto [it, fresh] = seen.insert({p.x, p.y2});
        CHECK(fresh);
      }
    // up/down segments recover the vertical dominoes uniquely
    std::set<std::pair<int, int>> verticals, recovered;
    for (const auto& d : t.dominoes)
      if (!d.horizontal) verticals.insert({d.x, d.y});
    for (const auto& path : fam.paths)
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& a = path[i];
        const auto& b = path[i + 1];
        if (b.x != a.x + 1) continue;  // horizontal segment
        int ylow = (std::min(a.y2, b.y2) - 1) / 2;
        recovered.insert({a.x, ylow});
      }
    CHECK(recovered == verticals);
  }
}

TEST_CASE("order-1 paths differ in one step pair") {
  std::vector<DominoTiling> tilings;
  std::function<void(const DominoTiling&)> collect =
      [&](const DominoTiling& t) { tilings.push_back(t); };
  enumerate_tilings(1, &collect);
  std::vector<PathFamily> fams;
  for (auto& t : tilings) fams.push_back(paths_from_tiling(t));
  REQUIRE(fams.size() == 2);
  for (auto& f : fams) {
    REQUIRE(f.paths.size() == 1);
    CHECK(f.paths[0].front() == PathPoint{-1, -1});
    CHECK(f.paths[0].back() == PathPoint{1, -1});
  }
  CHECK(fams[0].paths[0].size() != fams[1].paths[0].size());
}

TEST_CASE("streaming budget is enforced") {
  std::function<void(const DominoTiling&)> ignore = [](const DominoTiling&) {};
  CHECK_THROWS_AS(enumerate_tilings(7, &ignore), budget_error);
  CHECK_THROWS_AS(enumerate_tilings(9), budget_error);
}
