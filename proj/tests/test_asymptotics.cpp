#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "aztec/asymptotics.hpp"
#include "aztec/distributions.hpp"
#include "aztec/parallel.hpp"
#include "aztec/sampler.hpp"

using namespace aztec;

TEST_CASE("minor log-density point values") {
  CHECK(gue_minor_logpdf({{0.0}}) == doctest::Approx(-0.5 * std::log(2 * M_PI)));
  // top-line value outside the interlacing window
  CHECK(gue_minor_logpdf({{2.0}, {1.0, -1.0}}) ==
        -std::numeric_limits<double>::infinity());
  // anti-symmetric, n = 2: log(e^{-x^2} / C_2)
  double x = 0.8;
  CHECK(agum_minor_logpdf({{}, {x}}) ==
        doctest::Approx(-x * x - std::log(std::sqrt(M_PI) / 2.0)));
  // the odd top line carries a vanishing prefactor towards the origin
  CHECK(agum_minor_logpdf({{}, {5e-301}, {1e-300}}) < -600);
  CHECK(agum_minor_logpdf({{}, {0.05}, {0.1}}) <
        agum_minor_logpdf({{}, {0.25}, {0.5}}));
  CHECK(agum_minor_logpdf({{}, {0.0}}) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("gue minor density integrates to one") {
  // n = 1
  double n1 = integrate([](double z) { return std::exp(gue_minor_logpdf({{z}})); },
                        -9, 9, 1e-9);
  CHECK(std::fabs(n1 - 1.0) < 1e-6);
  // n = 2: integrate the implemented density over the interlacing wedge
  auto inner = [](double z1, double z2) {
    return integrate(
        [&](double w) { return std::exp(gue_minor_logpdf({{w}, {z1, z2}})); },
        z2, z1, 1e-10);
  };
  double n2 = integrate(
      [&](double z1) {
        return integrate([&](double z2) { return inner(z1, z2); }, -8, z1, 1e-9);
      },
      -8, 8, 1e-8);
  CHECK(std::fabs(n2 - 1.0) < 1e-6);
}

TEST_CASE("anti-symmetric minor density integrates to one") {
  double n2 = integrate(
      [](double z) { return std::exp(agum_minor_logpdf({{}, {z}})); }, 0, 9,
      1e-9);
  CHECK(std::fabs(n2 - 1.0) < 1e-6);
  // n = 3 pins the odd normalization constant
  double n3 = integrate(
      [](double z) {
        return integrate(
            [&](double y) { return std::exp(agum_minor_logpdf({{}, {y}, {z}})); },
            0, z, 1e-10);
      },
      0, 9, 1e-8);
  CHECK(std::fabs(n3 - 1.0) < 1e-6);
}

TEST_CASE("log-gamma evaluations agree with the exact rationals") {
  // full diamond, all hole configurations at N = 4
  const int N = 4;
  for_each_system(N, [&](const ParticleSystem& s) {
    ParticleSystem holes = hole_complement(s);
    for (int n = 1; n <= N; ++n) {
      std::span<const LineConfig> hl{holes.lines.data(), static_cast<size_t>(n)};
      double lg = y_joint_logpdf(N, hl);
      double ex = std::log(rat_double(y_joint_pdf(N, hl)));
      CHECK(std::fabs(lg - ex) < 1e-10);
    }
  });
  // half diamond at M = 2
  const int M = 2;
  for_each_half_system(M, [&](const HalfParticleSystem& s) {
    auto full_holes = half_complement(s);
    for (int r = 1; r <= 2 * M; ++r) {
      std::span<const LineConfig> hl{full_holes.lines.data(), static_cast<size_t>(r)};
      double lg = half_y_logpdf(M, hl);
      double ex = std::log(rat_double(half_y_pdf(M, hl)));
      CHECK(std::fabs(lg - ex) < 1e-10);
    }
  });
}

TEST_CASE("scaling error decreases with the order") {
  ZGrid grid{{{0.5}}, {{-0.5}}};
  double e100 = scaling_limit_error(1, 100, grid);
  double e400 = scaling_limit_error(1, 400, grid);
  CHECK(e400 < e100);

  ZGrid grid2{{{0.0}, {1.0, -1.0}}, {{0.5}, {1.5, -0.5}}};
  CHECK(scaling_limit_error(2, 400, grid2) < scaling_limit_error(2, 100, grid2));
}

TEST_CASE("scaling error is symmetric under lattice reflection") {
  ZGrid grid{{{0.3}, {1.1, -0.7}}};
  ZGrid mirrored{{{-0.3}, {0.7, -1.1}}};
  double a = scaling_limit_error(2, 256, grid);
  double b = scaling_limit_error(2, 256, mirrored);
  CHECK(std::fabs(a - b) < 1e-9);
}

TEST_CASE("half scaling error decreases with the order") {
  ZGrid grid{{{0.6}, {1.0}}, {{0.9}, {1.3}}};
  double e100 = half_scaling_limit_error(2, 100, grid);
  double e400 = half_scaling_limit_error(2, 400, grid);
  CHECK(e400 < e100);
  // parity: one hole line compares against the even top line, two against odd
  ZGrid g1{{{0.8}}};
  CHECK(std::isfinite(half_scaling_limit_error(1, 200, g1)));
}

TEST_CASE("arctic boundary closed form") {
  auto b_half = arctic_boundary(0.5);
  CHECK(b_half.a == doctest::Approx(0.0));
  CHECK(b_half.b == doctest::Approx(1.0));
  auto b0 = arctic_boundary(0.0);
  CHECK(b0.a == doctest::Approx(0.5));
  CHECK(b0.b == doctest::Approx(0.5));
  auto bq = arctic_boundary(0.25);
  CHECK(bq.a == doctest::Approx((1.0 - std::sqrt(3.0) / 2) / 2).epsilon(1e-9));
  CHECK_THROWS_AS(arctic_boundary(1.5), std::invalid_argument);

  double prev_width = -1;
  for (double s = 0.0; s <= 1.0001; s += 0.05) {
    double sc = std::min(s, 1.0);
    auto b = arctic_boundary(sc);
    CHECK(b.a + b.b == doctest::Approx(1.0));
    if (sc <= 0.5) {
      double w = b.b - b.a;
      CHECK(w * w + (1 - 2 * sc) * (1 - 2 * sc) == doctest::Approx(1.0));
      CHECK(w >= prev_width);
      prev_width = w;
    } else {
      CHECK(b.b - b.a == doctest::Approx(1.0));
    }
    double h = half_boundary(sc);
    if (sc <= 0.5)
      CHECK(h * h + (1 - 2 * sc) * (1 - 2 * sc) == doctest::Approx(1.0));
    else
      CHECK(h == doctest::Approx(1.0));
  }
}

TEST_CASE("support integral vanishes exactly on the closed-form curve") {
  CHECK(support_half_width(0.25) == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-12));
  for (double s : {0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.45}) {
    double c = support_half_width(s);
    CHECK(std::fabs(support_integral_residual(c, s)) < 1e-8);
    // off the curve the residual is bounded away from zero
    CHECK(std::fabs(support_integral_residual(0.8 * c, s)) > 1e-3);
  }
}

TEST_CASE("empirical support approaches the limit shape at moderate order") {
  const int N = 64;
  const int samples = 40;
  EmpiricalEnsemble ens;
  std::vector<ParticleSystem> draws(samples);
  parallel_for(samples, [&](long i) {
    RngStream rng(21, static_cast<uint64_t>(i));
    draws[static_cast<size_t>(i)] =
        sample_system(N, rng, SampleMode::logfloat).system;
  });
  for (auto& d : draws) ens.add(d);
  for (double s : {0.2, 0.35}) {
    int line = static_cast<int>(std::lround(s * N));
    auto band = empirical_support(ens, line, 0.1);
    auto th = arctic_boundary(static_cast<double>(line) / N);
    CHECK(std::fabs(band.lo - th.a) < 0.09);
    CHECK(std::fabs(band.hi - th.b) < 0.09);
  }
  // beyond the half-way label the lines saturate the whole interval
  auto sat = empirical_support(ens, static_cast<int>(0.7 * N), 0.1);
  CHECK(sat.lo < 0.03);
  CHECK(sat.hi > 0.97);

  EmpiricalEnsemble tiny;
  RngStream rng(22, 0);
  tiny.add(sample_system(4, rng).system);
  CHECK_THROWS_AS(empirical_support(tiny, 1, 0.1), std::invalid_argument);
}
