#include "aztec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace aztec {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;

double lfact(long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// strict interlacing of descending vectors; |upper| == |lower| or |lower|+1
bool strict_interlace(const std::vector<double>& lower,
                      const std::vector<double>& upper) {
  const size_t a = lower.size(), b = upper.size();
  if (b != a && b != a + 1) return false;
  for (size_t i = 0; i < a; ++i) {
    if (!(lower[i] < upper[i])) return false;
    if (i + 1 < b && !(upper[i + 1] < lower[i])) return false;
  }
  return true;
}

}  // namespace

double gue_minor_logpdf(const std::vector<std::vector<double>>& z_lines) {
  const int n = static_cast<int>(z_lines.size());
  if (n < 1) throw std::invalid_argument("gue_minor_logpdf: no lines");
  for (int j = 1; j <= n; ++j)
    if (static_cast<int>(z_lines[static_cast<size_t>(j - 1)].size()) != j)
      throw std::invalid_argument("gue_minor_logpdf: line j must hold j values");
  for (int j = 0; j + 1 < n; ++j)
    if (!strict_interlace(z_lines[static_cast<size_t>(j)],
                          z_lines[static_cast<size_t>(j + 1)]))
      return kNegInf;
  const auto& top = z_lines.back();
  double lp = -0.5 * n * std::log(2.0 * kPi);
  for (double z : top) lp -= 0.5 * z * z;
  for (size_t i = 0; i < top.size(); ++i)
    for (size_t j = i + 1; j < top.size(); ++j) {
      if (!(top[i] > top[j])) return kNegInf;
      lp += std::log(top[i] - top[j]);
    }
  return lp;
}

double agum_log_norm(int n) {
  // pi^{floor(n/2)/2} * 2^{-floor(n^2/4)}
  return 0.5 * (n / 2) * std::log(kPi) - static_cast<double>((n * n) / 4) * kLog2;
}

double agum_minor_logpdf(const std::vector<std::vector<double>>& x_lines) {
  const int n = static_cast<int>(x_lines.size());
  if (n < 1) throw std::invalid_argument("agum_minor_logpdf: no lines");
  // line j holds floor(j/2) positive values; odd lines carry an implicit 0
  std::vector<std::vector<double>> full(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const auto& ln = x_lines[static_cast<size_t>(j - 1)];
    if (static_cast<int>(ln.size()) != j / 2)
      throw std::invalid_argument("agum_minor_logpdf: line j must hold floor(j/2) values");
    full[static_cast<size_t>(j - 1)] = ln;
    if (j % 2 == 1) full[static_cast<size_t>(j - 1)].push_back(0.0);
  }
  for (int j = 0; j + 1 < n; ++j)
    if (!strict_interlace(full[static_cast<size_t>(j)],
                          full[static_cast<size_t>(j + 1)]))
      return kNegInf;
  const auto& top = x_lines.back();
  double lp = -agum_log_norm(n);
  for (double x : top) {
    if (!(x > 0)) return kNegInf;
    lp -= x * x;
    if (n % 2 == 1) lp += std::log(x);
  }
  for (size_t i = 0; i < top.size(); ++i)
    for (size_t j = i + 1; j < top.size(); ++j) {
      if (!(top[i] > top[j])) return kNegInf;
      lp += std::log(top[i] * top[i] - top[j] * top[j]);
    }
  return lp;
}

double y_joint_logpdf(int N, std::span<const LineConfig> hole_lines) {
  const int n = static_cast<int>(hole_lines.size());
  for (int k = 1; k <= n; ++k) {
    const auto& ln = hole_lines[static_cast<size_t>(k - 1)];
    if (ln.line != k || ln.count() != k) return kNegInf;
  }
  if (!is_valid_chain(hole_lines, N)) return kNegInf;
  const auto& top = hole_lines.back().positions;
  double lp = 0;
  for (int i = 0; i < n; ++i) lp += lfact(N - i);
  for (int y : top) lp -= lfact(y) + lfact(N - y);
  for (size_t i = 0; i < top.size(); ++i)
    for (size_t j = i + 1; j < top.size(); ++j)
      lp += std::log(static_cast<double>(top[i] - top[j]));
  long alpha = chain_adjacency(hole_lines);
  lp -= (N + static_cast<long>(N - n) * (n - 1) + alpha) * kLog2;
  return lp;
}

double half_y_logpdf(int M, std::span<const LineConfig> hole_lines) {
  const int r = static_cast<int>(hole_lines.size());
  for (int k = 1; k <= r; ++k) {
    const auto& ln = hole_lines[static_cast<size_t>(k - 1)];
    if (ln.line != k || ln.count() != half_line_count(k)) return kNegInf;
  }
  if (!is_valid_chain(hole_lines, M + 1, /*strict_lower=*/true)) return kNegInf;
  const auto& top = hole_lines.back().positions;
  const int m = half_line_count(r);
  long alpha = chain_adjacency(hole_lines);

  double lp = 0;
  for (int y : top) lp -= lfact(y + M) + lfact(M + 1 - y);
  for (size_t i = 0; i < top.size(); ++i)
    for (size_t j = i + 1; j < top.size(); ++j) {
      lp += std::log(static_cast<double>(top[i] - top[j]));
      lp += std::log(static_cast<double>(top[i] + top[j] - 1));
    }
  if (r % 2 == 1) {
    lp += lfact(M + 1 - m) - lfact(M + 1);
    for (int j = 0; j < m; ++j) lp += lfact(2 * (M - m + j + 2));
    lp -= (alpha + 2L * m * (M - m + 1) + m) * kLog2;
  } else {
    for (int j = 1; j <= m; ++j) lp += lfact(2 * (M - m + j));
    for (int y : top) lp += std::log(y - 0.5);
    lp -= (alpha + 2L * m * (M - m)) * kLog2;
  }
  return lp;
}

namespace {

int round_half_even(double v) {
  double r = std::nearbyint(v);  // default rounding mode: to nearest, ties even
  return static_cast<int>(r);
}

}  // namespace

double scaling_limit_error(int n, int N, const ZGrid& grid) {
  double worst = 0;
  const double sqrtN = std::sqrt(static_cast<double>(N));
  for (const auto& config : grid) {
    if (static_cast<int>(config.size()) != n)
      throw std::invalid_argument("scaling_limit_error: grid has wrong depth");
    std::vector<LineConfig> holes;
    std::vector<std::vector<double>> actual(config.size());
    for (int j = 1; j <= n; ++j) {
      std::vector<int> ys;
      for (double z : config[static_cast<size_t>(j - 1)]) {
        int y = round_half_even((z * sqrtN + N) / 2.0);
        if (y < 0 || y > N)
          throw std::invalid_argument("scaling_limit_error: grid maps outside lattice");
        ys.push_back(y);
        actual[static_cast<size_t>(j - 1)].push_back((2.0 * y - N) / sqrtN);
      }
      std::sort(ys.begin(), ys.end(), std::greater<int>());
      std::sort(actual[static_cast<size_t>(j - 1)].begin(),
                actual[static_cast<size_t>(j - 1)].end(), std::greater<double>());
      holes.emplace_back(j, ys);
    }
    double lattice = y_joint_logpdf(N, holes) +
                     n * (n + 1) / 4.0 * std::log(N / 4.0);
    double limit = gue_minor_logpdf(actual);
    double err = std::fabs(lattice - limit);
    worst = std::max(worst, err);
  }
  return worst;
}

double half_scaling_limit_error(int n, int M, const ZGrid& grid) {
  double worst = 0;
  const double sqrtM = std::sqrt(static_cast<double>(M));
  long coords = 0;
  for (int k = 1; k <= n; ++k) coords += half_line_count(k);
  for (const auto& config : grid) {
    if (static_cast<int>(config.size()) != n)
      throw std::invalid_argument("half_scaling_limit_error: wrong depth");
    std::vector<LineConfig> holes;
    std::vector<std::vector<double>> actual(static_cast<size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
      std::vector<int> ys;
      for (double z : config[static_cast<size_t>(j - 1)]) {
        int y = round_half_even(z * sqrtM);
        if (y < 1 || y > M + 1)
          throw std::invalid_argument("half_scaling_limit_error: outside lattice");
        ys.push_back(y);
        // minor line j+1 carries the rescaled hole line j
        actual[static_cast<size_t>(j)].push_back(y / sqrtM);
      }
      std::sort(ys.begin(), ys.end(), std::greater<int>());
      std::sort(actual[static_cast<size_t>(j)].begin(),
                actual[static_cast<size_t>(j)].end(), std::greater<double>());
      holes.emplace_back(j, ys);
    }
    double lattice = half_y_logpdf(M, holes) + 0.5 * coords * std::log(M);
    double limit = agum_minor_logpdf(actual);
    worst = std::max(worst, std::fabs(lattice - limit));
  }
  return worst;
}

Boundary arctic_boundary(double s) {
  if (s < 0 || s > 1) throw std::invalid_argument("arctic_boundary: s in [0,1]");
  if (s > 0.5) return {0.0, 1.0};
  double w = 1.0 - 2.0 * s;
  double root = std::sqrt(std::max(0.0, 1.0 - w * w));
  return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

double half_boundary(double s) {
  if (s < 0 || s > 1) throw std::invalid_argument("half_boundary: s in [0,1]");
  if (s > 0.5) return 1.0;
  double w = 1.0 - 2.0 * s;
  return std::sqrt(std::max(0.0, 1.0 - w * w));
}

double support_half_width(double s) {
  if (s < 0 || s > 0.5)
    throw std::invalid_argument("support_half_width: s in [0,1/2]");
  double w = 1.0 - 2.0 * s;
  return 0.5 * std::sqrt(std::max(0.0, 1.0 - w * w));
}

// --- adaptive Gauss-Kronrod (15,7) -----------------------------------------

namespace {

// nodes on [-1,1] (positive half) and weights of the (G7, K15) pair
constexpr double kKronrodX[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813};
constexpr double kKronrodW[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785,
    0.169004726639267, 0.140653259715525, 0.104790010322250,
    0.063092092629979, 0.022935322010529};
constexpr double kGaussW[4] = {0.417959183673469, 0.381830050505119,
                               0.279705391489277, 0.129484966168870};

struct GkResult {
  double integral, error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  fv[7] = f(c);
  for (int i = 0; i < 7; ++i) {
    double dx = h * kKronrodX[7 - i];
    fv[i] = f(c - dx);
    fv[14 - i] = f(c + dx);
  }
  double kron = kKronrodW[0] * fv[7];
  for (int i = 1; i <= 7; ++i)
    kron += kKronrodW[i] * (fv[7 - i] + fv[7 + i]);
  double gauss = kGaussW[0] * fv[7];
  for (int i = 1; i <= 3; ++i)
    gauss += kGaussW[i] * (fv[7 - 2 * i] + fv[7 + 2 * i]);
  return {kron * h, std::fabs((kron - gauss) * h)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, int depth) {
  auto r = gk15(f, a, b);
  if (r.error <= tol || depth >= 48) return r.integral;
  double m = 0.5 * (a + b);
  return integrate_rec(f, a, m, tol / 2, depth + 1) +
         integrate_rec(f, m, b, tol / 2, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  return integrate_rec(f, a, b, abs_tol, 0);
}

double support_integral_residual(double c, double s) {
  if (!(c > 0) || !(c < 0.5))
    throw std::invalid_argument("support_integral_residual: c in (0,1/2)");
  if (!(s > 0) || !(s < 0.5))
    throw std::invalid_argument("support_integral_residual: s in (0,1/2)");
  // u = c sin(theta) removes the endpoint singularities
  auto integrand = [c](double theta) {
    double u = c * std::sin(theta);
    return u * std::log1p(2.0 * u);
  };
  double integral = integrate(integrand, -kPi / 2, kPi / 2, 1e-12);
  return integral - kPi * s;
}

// --- empirical support -------------------------------------------------------

void EmpiricalEnsemble::init_full(int N) {
  order = N;
  half = false;
  line_min.assign(static_cast<size_t>(N), {});
  line_max.assign(static_cast<size_t>(N), {});
  occupancy.assign(static_cast<size_t>(N),
                   std::vector<long>(static_cast<size_t>(N) + 1, 0));
}

void EmpiricalEnsemble::init_half(int M) {
  order = M;
  half = true;
  line_min.assign(static_cast<size_t>(2 * M), {});
  line_max.assign(static_cast<size_t>(2 * M), {});
  occupancy.assign(static_cast<size_t>(2 * M),
                   std::vector<long>(static_cast<size_t>(M) + 2, 0));
}

void EmpiricalEnsemble::add_line(const LineConfig& line) {
  if (order == 0) throw std::invalid_argument("EmpiricalEnsemble: not initialized");
  const auto& pos = line.positions;
  size_t idx = static_cast<size_t>(line.line - 1);
  line_max.at(idx).push_back(pos.front());
  line_min.at(idx).push_back(pos.back());
  for (int x : pos) ++occupancy.at(idx).at(static_cast<size_t>(x));
}

void EmpiricalEnsemble::add(const ParticleSystem& sys) {
  if (order == 0) init_full(sys.order);
  if (half) throw std::invalid_argument("EmpiricalEnsemble: half/full mix");
  for (int k = 1; k <= order; ++k)
    add_line(sys.lines[static_cast<size_t>(k - 1)]);
  ++sample_count;
}

void EmpiricalEnsemble::add(const HalfParticleSystem& sys) {
  if (order == 0) init_half(sys.order);
  if (!half) throw std::invalid_argument("EmpiricalEnsemble: half/full mix");
  for (int j = 1; j <= 2 * order; ++j)
    add_line(sys.lines[static_cast<size_t>(j - 1)]);
  ++sample_count;
}

SupportBand empirical_support(const EmpiricalEnsemble& ens, int line,
                              double eps) {
  const auto& mins = ens.line_min.at(static_cast<size_t>(line - 1));
  const auto& maxs = ens.line_max.at(static_cast<size_t>(line - 1));
  if (mins.size() < 30)
    throw std::invalid_argument("empirical_support: need at least 30 samples");
  std::vector<int> lo = mins, hi = maxs;
  std::sort(lo.begin(), lo.end());
  std::sort(hi.begin(), hi.end());
  auto quantile = [](const std::vector<int>& v, double q) {
    double pos = q * (static_cast<double>(v.size()) - 1.0);
    size_t idx = static_cast<size_t>(std::lround(pos));
    return v[std::min(idx, v.size() - 1)];
  };
  double scale = ens.half ? static_cast<double>(ens.order)
                          : static_cast<double>(ens.order);
  if (ens.half)
    return {(quantile(lo, eps) - 0.5) / scale, (quantile(hi, 1 - eps) - 0.5) / scale};
  return {quantile(lo, eps) / scale, quantile(hi, 1 - eps) / scale};
}

}  // namespace aztec
