#include "aztec/half.hpp"

#include <stdexcept>

namespace aztec {

int half_line_count(int j) { return (j + 1) / 2; }

HalfParticleSystem::HalfParticleSystem(int order_m, std::vector<LineConfig> ls)
    : order(order_m), lines(std::move(ls)) {}

bool HalfParticleSystem::valid() const {
  if (static_cast<int>(lines.size()) != 2 * order) return false;
  for (int j = 1; j <= 2 * order; ++j) {
    const auto& ln = lines[static_cast<size_t>(j - 1)];
    if (ln.line != j || ln.count() != half_line_count(j)) return false;
  }
  return is_valid_chain(lines, order + 1, /*strict_lower=*/true);
}

BigInt count_half(int M) {
  if (M < 1) throw std::invalid_argument("count_half: M >= 1");
  return pow2(static_cast<long>(M) * (M + 1));
}

BigInt count_symmetric(int M) {
  return count_half(M) * pow2(M + 1);  // 2^{(M+1)^2}
}

BigInt half_config_weight(const HalfParticleSystem& system) {
  if (!system.valid())
    throw std::invalid_argument("half_config_weight: invalid system");
  long alpha = chain_adjacency(system.lines);
  return pow2(static_cast<long>(system.order) * system.order - alpha);
}

BigRat half_joint_pdf(const HalfParticleSystem& system) {
  if (!system.valid()) return BigRat(0);
  long alpha = chain_adjacency(system.lines);
  return pow2_rat(-(system.order + alpha));
}

BigRat half_norm_odd(int n, int M) {
  BigRat h(pow2(M));
  for (int i = 1; i < n; ++i) h *= BigRat(factorial(2 * i));
  return h;
}

BigRat half_norm_even(int n, int M) {
  BigRat h(pow2(M));
  for (int i = 1; i <= n; ++i) h *= BigRat(factorial(2 * i));
  return h / (BigRat(pow2(n)) * BigRat(factorial(n)));
}

namespace {

// prod_i (x_i - 1/2) as an exact rational.
BigRat half_shift_product(std::span<const int> xs) {
  BigRat p(1);
  for (int x : xs) p *= BigRat(2 * x - 1, 2);
  return p;
}

bool valid_half_tail(int M, std::span<const LineConfig> tail) {
  if (tail.empty() || tail.back().line != 2 * M) return false;
  const int j0 = tail.front().line;
  for (size_t i = 0; i < tail.size(); ++i) {
    int j = j0 + static_cast<int>(i);
    if (tail[i].line != j || tail[i].count() != half_line_count(j)) return false;
  }
  return is_valid_chain(tail, M + 1, /*strict_lower=*/true);
}

}  // namespace

BigRat half_tail_pdf(int M, std::span<const LineConfig> tail) {
  if (tail.empty()) throw std::invalid_argument("half_tail_pdf: no lines");
  if (!valid_half_tail(M, tail)) return BigRat(0);
  const int j0 = tail.front().line;
  const auto& front = tail.front().positions;
  long alpha = chain_adjacency(tail);
  BigRat p = BigRat(vandermonde(front)) * BigRat(sprod(front)) * pow2_rat(-alpha);
  if (j0 % 2 == 1) {
    return p / half_norm_odd((j0 + 1) / 2, M);
  }
  return p * half_shift_product(front) / half_norm_even(j0 / 2, M);
}

BigRat half_y_pdf(int M, std::span<const LineConfig> hole_lines) {
  if (hole_lines.empty()) throw std::invalid_argument("half_y_pdf: no lines");
  const int r = static_cast<int>(hole_lines.size());
  for (int k = 1; k <= r; ++k) {
    const auto& ln = hole_lines[static_cast<size_t>(k - 1)];
    if (ln.line != k || ln.count() != half_line_count(k)) return BigRat(0);
  }
  if (!is_valid_chain(hole_lines, M + 1, /*strict_lower=*/true)) return BigRat(0);

  const auto& top = hole_lines.back().positions;
  const int m = half_line_count(r);
  long alpha = chain_adjacency(hole_lines);

  BigRat weight(1);
  for (int y : top) weight /= BigRat(factorial(y + M) * factorial(M + 1 - y));
  BigRat core = BigRat(vandermonde(top)) * BigRat(sprod(top)) * weight;

  if (r % 2 == 1) {  // r = 2m-1
    BigRat c = BigRat(factorial(M + 1 - m)) / BigRat(factorial(M + 1));
    for (int j = 0; j < m; ++j) c *= BigRat(factorial(2 * (M - m + j + 2)));
    long exp2 = alpha + 2L * m * (M - m + 1) + m;
    return c * pow2_rat(-exp2) * core;
  }
  BigRat c(1);  // r = 2m
  for (int j = 1; j <= m; ++j) c *= BigRat(factorial(2 * (M - m + j)));
  long exp2 = alpha + 2L * m * (M - m);
  return c * pow2_rat(-exp2) * core * half_shift_product(top);
}

BigRat half_one_line_prefactor(int j, int M) {
  if (j < 1 || j > 2 * M)
    throw std::invalid_argument("half_one_line_prefactor: line");
  const int m = half_line_count(j);
  if (j % 2 == 1) {
    BigRat c = BigRat(factorial(M + 1 - m)) / BigRat(factorial(M + 1));
    for (int i = 0; i < m; ++i)
      c *= BigRat(factorial(2 * (M - m + i + 2))) / BigRat(factorial(2 * i));
    return c * pow2_rat(-(2L * m * (M - m + 1) + m));
  }
  BigRat c(factorial(m));
  for (int i = 1; i <= m; ++i)
    c *= BigRat(factorial(2 * (M - m + i))) / BigRat(factorial(2 * i));
  return c * pow2_rat(-(2L * m * (M - m) - m));
}

BigRat half_one_line_pdf(int j, int M, std::span<const int> positions) {
  if (j < 1 || j > 2 * M) throw std::invalid_argument("half_one_line_pdf: line");
  LineConfig ln(j, std::vector<int>(positions.begin(), positions.end()));
  if (ln.count() != half_line_count(j) || !ln.within(1, M + 1)) return BigRat(0);
  BigRat weight(1);
  for (int y : ln.positions)
    weight /= BigRat(factorial(y + M) * factorial(M + 1 - y));
  BigInt ds = vandermonde(ln.positions) * sprod(ln.positions);
  BigRat core = BigRat(ds * ds) * weight;
  if (j % 2 == 0) {
    BigRat shift = half_shift_product(ln.positions);
    core *= shift * shift;
  }
  return half_one_line_prefactor(j, M) * core;
}

HalfParticleSystem half_complement(const HalfParticleSystem& system) {
  const int M = system.order;
  std::vector<LineConfig> lines(static_cast<size_t>(2 * M));
  for (int n = 1; n <= 2 * M; ++n) {
    std::vector<char> present(static_cast<size_t>(M) + 2, 0);
    for (int x : system.lines[static_cast<size_t>(n - 1)].positions)
      present[static_cast<size_t>(x)] = 1;
    std::vector<int> comp;
    for (int x = M + 1; x >= 1; --x)
      if (!present[static_cast<size_t>(x)]) comp.push_back(x);
    lines[static_cast<size_t>(2 * M - n)] = LineConfig(2 * M + 1 - n, std::move(comp));
  }
  return HalfParticleSystem(M, std::move(lines));
}

std::vector<LineConfig> half_hole_lines(int M, std::span<const LineConfig> tail) {
  std::vector<LineConfig> holes;
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
    std::vector<char> present(static_cast<size_t>(M) + 2, 0);
    for (int x : it->positions) present[static_cast<size_t>(x)] = 1;
    std::vector<int> comp;
    for (int x = M + 1; x >= 1; --x)
      if (!present[static_cast<size_t>(x)]) comp.push_back(x);
    holes.emplace_back(2 * M + 1 - it->line, std::move(comp));
  }
  return holes;
}

bool symmetric_constraint_holds(const ParticleSystem& system) {
  const int N = system.order;
  if (N % 2 != 0) throw std::invalid_argument("symmetric_constraint: even order");
  for (int j = 1; 2 * j <= N; ++j) {
    const auto& a = system.lines[static_cast<size_t>(j - 1)].positions;
    const auto& b = system.lines[static_cast<size_t>(N - j)].positions;
    for (int x : a)
      for (int y : b)
        if (x == y) return false;
  }
  return true;
}

void for_each_half_system(
    int M, const std::function<void(const HalfParticleSystem&)>& fn) {
  std::vector<LineConfig> lines(static_cast<size_t>(2 * M));
  std::function<void(int)> rec = [&](int j) {
    if (j == 0) {
      fn(HalfParticleSystem(M, lines));
      return;
    }
    const auto& upper = lines[static_cast<size_t>(j)].positions;
    for (auto& cand : lower_lines(upper, half_line_count(j), 1)) {
      lines[static_cast<size_t>(j - 1)] = LineConfig(j, cand);
      rec(j - 1);
    }
  };
  for (auto& top : descending_subsets(1, M + 1, M)) {
    lines[static_cast<size_t>(2 * M - 1)] = LineConfig(2 * M, top);
    rec(2 * M - 1);
  }
}

}  // namespace aztec
