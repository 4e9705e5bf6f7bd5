#include "aztec/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace aztec {

LineConfig::LineConfig(int line_index, std::vector<int> pos)
    : line(line_index), positions(std::move(pos)) {
  std::sort(positions.begin(), positions.end(), std::greater<int>());
  for (size_t i = 1; i < positions.size(); ++i)
    if (positions[i] == positions[i - 1])
      throw std::invalid_argument("LineConfig: duplicate position");
}

bool LineConfig::strictly_decreasing() const {
  for (size_t i = 1; i < positions.size(); ++i)
    if (positions[i] >= positions[i - 1]) return false;
  return true;
}

bool LineConfig::within(int lo, int hi) const {
  for (int x : positions)
    if (x < lo || x > hi) return false;
  return true;
}

BigInt vandermonde(std::span<const int> xs) {
  BigInt prod(1);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) prod *= BigInt(xs[i] - xs[j]);
  return prod;
}

BigInt sprod(std::span<const int> xs) {
  BigInt prod(1);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      prod *= BigInt(xs[i] + xs[j] - 1);
  return prod;
}

bool lines_interlace(std::span<const int> lower, std::span<const int> upper) {
  const size_t a = lower.size(), b = upper.size();
  if (b != a && b != a + 1) return false;
  for (size_t i = 0; i < a; ++i) {
    if (lower[i] > upper[i]) return false;
    if (i + 1 < b && lower[i] < upper[i + 1]) return false;
  }
  return true;
}

int adjacency_count(std::span<const int> lower, std::span<const int> upper) {
  if (upper.size() != lower.size() && upper.size() != lower.size() + 1)
    throw std::invalid_argument("adjacency_count: line sizes incompatible");
  if (!lines_interlace(lower, upper))
    throw std::invalid_argument("adjacency_count: interlacing violated");
  int count = 0;
  for (size_t i = 0; i < lower.size(); ++i) {
    bool hit = lower[i] == upper[i] ||
               (i + 1 < upper.size() && lower[i] == upper[i + 1]);
    count += hit ? 1 : 0;
  }
  return count;
}

int chain_adjacency(std::span<const LineConfig> lines) {
  int total = 0;
  for (size_t i = 0; i + 1 < lines.size(); ++i)
    total += adjacency_count(lines[i].positions, lines[i + 1].positions);
  return total;
}

bool is_valid_chain(std::span<const LineConfig> lines, int lattice_max,
                    bool strict_lower) {
  const int lo = strict_lower ? 1 : 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    if (!ln.strictly_decreasing() || !ln.within(lo, lattice_max)) return false;
    if (i + 1 < lines.size() &&
        !lines_interlace(ln.positions, lines[i + 1].positions))
      return false;
  }
  return true;
}

ParticleSystem::ParticleSystem(int order_n, std::vector<LineConfig> ls)
    : order(order_n), lines(std::move(ls)) {}

bool ParticleSystem::valid() const {
  if (static_cast<int>(lines.size()) != order) return false;
  for (int k = 1; k <= order; ++k) {
    if (lines[k - 1].line != k || lines[k - 1].count() != k) return false;
  }
  return is_valid_chain(lines, order);
}

long free_bit_count(const ParticleSystem& system) {
  if (!system.valid()) throw std::invalid_argument("free_bit_count: invalid system");
  const long n = system.order;
  return n * (n - 1) / 2 - chain_adjacency(system.lines);
}

BigInt config_weight(const ParticleSystem& system) {
  return pow2(free_bit_count(system));
}

std::vector<std::vector<int>> descending_subsets(int lo, int hi, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // choose positions top-down so emitted vectors are already descending
  std::function<void(int)> rec = [&](int next_max) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    int need = n - static_cast<int>(cur.size());
    for (int x = next_max; x - need + 1 >= lo; --x) {
      cur.push_back(x);
      rec(x - 1);
      cur.pop_back();
    }
  };
  if (n >= 0 && hi - lo + 1 >= n) rec(hi);
  return out;
}

std::vector<std::vector<int>> lower_lines(std::span<const int> upper,
                                          int lower_count, int bottom_min) {
  std::vector<std::vector<int>> out;
  const int a = lower_count;
  const int b = static_cast<int>(upper.size());
  if (b != a && b != a + 1) return out;
  std::vector<int> cur(a);
  std::function<void(int)> rec = [&](int i) {
    if (i == a) {
      out.push_back(cur);
      return;
    }
    int hi = upper[i];
    int lo = (i + 1 < b) ? upper[i + 1] : bottom_min;
    if (i > 0) hi = std::min(hi, cur[i - 1] - 1);  // keep strictly decreasing
    for (int x = hi; x >= lo; --x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

void for_each_system(int N,
                     const std::function<void(const ParticleSystem&)>& fn) {
  std::vector<LineConfig> lines(N);
  // build from the top line N downwards; lines below are interlacing choices
  auto tops = descending_subsets(0, N, N);
  std::function<void(int)> rec = [&](int k) {
    if (k == 0) {
      fn(ParticleSystem(N, lines));
      return;
    }
    for (auto& cand : lower_lines(lines[k].positions, k, 0)) {
      lines[k - 1] = LineConfig(k, cand);
      rec(k - 1);
    }
  };
  for (auto& top : tops) {
    lines[N - 1] = LineConfig(N, top);
    rec(N - 1);
  }
}

}  // namespace aztec
