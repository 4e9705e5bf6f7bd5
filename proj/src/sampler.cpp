#include "aztec/sampler.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace aztec {

namespace {

using detail::LineKernel;

// Draws one row index from the kernel's candidate masses.
template <class F>
int draw_row(LineKernel<F>& kernel, int r, RngStream& rng) {
  const auto& row = kernel.row_masses(r);
  if constexpr (detail::FieldOps<F>::exact) {
    int idx = exact_categorical(rng, row.mass, row.total);
    return row.lo + idx;
  } else {
    F target = row.total * F(rng.next_double());
    F cum{};
    int last_positive = -1;
    for (size_t i = 0; i < row.mass.size(); ++i) {
      if (row.mass[i].zero()) continue;
      last_positive = static_cast<int>(i);
      cum += row.mass[i];
      if (!(cum < target)) return row.lo + static_cast<int>(i);
    }
    if (last_positive < 0)
      throw std::logic_error("draw_row: no positive candidate mass");
    return row.lo + last_positive;
  }
}

// Center-first row order: at every stage the committed particles form a
// near-uniform net across the line, which keeps the maintained inverse well
// conditioned (bottom-up order builds dense committed clusters that any
// fixed-precision elimination eventually cannot separate).
std::vector<int> bisection_order(int n) {
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<std::pair<int, int>> queue{{0, n - 1}};
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [lo, hi] = queue[head];
    if (lo > hi) continue;
    int mid = lo + (hi - lo) / 2;
    order.push_back(mid);
    queue.push_back({lo, mid - 1});
    queue.push_back({mid + 1, hi});
  }
  return order;
}

// Samples a full lower line; multiplies the exact conditional into prob.
template <class F>
std::vector<int> run_step(StepKind kind, std::span<const int> upper,
                          RngStream& rng, BigRat* prob, SamplerStats& stats) {
  LineKernel<F> kernel(kind, upper);
  std::vector<int> asc(static_cast<size_t>(kernel.rows()));
  for (int r : bisection_order(kernel.rows())) {
    int t = draw_row(kernel, r, rng);
    F p = kernel.commit(r, t);
    if constexpr (detail::FieldOps<F>::exact) {
      if (prob) *prob *= p;
    }
    asc[static_cast<size_t>(r)] = t;
  }
  stats.merge(kernel.stats());
  std::reverse(asc.begin(), asc.end());
  return asc;  // now descending
}

std::vector<int> run_step_mode(SampleMode mode, StepKind kind,
                               std::span<const int> upper, RngStream& rng,
                               BigRat* prob, SamplerStats& stats) {
  if (mode == SampleMode::exact)
    return run_step<BigRat>(kind, upper, rng, prob, stats);
  // extended mantissa is plenty for short lines; quad covers the rest of the
  // supported range
  size_t lower = kind == StepKind::half_flat ? upper.size() : upper.size() - 1;
  if (lower <= 32) return run_step<ScaledRealLD>(kind, upper, rng, prob, stats);
  return run_step<ScaledReal>(kind, upper, rng, prob, stats);
}

std::vector<int> full_descending(int hi, int lo) {
  std::vector<int> v;
  for (int x = hi; x >= lo; --x) v.push_back(x);
  return v;
}

}  // namespace

BigRat step_conditional(StepKind kind, std::span<const int> upper,
                        std::span<const int> lower) {
  LineKernel<BigRat> kernel(kind, upper);
  std::vector<int> asc(lower.rbegin(), lower.rend());
  if (static_cast<int>(asc.size()) != kernel.rows())
    return BigRat(0);
  BigRat prob(1);
  for (int r = 0; r < kernel.rows(); ++r) {
    int t = asc[static_cast<size_t>(r)];
    const auto& row = kernel.row_masses(r);
    if (t < row.lo || t >= row.lo + static_cast<int>(row.mass.size()))
      return BigRat(0);
    if (row.mass[static_cast<size_t>(t - row.lo)] == 0) return BigRat(0);
    prob *= kernel.commit(r, t);
  }
  return prob;
}

LineConfig sample_line(const LineConfig& upper, RngStream& rng,
                       BigRat* probability) {
  if (upper.count() < 2)
    throw std::invalid_argument("sample_line: upper line needs >= 2 particles");
  BigRat prob(1);
  SamplerStats stats;
  auto desc = run_step<BigRat>(StepKind::diamond, upper.positions, rng, &prob, stats);
  if (probability) *probability = prob;
  return LineConfig(upper.line - 1, desc);
}

SystemSample sample_system(int N, RngStream& rng, SampleMode mode,
                           int exact_max_order) {
  if (N < 1) throw std::invalid_argument("sample_system: N >= 1");
  if (mode == SampleMode::exact && N > exact_max_order)
    throw budget_error("sample_system: exact mode refused above order " +
                       std::to_string(exact_max_order));
  if (mode == SampleMode::logfloat && N > kLogfloatMaxOrder)
    throw budget_error(
        "sample_system: logfloat conditionals degrade beyond order " +
        std::to_string(kLogfloatMaxOrder) + "; use shuffle_tiling for large orders");
  SystemSample out;
  out.probability = BigRat(1);
  std::vector<LineConfig> lines(static_cast<size_t>(N));
  std::vector<int> upper = full_descending(N, 0);  // forced line N+1
  for (int k = N; k >= 1; --k) {
    BigRat* prob = mode == SampleMode::exact ? &out.probability : nullptr;
    auto desc = run_step_mode(mode, StepKind::diamond, upper, rng, prob, out.stats);
    lines[static_cast<size_t>(k - 1)] = LineConfig(k, desc);
    upper = lines[static_cast<size_t>(k - 1)].positions;
  }
  out.system = ParticleSystem(N, std::move(lines));
  if (mode != SampleMode::exact) out.probability = BigRat(0);
  return out;
}

DominoTiling sample_tiling(int N, RngStream& rng, SampleMode mode) {
  SystemSample s = sample_system(N, rng, mode);
  long nbits = free_bit_count(s.system);
  std::vector<bool> bits(static_cast<size_t>(nbits));
  for (auto&& b : bits) b = rng.next_bit();
  return reconstruct_tiling(s.system, bits);
}

HalfSystemSample sample_half(int M, RngStream& rng, SampleMode mode,
                             int exact_max_order) {
  if (M < 1) throw std::invalid_argument("sample_half: M >= 1");
  if (mode == SampleMode::exact && M > exact_max_order)
    throw budget_error("sample_half: exact mode refused above order " +
                       std::to_string(exact_max_order));
  if (mode == SampleMode::logfloat && M > kLogfloatMaxHalfOrder)
    throw budget_error(
        "sample_half: logfloat conditionals degrade beyond order " +
        std::to_string(kLogfloatMaxHalfOrder));
  HalfSystemSample out;
  out.probability = BigRat(1);
  std::vector<LineConfig> lines(static_cast<size_t>(2 * M));
  std::vector<int> upper = full_descending(M + 1, 1);  // forced line 2M+1
  for (int j = 2 * M; j >= 1; --j) {
    StepKind kind = j % 2 == 0 ? StepKind::half_growth : StepKind::half_flat;
    BigRat* prob = mode == SampleMode::exact ? &out.probability : nullptr;
    auto desc = run_step_mode(mode, kind, upper, rng, prob, out.stats);
    lines[static_cast<size_t>(j - 1)] = LineConfig(j, desc);
    upper = lines[static_cast<size_t>(j - 1)].positions;
  }
  out.system = HalfParticleSystem(M, std::move(lines));
  if (mode != SampleMode::exact) out.probability = BigRat(0);
  return out;
}

// ---------------------------------------------------------------------------
// Table-lookup oracles.  Both totals are powers of two, so a uniform draw is
// a block of fair bits.
// ---------------------------------------------------------------------------

namespace {

struct FullTable {
  std::vector<ParticleSystem> systems;
  std::vector<BigInt> cumulative;
  long total_bits = 0;
};

struct HalfTable {
  std::vector<HalfParticleSystem> systems;
  std::vector<BigInt> cumulative;
  long total_bits = 0;
};

std::mutex g_table_mutex;
std::map<int, FullTable> g_full_tables;
std::map<int, HalfTable> g_half_tables;

BigInt random_bits(RngStream& rng, long bits) {
  BigInt r(0);
  for (long taken = 0; taken < bits; taken += 64) {
    long chunk = std::min<long>(64, bits - taken);
    uint64_t w = rng.next_u64();
    if (chunk < 64) w &= (uint64_t{1} << chunk) - 1;
    BigInt part(static_cast<unsigned long>(w >> 32));
    part <<= 32;
    part += static_cast<unsigned long>(w & 0xffffffffULL);
    part <<= taken;
    r += part;
  }
  return r;
}

template <class Table>
size_t table_draw(const Table& table, RngStream& rng) {
  BigInt r = random_bits(rng, table.total_bits);  // uniform on [0, 2^bits)
  auto it = std::upper_bound(table.cumulative.begin(), table.cumulative.end(), r);
  return static_cast<size_t>(it - table.cumulative.begin());
}

}  // namespace

ParticleSystem sample_bruteforce(int N, RngStream& rng) {
  if (N < 1 || N > 5)
    throw budget_error("sample_bruteforce: supported for N <= 5");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto& table = g_full_tables[N];
  if (table.systems.empty()) {
    BigInt cum(0);
    for_each_system(N, [&](const ParticleSystem& sys) {
      cum += config_weight(sys);
      table.systems.push_back(sys);
      table.cumulative.push_back(cum);
    });
    table.total_bits = static_cast<long>(N) * (N + 1) / 2;
    if (cum != pow2(table.total_bits))
      throw std::logic_error("sample_bruteforce: weight total mismatch");
  }
  return table.systems[table_draw(table, rng)];
}

HalfParticleSystem sample_half_bruteforce(int M, RngStream& rng) {
  if (M < 1 || M > 3)
    throw budget_error("sample_half_bruteforce: supported for M <= 3");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto& table = g_half_tables[M];
  if (table.systems.empty()) {
    BigInt cum(0);
    for_each_half_system(M, [&](const HalfParticleSystem& sys) {
      cum += half_config_weight(sys);
      table.systems.push_back(sys);
      table.cumulative.push_back(cum);
    });
    table.total_bits = static_cast<long>(M) * (M + 1);
    if (cum != pow2(table.total_bits))
      throw std::logic_error("sample_half_bruteforce: weight total mismatch");
  }
  return table.systems[table_draw(table, rng)];
}

}  // namespace aztec
