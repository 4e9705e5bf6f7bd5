#include "aztec/distributions.hpp"

#include <stdexcept>

namespace aztec {

BigInt count_tilings(int N) {
  if (N < 1) throw std::invalid_argument("count_tilings: N >= 1");
  return pow2(static_cast<long>(N) * (N + 1) / 2);
}

BigRat joint_pdf(const ParticleSystem& system) {
  const int N = system.order;
  if (!system.valid()) return BigRat(0);
  long alpha = chain_adjacency(system.lines);
  return pow2_rat(static_cast<long>(N) * (N - 1) / 2 - alpha) /
         BigRat(count_tilings(N));
}

BigRat tail_normalization(int m, int N) {
  if (m < 1 || m > N + 1) throw std::invalid_argument("tail_normalization");
  BigRat d = BigRat(count_tilings(N)) * pow2_rat(-static_cast<long>(N) * (N - 1) / 2);
  for (int i = 1; i < m; ++i) d *= BigRat(factorial(i));
  return d;
}

BigRat tail_marginal_pdf(int N, std::span<const LineConfig> tail) {
  if (tail.empty()) throw std::invalid_argument("tail_marginal_pdf: no lines");
  const int m = tail.front().line;
  if (m < 1 || tail.back().line != N)
    throw std::invalid_argument("tail_marginal_pdf: lines must run m..N");
  for (size_t i = 0; i < tail.size(); ++i)
    if (tail[i].line != m + static_cast<int>(i) ||
        tail[i].count() != m + static_cast<int>(i))
      return BigRat(0);
  if (!is_valid_chain(tail, N)) return BigRat(0);
  long alpha = chain_adjacency(tail);  // pairs (m, m+1) .. (N-1, N)
  return BigRat(vandermonde(tail.front().positions)) /
         (tail_normalization(m, N) * BigRat(pow2(alpha)));
}

BigRat y_joint_pdf(int N, std::span<const LineConfig> hole_lines) {
  if (hole_lines.empty()) throw std::invalid_argument("y_joint_pdf: no lines");
  const int n = static_cast<int>(hole_lines.size());
  for (int k = 1; k <= n; ++k)
    if (hole_lines[static_cast<size_t>(k - 1)].line != k ||
        hole_lines[static_cast<size_t>(k - 1)].count() != k)
      return BigRat(0);
  if (!is_valid_chain(hole_lines, N)) return BigRat(0);
  const auto& top = hole_lines.back().positions;  // y^{(n)}
  BigRat numer(1);
  for (int i = 0; i < n; ++i) numer *= BigRat(factorial(N - i));
  BigRat denom(1);
  for (int y : top) denom *= BigRat(factorial(y) * factorial(N - y));
  long alpha = chain_adjacency(hole_lines);
  long exp2 = N + static_cast<long>(N - n) * (n - 1) + alpha;
  return numer / denom * BigRat(vandermonde(top)) * pow2_rat(-exp2);
}

BigRat one_line_pdf(int n, int N, std::span<const int> positions) {
  if (n < 1 || n > N) throw std::invalid_argument("one_line_pdf: 1 <= n <= N");
  LineConfig ln(n, std::vector<int>(positions.begin(), positions.end()));
  if (ln.count() != n || !ln.within(0, N)) return BigRat(0);
  BigInt delta = vandermonde(ln.positions);
  BigRat weight(1);
  for (int x : ln.positions) weight /= BigRat(factorial(x) * factorial(N - x));
  BigRat norm(1);
  for (int i = 0; i < n; ++i)
    norm *= BigRat(factorial(N - i)) / BigRat(factorial(i));
  long exp2 = N + static_cast<long>(N - n) * (n - 1);
  return BigRat(delta * delta) * weight * norm * pow2_rat(-exp2);
}

}  // namespace aztec
