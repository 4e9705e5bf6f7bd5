#include "aztec/exact.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace aztec {

namespace {
// deque keeps element references stable while the cache grows
std::deque<BigInt> g_factorials = {BigInt(1)};
std::atomic<size_t> g_factorials_ready{1};
std::mutex g_factorial_mutex;
}  // namespace

const BigInt& factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (static_cast<size_t>(n) >= g_factorials_ready.load(std::memory_order_acquire))
    warm_factorials(n);
  return g_factorials[static_cast<size_t>(n)];
}

void warm_factorials(long n) {
  std::lock_guard<std::mutex> lock(g_factorial_mutex);
  while (g_factorials.size() <= static_cast<size_t>(n)) {
    g_factorials.push_back(g_factorials.back() *
                           BigInt(static_cast<long>(g_factorials.size())));
    g_factorials_ready.store(g_factorials.size(), std::memory_order_release);
  }
}

BigInt pow2(long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

BigRat pow2_rat(long e) {
  if (e >= 0) return BigRat(pow2(e));
  return BigRat(1) / BigRat(pow2(-e));
}

BigRat rat(long num, long den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_string(const BigRat& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

double rat_double(const BigRat& q) { return q.get_d(); }

bool is_probability(const BigRat& q) { return q >= 0 && q <= 1; }

BigRat exact_det(std::vector<std::vector<BigRat>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("exact_det: not square");
  BigRat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return BigRat(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      BigRat f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace aztec
