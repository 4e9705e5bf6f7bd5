// Seeded, stream-splittable random source.  A given (seed, stream) pair
// reproduces the same draws bit for bit, independent of thread count.
#pragma once

#include <cstdint>

#include "aztec/exact.hpp"

namespace aztec {

namespace detail {
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// xoshiro256** seeded through splitmix64 from (seed, stream).
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream = 0) {
    uint64_t init = seed;
    uint64_t mix = detail::splitmix64(init) ^ (stream * 0xd1342543de82ef95ULL);
    uint64_t st = mix + 0x9e3779b97f4a7c15ULL * (stream + 1);
    for (auto& w : s_) w = detail::splitmix64(st);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bit() {
    if (bit_count_ == 0) {
      bit_buffer_ = next_u64();
      bit_count_ = 64;
    }
    bool b = bit_buffer_ & 1;
    bit_buffer_ >>= 1;
    --bit_count_;
    return b;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
  uint64_t bit_buffer_ = 0;
  int bit_count_ = 0;
};

// A uniform variate on [0, 1) revealed one bit at a time, supporting exact
// comparisons against rationals.  Used to draw from exact categorical
// distributions without ever rounding.
class LazyUniform {
 public:
  explicit LazyUniform(RngStream& rng) : rng_(rng) {}

  // Exact test U < q.  Refines the dyadic interval containing U until the
  // comparison is decided.
  bool less_than(const BigRat& q) {
    if (q <= 0) return false;
    if (q >= 1) return true;
    while (true) {
      // U lies in [num/2^bits, (num+1)/2^bits)
      BigRat hi(num_ + 1);
      hi /= BigRat(pow2(bits_));
      if (hi <= q) return true;
      BigRat lo(num_);
      lo /= BigRat(pow2(bits_));
      if (lo >= q) return false;
      num_ <<= 1;
      if (rng_.next_bit()) num_ += 1;
      ++bits_;
    }
  }

 private:
  RngStream& rng_;
  BigInt num_{0};
  long bits_ = 0;
};

// Draws an index with exact probabilities mass[i] / total.
template <class MassRange>
int exact_categorical(RngStream& rng, const MassRange& mass, const BigRat& total) {
  LazyUniform u(rng);
  BigRat cum(0);
  int last = -1;
  for (size_t i = 0; i < mass.size(); ++i) {
    if (mass[i] == 0) continue;
    last = static_cast<int>(i);
    cum += mass[i];
    if (u.less_than(cum / total)) return static_cast<int>(i);
  }
  return last;  // guards against U falling on the final boundary
}

}  // namespace aztec
