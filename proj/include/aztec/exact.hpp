// Exact integer/rational arithmetic used throughout the library.
//
// All probability formulas in the combinatorial modules are evaluated over
// arbitrary-precision rationals (GMP); floating point only enters in the
// asymptotics module and the large-order sampler mode.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace aztec {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Thrown when a request exceeds the configured cost budget (CLI exit code 3).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n! as an exact integer, n >= 0.  Values are cached; the cache grows on
// demand and is safe to read from multiple threads once warmed.
const BigInt& factorial(long n);

// Pre-warms the factorial cache up to n (call once before parallel sections).
void warm_factorials(long n);

// 2^e for e >= 0.
BigInt pow2(long e);

// 2^e as a rational, e may be negative.
BigRat pow2_rat(long e);

// Exact rational from integer numerator/denominator.
BigRat rat(long num, long den);

// Canonical "p/q" rendering ("p" when q == 1).
std::string rat_string(const BigRat& q);

double rat_double(const BigRat& q);

// True if q is a probability in [0, 1].
bool is_probability(const BigRat& q);

// Determinant of a square rational matrix by fraction-free elimination.
BigRat exact_det(std::vector<std::vector<BigRat>> m);

}  // namespace aztec
