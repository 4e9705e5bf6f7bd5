// Exhaustive oracle suite wiring the closed-form laws to brute-force
// enumeration at small order.  Each check returns pass/fail plus a short
// detail string; the CLI exits nonzero on any failure.
#pragma once

#include <string>
#include <vector>

#include "aztec/exact.hpp"

namespace aztec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

bool all_pass(const CheckList& checks);

// Tiling counts: closed form vs direct enumeration vs summed fiber weights.
CheckList verify_counts(int max_order);

// Single-order count comparison (true iff all three routes agree).
bool count_check(int N);

// Tail marginals against brute-force marginalization of the joint law, for
// every configuration and every start line at order N; plus the inductive
// line-summing consistency.
CheckList verify_prop1(int N);

// One-line law: exact normalization for n <= N <= max_norm_order and
// equality with brute-force marginals for N <= max_brute_order.
CheckList verify_one_line(int max_brute_order, int max_norm_order);

// Complement machinery at order N: involution, the difference-product swap
// identity, the adjacency swap, and the hole-side joint law.
CheckList verify_complement(int N);

// Half diamond at order M: counts, tail marginals vs brute force, hole-side
// forms, one-line laws, and one-line normalization.
CheckList verify_half(int M);

// Appendix identities: orthogonality norms for N <= max_norm_order, the
// squared-variable summation identities for n <= max_n and M <= max_m, and
// the reconciliation with the half-diamond one-line normalizations.
CheckList verify_appendix(int max_norm_order, int max_m, int max_n);

}  // namespace aztec
