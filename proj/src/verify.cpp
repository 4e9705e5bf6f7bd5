#include "aztec/verify.hpp"

#include <map>
#include <sstream>

#include "aztec/distributions.hpp"
#include "aztec/half.hpp"
#include "aztec/krawtchouk.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

namespace {

using TailKey = std::vector<std::vector<int>>;

TailKey key_of(std::span<const LineConfig> lines) {
  TailKey k;
  for (const auto& ln : lines) k.push_back(ln.positions);
  return k;
}

CheckResult check(std::string name, bool pass, std::string detail = "") {
  return CheckResult{std::move(name), pass, std::move(detail)};
}

}  // namespace

bool all_pass(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool count_check(int N) {
  BigInt formula = count_tilings(N);
  if (formula != enumerate_tilings(N)) return false;
  BigInt weighted(0);
  for_each_system(N, [&](const ParticleSystem& s) { weighted += config_weight(s); });
  return formula == weighted;
}

CheckList verify_counts(int max_order) {
  CheckList out;
  for (int N = 1; N <= max_order; ++N) {
    BigInt formula = count_tilings(N);
    BigInt enumerated = enumerate_tilings(N);
    BigInt weighted(0);
    for_each_system(N, [&](const ParticleSystem& s) { weighted += config_weight(s); });
    std::ostringstream os;
    os << "N=" << N << ": formula " << formula << ", enumeration " << enumerated
       << ", weight sum " << weighted;
    out.push_back(check("count order " + std::to_string(N),
                        formula == enumerated && formula == weighted, os.str()));
  }
  return out;
}

CheckList verify_prop1(int N) {
  CheckList out;
  // brute-force joint table: fiber weights normalized by their own total
  std::vector<ParticleSystem> systems;
  BigInt total(0);
  for_each_system(N, [&](const ParticleSystem& s) {
    systems.push_back(s);
    total += config_weight(s);
  });

  for (int m = 1; m <= N; ++m) {
    std::map<TailKey, BigRat> brute;
    for (const auto& s : systems) {
      std::span<const LineConfig> tail{s.lines.data() + (m - 1),
                                       static_cast<size_t>(N - m + 1)};
      brute[key_of(tail)] += BigRat(config_weight(s)) / BigRat(total);
    }
    bool pass = true;
    for (const auto& s : systems) {
      std::span<const LineConfig> tail{s.lines.data() + (m - 1),
                                       static_cast<size_t>(N - m + 1)};
      if (tail_marginal_pdf(N, tail) != brute[key_of(tail)]) {
        pass = false;
        break;
      }
    }
    out.push_back(check("tail marginal m=" + std::to_string(m) +
                            " N=" + std::to_string(N),
                        pass, std::to_string(brute.size()) + " configurations"));
  }

  // inductive consistency: summing line m reproduces the start-(m+1) marginal
  bool inductive = true;
  for (int m = 1; m < N && inductive; ++m) {
    std::map<TailKey, BigRat> summed, direct;
    std::map<TailKey, bool> seen;
    for (const auto& s : systems) {
      std::span<const LineConfig> tail{s.lines.data() + (m - 1),
                                       static_cast<size_t>(N - m + 1)};
      auto tk = key_of(tail);
      if (seen[tk]) continue;
      seen[tk] = true;
      std::span<const LineConfig> up{s.lines.data() + m,
                                     static_cast<size_t>(N - m)};
      auto uk = key_of(up);
      summed[uk] += tail_marginal_pdf(N, tail);
      if (!direct.count(uk)) direct[uk] = tail_marginal_pdf(N, up);
    }
    for (const auto& [k, v] : direct)
      if (summed[k] != v) inductive = false;
  }
  out.push_back(check("line-summing induction N=" + std::to_string(N), inductive));
  return out;
}

CheckList verify_one_line(int max_brute_order, int max_norm_order) {
  CheckList out;
  bool norm = true;
  for (int N = 1; N <= max_norm_order && norm; ++N)
    for (int n = 1; n <= N && norm; ++n) {
      BigRat sum(0);
      for (auto& pos : descending_subsets(0, N, n)) sum += one_line_pdf(n, N, pos);
      if (sum != 1) norm = false;
    }
  out.push_back(check("one-line normalization up to N=" +
                          std::to_string(max_norm_order),
                      norm));

  for (int N = 1; N <= max_brute_order; ++N) {
    std::vector<std::map<std::vector<int>, BigRat>> brute(static_cast<size_t>(N) + 1);
    BigInt total(0);
    for_each_system(N, [&](const ParticleSystem& s) { total += config_weight(s); });
    for_each_system(N, [&](const ParticleSystem& s) {
      BigRat p = BigRat(config_weight(s)) / BigRat(total);
      for (int n = 1; n <= N; ++n)
        brute[static_cast<size_t>(n)][s.lines[static_cast<size_t>(n - 1)].positions] += p;
    });
    bool pass = true;
    for (int n = 1; n <= N && pass; ++n)
      for (const auto& [pos, p] : brute[static_cast<size_t>(n)])
        if (one_line_pdf(n, N, pos) != p) {
          pass = false;
          break;
        }
    out.push_back(check("one-line vs brute marginal N=" + std::to_string(N), pass));
  }
  return out;
}

CheckList verify_complement(int N) {
  CheckList out;
  BigInt prod_fact(1);
  for (int i = 1; i <= N; ++i) prod_fact *= factorial(i);

  bool involution = true, delta_swap = true, alpha_swap = true, yjoint = true;
  std::vector<ParticleSystem> systems;
  BigInt total(0);
  for_each_system(N, [&](const ParticleSystem& s) {
    systems.push_back(s);
    total += config_weight(s);
  });
  for (const auto& s : systems) {
    ParticleSystem holes = hole_complement(s);
    if (!(hole_complement(holes).lines == s.lines && holes.valid()))
      involution = false;
    for (int n = 1; n <= N; ++n) {
      const auto& x = s.lines[static_cast<size_t>(n - 1)].positions;
      const auto& y = holes.lines[static_cast<size_t>(N - n)].positions;  // line N+1-n
      BigInt lhs = vandermonde(x);
      BigInt fac(1);
      for (int yi : y) fac *= factorial(yi) * factorial(N - yi);
      if (lhs * fac != vandermonde(y) * prod_fact) delta_swap = false;
      // adjacency swap: alpha(x^{(n)}) = alpha(y^{(N-n)}) + 2n - N
      if (n < N) {
        int ax = adjacency_count(x, s.lines[static_cast<size_t>(n)].positions);
        int ay = adjacency_count(
            holes.lines[static_cast<size_t>(N - n - 1)].positions,
            holes.lines[static_cast<size_t>(N - n)].positions);
        if (ax != ay + 2 * n - N) alpha_swap = false;
      }
    }
    // hole-side joint law of lines 1..n vs the particle-tail marginal
    for (int n = 1; n <= N; ++n) {
      std::span<const LineConfig> tail{s.lines.data() + (N - n),
                                       static_cast<size_t>(n)};
      std::span<const LineConfig> hl{holes.lines.data(), static_cast<size_t>(n)};
      if (y_joint_pdf(N, hl) != tail_marginal_pdf(N, tail)) yjoint = false;
    }
  }
  out.push_back(check("complement involution N=" + std::to_string(N), involution));
  out.push_back(check("difference-product swap N=" + std::to_string(N), delta_swap));
  out.push_back(check("adjacency swap N=" + std::to_string(N), alpha_swap));
  out.push_back(check("hole joint law N=" + std::to_string(N), yjoint));
  return out;
}

CheckList verify_half(int M) {
  CheckList out;
  std::vector<HalfParticleSystem> systems;
  BigInt weight_total(0);
  BigRat pdf_total(0);
  for_each_half_system(M, [&](const HalfParticleSystem& s) {
    systems.push_back(s);
    weight_total += half_config_weight(s);
    pdf_total += half_joint_pdf(s);
  });
  out.push_back(check("half count M=" + std::to_string(M),
                      weight_total == count_half(M) && pdf_total == 1,
                      std::to_string(systems.size()) + " systems"));

  bool tails = true;
  for (int j0 = 1; j0 <= 2 * M && tails; ++j0) {
    std::map<TailKey, BigRat> brute;
    for (const auto& s : systems) {
      std::span<const LineConfig> tail{s.lines.data() + (j0 - 1),
                                       static_cast<size_t>(2 * M - j0 + 1)};
      brute[key_of(tail)] += half_joint_pdf(s);
    }
    for (const auto& s : systems) {
      std::span<const LineConfig> tail{s.lines.data() + (j0 - 1),
                                       static_cast<size_t>(2 * M - j0 + 1)};
      if (half_tail_pdf(M, tail) != brute[key_of(tail)]) {
        tails = false;
        break;
      }
    }
  }
  out.push_back(check("half tail marginals M=" + std::to_string(M), tails));

  bool yforms = true;
  for (const auto& s : systems) {
    for (int r = 1; r <= 2 * M && yforms; ++r) {
      std::span<const LineConfig> tail{s.lines.data() + (2 * M - r),
                                       static_cast<size_t>(r)};
      auto holes = half_hole_lines(M, tail);
      if (half_y_pdf(M, holes) != half_tail_pdf(M, tail)) yforms = false;
    }
    if (!yforms) break;
  }
  out.push_back(check("half hole forms M=" + std::to_string(M), yforms));

  bool one_line = true;
  for (int j = 1; j <= 2 * M && one_line; ++j) {
    std::map<std::vector<int>, BigRat> brute;
    for (const auto& s : systems) {
      std::span<const LineConfig> tail{s.lines.data() + (2 * M - j),
                                       static_cast<size_t>(j)};
      auto holes = half_hole_lines(M, tail);
      brute[holes.back().positions] += half_joint_pdf(s);
    }
    for (const auto& [pos, p] : brute)
      if (half_one_line_pdf(j, M, pos) != p) {
        one_line = false;
        break;
      }
  }
  out.push_back(check("half one-line vs brute M=" + std::to_string(M), one_line));

  bool norm = true;
  for (int j = 1; j <= 2 * M && norm; ++j) {
    BigRat sum(0);
    for (auto& pos : descending_subsets(1, M + 1, half_line_count(j)))
      sum += half_one_line_pdf(j, M, pos);
    if (sum != 1) norm = false;
  }
  out.push_back(check("half one-line normalization M=" + std::to_string(M), norm));
  return out;
}

CheckList verify_appendix(int max_norm_order, int max_m, int max_n) {
  CheckList out;
  bool norms = true;
  for (int N = 1; N <= max_norm_order && norms; ++N)
    if (!krawtchouk_norm_check(N, N)) norms = false;
  out.push_back(check("orthogonality norms up to N=" +
                          std::to_string(max_norm_order),
                      norms));

  bool sums = true;
  for (int M = 1; M <= max_m && sums; ++M)
    for (int n = 1; n <= std::min(max_n, M) && sums; ++n)
      if (!type_b_identities_hold(M, n)) sums = false;
  out.push_back(check("squared-variable summation identities", sums));

  bool reconcile = true;
  for (int M = 1; M <= 5 && reconcile; ++M)
    for (int m = 1; m <= std::min(3, M) && reconcile; ++m) {
      if (half_one_line_prefactor(2 * m - 1, M) * type_b_constant_odd(M, m) != 1)
        reconcile = false;
      if (half_one_line_prefactor(2 * m, M) * type_b_constant_even(M, m) != 1)
        reconcile = false;
    }
  out.push_back(check("constants reconcile with one-line normalizations",
                      reconcile));
  return out;
}

}  // namespace aztec
