// Sequential sampler for one conditioning step of the interlaced chain.
//
// Given the upper line, the lower line's law is proportional to a product of
// a difference-product and per-particle endpoint-halving weights.  Summing
// that law over any subset of particles is a determinant whose unfixed rows
// are interval sums of the step's polynomial basis.  The candidate mass of
// value t in row r is the determinant with row r replaced by the point row
// at t, i.e. a dot product against column r of the maintained inverse.
// Committing a particle is a rank-one row replacement (Sherman-Morrison), so
// a full line costs O(n^3 + |I| n) rather than one O(n^3) solve per
// candidate.  Rows may be committed in any order; the chain-rule product of
// the returned masses is the conditional probability of the line either way.
// The drivers commit center-first, which keeps the committed points spread
// and the inverse well conditioned (bottom-up order builds dense committed
// clusters that floating-point elimination eventually cannot separate).
//
// Field choices: BigRat (exact mode; the row mass total is asserted to be
// exactly 1) and ScaledRealT (large-order mode; drift of the total away
// from 1 triggers refactorization, then an alarm).
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "aztec/exact.hpp"
#include "aztec/scaled_real.hpp"

namespace aztec {

// Conditioning families: a diamond step (upper line one longer than lower),
// the half-diamond equal-length step with the free bottom bound at 1, and
// the half-diamond growth step carrying the odd squared-variable basis.
enum class StepKind { diamond, half_flat, half_growth };

struct SamplerStats {
  double max_drift = 0.0;  // worst |row mass total - 1| after refactorization
  long refactor_count = 0;
  long alarm_count = 0;  // drift still above 1e-6 after refactorization

  void merge(const SamplerStats& o) {
    max_drift = std::max(max_drift, o.max_drift);
    refactor_count += o.refactor_count;
    alarm_count += o.alarm_count;
  }
};

namespace detail {

template <class F>
struct FieldOps;

template <>
struct FieldOps<BigRat> {
  static constexpr bool exact = true;
  static BigRat from_long(long v) { return BigRat(v); }
  static bool is_zero(const BigRat& x) { return sgn(x) == 0; }
  static bool is_negative(const BigRat& x) { return sgn(x) < 0; }
  // any nonzero pivot keeps exact elimination valid
  static bool pivot_better(const BigRat& cand, const BigRat& cur) {
    return !is_zero(cand) && is_zero(cur);
  }
  static double to_double(const BigRat& x) { return x.get_d(); }
};

template <class M>
struct FieldOps<ScaledRealT<M>> {
  using S = ScaledRealT<M>;
  static constexpr bool exact = false;
  static S from_long(long v) { return S(static_cast<double>(v)); }
  static bool is_zero(const S& x) { return x.zero(); }
  static bool is_negative(const S& x) { return x.sign() < 0; }
  static bool pivot_better(const S& cand, const S& cur) {
    return S::abs_less(cur, cand);
  }
  static double to_double(const S& x) { return x.to_double(); }
};

template <class F>
class LineKernel {
  using Ops = FieldOps<F>;

 public:
  LineKernel(StepKind kind, std::span<const int> upper_desc, int bottom_floor = 1)
      : kind_(kind) {
    upper_.assign(upper_desc.rbegin(), upper_desc.rend());  // ascending
    for (size_t i = 1; i < upper_.size(); ++i)
      if (upper_[i] <= upper_[i - 1])
        throw std::invalid_argument("LineKernel: upper line not strictly ordered");
    const int m = static_cast<int>(upper_.size());
    if (kind_ == StepKind::half_flat) {
      n_ = m;
      rows_.push_back({bottom_floor, upper_[0], false, true});
      for (int i = 1; i < m; ++i)
        rows_.push_back({upper_[i - 1], upper_[i], true, true});
    } else {
      if (m < 2) throw std::invalid_argument("LineKernel: upper line too short");
      n_ = m - 1;
      for (int i = 0; i + 1 < m; ++i)
        rows_.push_back({upper_[i], upper_[i + 1], true, true});
    }
    chosen_.assign(static_cast<size_t>(n_), INT32_MIN);
    committed_store_.assign(static_cast<size_t>(n_), {});
    build_basis();
    build_matrix();
    invert();
  }

  int rows() const { return n_; }
  int row_lo(int r) const { return rows_[static_cast<size_t>(r)].lo; }
  int row_hi(int r) const { return rows_[static_cast<size_t>(r)].hi; }
  const SamplerStats& stats() const { return stats_; }

  // Candidate masses for row r (normalized probabilities are mass/total).
  struct RowMasses {
    int lo = 0;
    std::vector<F> mass;
    F total{};
  };

  const RowMasses& row_masses(int r) {
    compute_masses(r);
    if constexpr (Ops::exact) {
      if (masses_.total != BigRat(1))
        throw std::logic_error("LineKernel: conditional masses do not sum to 1");
    } else {
      double drift = std::fabs(Ops::to_double(masses_.total) - 1.0);
      if (drift > 1e-9) {
        ++stats_.refactor_count;
        build_matrix();
        invert();
        compute_masses(r);
        drift = std::fabs(Ops::to_double(masses_.total) - 1.0);
        if (drift > 1e-6) ++stats_.alarm_count;
      }
      stats_.max_drift = std::max(stats_.max_drift, drift);
    }
    return masses_;
  }

  // Fixes row r at lattice value t; returns the normalized mass of t.
  F commit(int r, int t) {
    const auto& row = masses_;
    const F& beta = row.mass[static_cast<size_t>(t - row.lo)];
    if (Ops::is_zero(beta))
      throw std::invalid_argument("LineKernel: committing zero-mass value");
    replace_row(r, committed_row(r, t));
    chosen_[static_cast<size_t>(r)] = t;
    return beta / row.total;
  }

 private:
  struct Interval {
    int lo, hi;
    bool halve_lo, halve_hi;
  };

  F& inv_at(int r, int c) {
    return inv_[static_cast<size_t>(r) * static_cast<size_t>(n_) +
                static_cast<size_t>(c)];
  }

  // Sherman-Morrison update of the maintained inverse for row r := v.
  void replace_row(int r, const std::vector<F>& v) {
    std::vector<F> vinv(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k) {
      F acc{};
      for (int j = 0; j < n_; ++j)
        acc += v[static_cast<size_t>(j)] * inv_at(j, k);
      vinv[static_cast<size_t>(k)] = acc;
    }
    const F denom = vinv[static_cast<size_t>(r)];
    if (Ops::is_zero(denom))
      throw std::domain_error("LineKernel: singular row replacement");
    std::vector<F> col(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) col[static_cast<size_t>(j)] = inv_at(j, r);
    for (int k = 0; k < n_; ++k) {
      F corr = vinv[static_cast<size_t>(k)];
      if (k == r) corr -= Ops::from_long(1);
      if (Ops::is_zero(corr)) continue;
      corr /= denom;
      for (int j = 0; j < n_; ++j)
        inv_at(j, k) -= col[static_cast<size_t>(j)] * corr;
    }
  }

  // Row stored for a committed particle: the weighted point row.
  std::vector<F> committed_row(int r, int t) {
    auto v = point_row(r, t);
    committed_store_[static_cast<size_t>(r)] = v;
    return v;
  }

  int halvings(int r, int t) const {
    const auto& iv = rows_[static_cast<size_t>(r)];
    return (iv.halve_lo && t == iv.lo ? 1 : 0) +
           (iv.halve_hi && t == iv.hi ? 1 : 0);
  }

  F weight(int r, int t) const {
    switch (halvings(r, t)) {
      case 1:
        return Ops::from_long(1) / Ops::from_long(2);
      case 2:
        return Ops::from_long(1) / Ops::from_long(4);
      default:
        return Ops::from_long(1);
    }
  }

  const std::vector<F>& basis_row(int t) const {
    return basis_[static_cast<size_t>(t - tmin_)];
  }

  std::vector<F> point_row(int r, int t) const {
    std::vector<F> v = basis_row(t);
    F w = weight(r, t);
    for (auto& x : v) x *= w;
    return v;
  }

  void build_basis() {
    tmin_ = rows_.front().lo;
    tmax_ = rows_.back().hi;
    basis_.assign(static_cast<size_t>(tmax_ - tmin_ + 1), {});
    if constexpr (Ops::exact) {
      for (int t = tmin_; t <= tmax_; ++t) {
        auto& row = basis_[static_cast<size_t>(t - tmin_)];
        row.resize(static_cast<size_t>(n_));
        // diamond: monomials t^j; half families: powers of 2t-1 of the
        // step's parity (even for flat, odd for growth)
        BigInt base = kind_ == StepKind::diamond ? BigInt(t) : BigInt(2 * t - 1);
        BigInt sq = kind_ == StepKind::diamond ? base : base * base;
        BigInt cur = kind_ == StepKind::half_growth ? base : BigInt(1);
        for (int j = 0; j < n_; ++j) {
          row[static_cast<size_t>(j)] = BigRat(cur);
          cur *= sq;
        }
      }
    } else {
      // Orthonormal basis of the line's own lattice measure (discrete
      // Stieltjes recurrence with full reorthogonalization).  Basis values
      // stay O(1) and the conditioning matrix is near orthogonal.  The half
      // families take the even/odd polynomials of the measure symmetrized
      // about 1/2, so the recurrence runs on the uniform position grid
      // rather than the quadratically stretched squared variable.
      const int T = tmax_ - tmin_ + 1;
      const bool sym = kind_ != StepKind::diamond;
      const int P = sym ? 2 * T : T;       // recurrence grid
      const int degrees = sym ? 2 * n_ : n_;
      std::vector<double> x(static_cast<size_t>(P)), nu(static_cast<size_t>(P), 0.0);
      for (int t = tmin_; t <= tmax_; ++t) {
        size_t i = static_cast<size_t>(t - tmin_);
        if (sym) {
          x[i] = t - 0.5;
          x[i + static_cast<size_t>(T)] = -(t - 0.5);
        } else {
          x[i] = static_cast<double>(t);
        }
      }
      for (int r = 0; r < n_; ++r) {
        const auto& iv = rows_[static_cast<size_t>(r)];
        for (int t = iv.lo; t <= iv.hi; ++t) {
          size_t i = static_cast<size_t>(t - tmin_);
          double w = std::ldexp(1.0, -halvings(r, t));
          if (sym) {
            nu[i] += 0.5 * w;
            nu[i + static_cast<size_t>(T)] += 0.5 * w;
          } else {
            nu[i] += w;
          }
        }
      }
      // scale the variable to O(1) before the recurrence
      double xmin = x[0], xmax = x[0];
      for (double v : x) {
        xmin = std::min(xmin, v);
        xmax = std::max(xmax, v);
      }
      double xmid = sym ? 0.0 : 0.5 * (xmin + xmax);
      double xhalf = std::max(0.5, 0.5 * (xmax - xmin));
      for (auto& v : x) v = (v - xmid) / xhalf;

      std::vector<std::vector<double>> p(
          static_cast<size_t>(degrees), std::vector<double>(static_cast<size_t>(P)));
      double m0 = 0;
      for (double w : nu) m0 += w;
      for (int i = 0; i < P; ++i) p[0][static_cast<size_t>(i)] = 1.0 / std::sqrt(m0);
      double beta_prev = 0;
      for (int k = 0; k + 1 < degrees; ++k) {
        std::vector<double> w(static_cast<size_t>(P));
        double alpha = 0;
        for (int i = 0; i < P; ++i)
          alpha += nu[static_cast<size_t>(i)] * x[static_cast<size_t>(i)] *
                   p[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                   p[static_cast<size_t>(k)][static_cast<size_t>(i)];
        for (int i = 0; i < P; ++i) {
          double v = (x[static_cast<size_t>(i)] - alpha) *
                     p[static_cast<size_t>(k)][static_cast<size_t>(i)];
          if (k > 0)
            v -= beta_prev * p[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
          w[static_cast<size_t>(i)] = v;
        }
        // full reorthogonalization keeps the family numerically orthonormal
        for (int j = 0; j <= k; ++j) {
          double dot = 0;
          for (int i = 0; i < P; ++i)
            dot += nu[static_cast<size_t>(i)] * w[static_cast<size_t>(i)] *
                   p[static_cast<size_t>(j)][static_cast<size_t>(i)];
          for (int i = 0; i < P; ++i)
            w[static_cast<size_t>(i)] -=
                dot * p[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        double norm2 = 0;
        for (int i = 0; i < P; ++i)
          norm2 += nu[static_cast<size_t>(i)] * w[static_cast<size_t>(i)] *
                   w[static_cast<size_t>(i)];
        double beta = std::sqrt(norm2);
        if (!(beta > 0))
          throw std::domain_error("LineKernel: degenerate lattice measure");
        for (int i = 0; i < P; ++i)
          p[static_cast<size_t>(k + 1)][static_cast<size_t>(i)] =
              w[static_cast<size_t>(i)] / beta;
        beta_prev = beta;
      }
      // half_flat keeps the even polynomials, half_growth the odd ones (the
      // half-integer prefactor is intrinsic to the odd family)
      for (int t = tmin_; t <= tmax_; ++t) {
        size_t i = static_cast<size_t>(t - tmin_);
        auto& row = basis_[i];
        row.resize(static_cast<size_t>(n_));
        for (int j = 0; j < n_; ++j) {
          int deg = !sym ? j : (kind_ == StepKind::half_flat ? 2 * j : 2 * j + 1);
          row[static_cast<size_t>(j)] = F(p[static_cast<size_t>(deg)][i]);
        }
      }
    }
  }

  void build_matrix() {
    mat_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), F{});
    for (int r = 0; r < n_; ++r) {
      if (chosen_[static_cast<size_t>(r)] != INT32_MIN) {
        auto v = committed_store_[static_cast<size_t>(r)].empty()
                     ? point_row(r, chosen_[static_cast<size_t>(r)])
                     : committed_store_[static_cast<size_t>(r)];
        for (int j = 0; j < n_; ++j)
          mat_[static_cast<size_t>(r) * n_ + j] = v[static_cast<size_t>(j)];
        continue;
      }
      const auto& iv = rows_[static_cast<size_t>(r)];
      for (int t = iv.lo; t <= iv.hi; ++t) {
        F w = weight(r, t);
        const auto& b = basis_row(t);
        for (int j = 0; j < n_; ++j)
          mat_[static_cast<size_t>(r) * n_ + j] += w * b[static_cast<size_t>(j)];
      }
    }
  }

  void invert() {
    // Gauss-Jordan on a working copy, identity alongside.
    std::vector<F> a = mat_;
    inv_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), F{});
    for (int i = 0; i < n_; ++i) inv_at(i, i) = Ops::from_long(1);
    auto at = [&](int r, int c) -> F& {
      return a[static_cast<size_t>(r) * n_ + static_cast<size_t>(c)];
    };
    for (int c = 0; c < n_; ++c) {
      int pivot = -1;
      for (int r = c; r < n_; ++r) {
        if (Ops::is_zero(at(r, c))) continue;
        if (pivot == -1 || Ops::pivot_better(at(r, c), at(pivot, c))) pivot = r;
      }
      if (pivot == -1)
        throw std::domain_error("LineKernel: singular conditioning matrix");
      if (pivot != c) {
        for (int k = 0; k < n_; ++k) {
          std::swap(at(pivot, k), at(c, k));
          std::swap(inv_at(pivot, k), inv_at(c, k));
        }
      }
      F p = at(c, c);
      for (int k = 0; k < n_; ++k) {
        at(c, k) /= p;
        inv_at(c, k) /= p;
      }
      for (int r = 0; r < n_; ++r) {
        if (r == c || Ops::is_zero(at(r, c))) continue;
        F f = at(r, c);
        for (int k = 0; k < n_; ++k) {
          at(r, k) -= f * at(c, k);
          inv_at(r, k) -= f * inv_at(c, k);
        }
      }
    }
  }

  void compute_masses(int r) {
    const auto& iv = rows_[static_cast<size_t>(r)];
    masses_.lo = iv.lo;
    masses_.mass.assign(static_cast<size_t>(iv.hi - iv.lo + 1), F{});
    masses_.total = F{};
    std::vector<F> col(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) col[static_cast<size_t>(j)] = inv_at(j, r);
    // shared endpoints already taken by a committed neighbour carry zero mass
    const int below = r > 0 ? chosen_[static_cast<size_t>(r - 1)] : INT32_MIN;
    const int above = r + 1 < n_ ? chosen_[static_cast<size_t>(r + 1)] : INT32_MIN;
    for (int t = iv.lo; t <= iv.hi; ++t) {
      F& m = masses_.mass[static_cast<size_t>(t - iv.lo)];
      if (t == below || t == above) continue;
      const auto& b = basis_row(t);
      F acc{};
      for (int j = 0; j < n_; ++j) acc += b[static_cast<size_t>(j)] * col[static_cast<size_t>(j)];
      acc *= weight(r, t);
      if constexpr (!Ops::exact) {
        if (Ops::is_negative(acc)) acc = F{};  // roundoff at a zero-mass point
      }
      m = acc;
      masses_.total += m;
    }
  }

  StepKind kind_;
  int n_ = 0;
  int tmin_ = 0, tmax_ = 0;
  std::vector<int> upper_;
  std::vector<Interval> rows_;
  std::vector<std::vector<F>> basis_;
  std::vector<F> mat_, inv_;
  std::vector<int> chosen_;
  std::vector<std::vector<F>> committed_store_;  // rows as kept in the matrix
  RowMasses masses_;
  SamplerStats stats_;
};

}  // namespace detail
}  // namespace aztec
