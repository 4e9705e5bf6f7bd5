#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "aztec/sampler.hpp"

namespace aztec {

// Growth shuffling: build the order-N tiling by alternating destruction of
// facing pairs, a one-step slide of every domino by its type, and uniform
// refill of the vacated 2x2 blocks.  Every refill consumes one fair bit, so
// the resulting tiling is exactly uniform.  Integer arithmetic only.
//
// Under this library's colouring the slide directions are: east-type down,
// west-type up, south-type right, north-type left; facing pairs are a west
// domino directly below an east domino, and a north domino directly right of
// a south domino.  The directions are pinned by the growth invariant (after
// the slide the vacancies of the next diamond split into 2x2 blocks), which
// is asserted at every step.

namespace {

struct Grid {
  int order, side;
  std::vector<int> cell;
  explicit Grid(int n) : order(n), side(2 * n + 2), cell(static_cast<size_t>(side) * side, -1) {}
  int& at(int x, int y) {
    return cell[static_cast<size_t>(x + order + 1) * side +
                static_cast<size_t>(y + order + 1)];
  }
  void clear() { std::fill(cell.begin(), cell.end(), -1); }
};

}  // namespace

DominoTiling shuffle_tiling(int order, RngStream& rng) {
  if (order < 1) throw std::invalid_argument("shuffle_tiling: order >= 1");
  std::vector<Domino> cur;
  Grid anchors(order), covered(order);

  for (int k = 0; k < order; ++k) {
    for (auto& d : cur) d.type = classify_domino(k, d.x, d.y, d.horizontal);

    // destruction: facing pairs annihilate
    anchors.clear();
    for (size_t i = 0; i < cur.size(); ++i)
      anchors.at(cur[i].x, cur[i].y) = static_cast<int>(i);
    std::vector<char> dead(cur.size(), 0);
    for (size_t i = 0; i < cur.size(); ++i) {
      const Domino& d = cur[i];
      if (d.type == DominoType::east) {
        int j = anchors.at(d.x, d.y - 1);
        if (j >= 0 && cur[static_cast<size_t>(j)].horizontal &&
            cur[static_cast<size_t>(j)].type == DominoType::west)
          dead[i] = dead[static_cast<size_t>(j)] = 1;
      } else if (d.type == DominoType::south) {
        int j = anchors.at(d.x + 1, d.y);
        if (j >= 0 && !cur[static_cast<size_t>(j)].horizontal &&
            cur[static_cast<size_t>(j)].type == DominoType::north)
          dead[i] = dead[static_cast<size_t>(j)] = 1;
      }
    }

    // slide the survivors
    std::vector<Domino> next;
    next.reserve(cur.size() + static_cast<size_t>(k) + 1);
    for (size_t i = 0; i < cur.size(); ++i) {
      if (dead[i]) continue;
      Domino d = cur[i];
      switch (d.type) {
        case DominoType::east: d.y -= 1; break;
        case DominoType::west: d.y += 1; break;
        case DominoType::south: d.x += 1; break;
        case DominoType::north: d.x -= 1; break;
      }
      next.push_back(d);
    }

    // refill: vacancies of the grown diamond split into 2x2 blocks
    const int grown = k + 1;
    covered.clear();
    for (const auto& d : next) {
      int x2 = d.horizontal ? d.x + 1 : d.x;
      int y2 = d.horizontal ? d.y : d.y + 1;
      if (!in_diamond(grown, d.x, d.y) || !in_diamond(grown, x2, y2) ||
          covered.at(d.x, d.y) >= 0 || covered.at(x2, y2) >= 0)
        throw std::logic_error("shuffle_tiling: slide produced an overlap");
      covered.at(d.x, d.y) = 1;
      covered.at(x2, y2) = 1;
    }
    for (int y = -grown - 1; y <= grown; ++y) {
      for (int x = -grown - 1; x <= grown; ++x) {
        if (!in_diamond(grown, x, y) || covered.at(x, y) >= 0) continue;
        bool block = in_diamond(grown, x + 1, y) && in_diamond(grown, x, y + 1) &&
                     in_diamond(grown, x + 1, y + 1) && covered.at(x + 1, y) < 0 &&
                     covered.at(x, y + 1) < 0 && covered.at(x + 1, y + 1) < 0;
        if (!block)
          throw std::logic_error("shuffle_tiling: vacancies are not 2x2 blocks");
        covered.at(x, y) = covered.at(x + 1, y) = 1;
        covered.at(x, y + 1) = covered.at(x + 1, y + 1) = 1;
        if (rng.next_bit()) {
          next.push_back(Domino{x, y, false, DominoType::north});
          next.push_back(Domino{x + 1, y, false, DominoType::north});
        } else {
          next.push_back(Domino{x, y, true, DominoType::east});
          next.push_back(Domino{x, y + 1, true, DominoType::east});
        }
      }
    }
    cur = std::move(next);
  }
  return make_tiling(order, std::move(cur));
}

// ---------------------------------------------------------------------------
// One-line sampler for the half diamond.  The hole-line law is a squared
// difference product in u = (y - 1/2)^2 times a positive weight, i.e. an
// m-point determinantal projection ensemble on the finite u-grid.  Sampling
// follows the standard projection-kernel scheme: draw a point from the
// diagonal of the kernel, project the orthonormal frame off that point,
// repeat.  All vectors are O(1), so plain doubles suffice at any order.
// ---------------------------------------------------------------------------

LineConfig sample_half_line(int line, int M, RngStream& rng) {
  if (line < 1 || line > 2 * M)
    throw std::invalid_argument("sample_half_line: line out of range");
  const int m = half_line_count(line);
  const int T = M + 1;  // lattice positions 1..M+1

  // sqrt-weighted lattice: w(y) = 1/((M+y)!(M+1-y)!) [* (y-1/2)^2 on even lines]
  std::vector<double> u(static_cast<size_t>(T)), sqw(static_cast<size_t>(T));
  double log_max = -std::numeric_limits<double>::infinity();
  std::vector<double> logw(static_cast<size_t>(T));
  for (int y = 1; y <= T; ++y) {
    size_t i = static_cast<size_t>(y - 1);
    u[i] = (y - 0.5) * (y - 0.5);
    logw[i] = -std::lgamma(static_cast<double>(M + y) + 1.0) -
              std::lgamma(static_cast<double>(M + 1 - y) + 1.0);
    if (line % 2 == 0) logw[i] += 2.0 * std::log(y - 0.5);
    log_max = std::max(log_max, logw[i]);
  }
  for (int i = 0; i < T; ++i)
    sqw[static_cast<size_t>(i)] = std::exp(0.5 * (logw[static_cast<size_t>(i)] - log_max));
  double uscale = u.back();
  for (auto& v : u) v /= uscale;

  // orthonormal frame V[:,j] = sqrt(w) p_j(u), built by the weighted
  // recurrence with full reorthogonalization
  std::vector<std::vector<double>> v(static_cast<size_t>(m),
                                     std::vector<double>(static_cast<size_t>(T)));
  double norm0 = 0;
  for (double s : sqw) norm0 += s * s;
  norm0 = std::sqrt(norm0);
  for (int i = 0; i < T; ++i) v[0][static_cast<size_t>(i)] = sqw[static_cast<size_t>(i)] / norm0;
  for (int j = 1; j < m; ++j) {
    auto& w = v[static_cast<size_t>(j)];
    for (int i = 0; i < T; ++i)
      w[static_cast<size_t>(i)] =
          u[static_cast<size_t>(i)] * v[static_cast<size_t>(j - 1)][static_cast<size_t>(i)];
    for (int k = 0; k < j; ++k) {
      double dot = 0;
      for (int i = 0; i < T; ++i)
        dot += w[static_cast<size_t>(i)] * v[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (int i = 0; i < T; ++i)
        w[static_cast<size_t>(i)] -= dot * v[static_cast<size_t>(k)][static_cast<size_t>(i)];
    }
    double nn = 0;
    for (double x : w) nn += x * x;
    nn = std::sqrt(nn);
    if (!(nn > 0)) throw std::domain_error("sample_half_line: degenerate weight");
    for (auto& x : w) x /= nn;
  }

  // projection-kernel sampling: m points without replacement
  std::vector<int> chosen;
  std::vector<std::vector<double>> frame = std::move(v);
  for (int step = m; step >= 1; --step) {
    std::vector<double> diag(static_cast<size_t>(T), 0.0);
    double total = 0;
    for (const auto& col : frame)
      for (int i = 0; i < T; ++i) diag[static_cast<size_t>(i)] += col[static_cast<size_t>(i)] * col[static_cast<size_t>(i)];
    for (double d : diag) total += d;
    double target = rng.next_double() * total;
    int pick = T - 1;
    double cum = 0;
    for (int i = 0; i < T; ++i) {
      cum += diag[static_cast<size_t>(i)];
      if (cum >= target) {
        pick = i;
        break;
      }
    }
    chosen.push_back(pick + 1);  // lattice position y
    // rotate the frame so one column carries the picked point, then drop it
    size_t best = 0;
    for (size_t c = 1; c < frame.size(); ++c)
      if (std::fabs(frame[c][static_cast<size_t>(pick)]) >
          std::fabs(frame[best][static_cast<size_t>(pick)]))
        best = c;
    std::swap(frame[best], frame.back());
    auto pivot = std::move(frame.back());
    frame.pop_back();
    double pv = pivot[static_cast<size_t>(pick)];
    for (auto& col : frame) {
      double f = col[static_cast<size_t>(pick)] / pv;
      if (f == 0) continue;
      for (int i = 0; i < T; ++i) col[static_cast<size_t>(i)] -= f * pivot[static_cast<size_t>(i)];
    }
    // re-orthonormalize the reduced frame (cheap, keeps the projection exact)
    for (size_t c = 0; c < frame.size(); ++c) {
      for (size_t k = 0; k < c; ++k) {
        double dot = 0;
        for (int i = 0; i < T; ++i) dot += frame[c][static_cast<size_t>(i)] * frame[k][static_cast<size_t>(i)];
        for (int i = 0; i < T; ++i) frame[c][static_cast<size_t>(i)] -= dot * frame[k][static_cast<size_t>(i)];
      }
      double nn = 0;
      for (double x : frame[c]) nn += x * x;
      nn = std::sqrt(nn);
      for (auto& x : frame[c]) x /= nn;
    }
  }
  std::sort(chosen.begin(), chosen.end(), std::greater<int>());
  return LineConfig(line, std::move(chosen));
}

}  // namespace aztec
