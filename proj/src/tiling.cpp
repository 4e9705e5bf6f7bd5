#include "aztec/tiling.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace aztec {

int diamond_reach(int t) { return t >= 0 ? t + 1 : -t; }

bool in_diamond(int order, int sx, int sy) {
  return diamond_reach(sx) + diamond_reach(sy) <= order + 1;
}

bool square_is_black(int order, int sx, int sy) {
  return ((sx + sy + order) & 1) != 0;
}

std::pair<int, int> particle_square(int order, int k, int x) {
  return {x + k - order - 1, x - k};
}

std::pair<int, int> particle_coords(int order, int sx, int sy) {
  if (!square_is_black(order, sx, sy))
    throw std::invalid_argument("particle_coords: square is white");
  int k = (sx - sy + order + 1) / 2;
  int x = (sx + sy + order + 1) / 2;
  return {k, x};
}

DominoType classify_domino(int order, int x, int y, bool horizontal) {
  if (horizontal)
    return square_is_black(order, x, y) ? DominoType::east : DominoType::west;
  return square_is_black(order, x, y + 1) ? DominoType::south
                                          : DominoType::north;
}

namespace {

// Bounding-box index helpers for the order-N diamond.
struct Box {
  int order, side;
  explicit Box(int n) : order(n), side(2 * n + 2) {}
  int lo() const { return -order - 1; }
  int hi() const { return order; }
  size_t idx(int sx, int sy) const {
    return static_cast<size_t>(sx - lo()) * side + static_cast<size_t>(sy - lo());
  }
  size_t cells() const { return static_cast<size_t>(side) * side; }
};

std::pair<int, int> black_square_of(int order, const Domino& d) {
  if (d.horizontal)
    return square_is_black(order, d.x, d.y) ? std::pair{d.x, d.y}
                                            : std::pair{d.x + 1, d.y};
  return square_is_black(order, d.x, d.y) ? std::pair{d.x, d.y}
                                          : std::pair{d.x, d.y + 1};
}

}  // namespace

DominoTiling make_tiling(int order, std::vector<Domino> dominoes) {
  Box box(order);
  std::vector<char> covered(box.cells(), 0);
  size_t area = 0;
  for (auto& d : dominoes) {
    int x2 = d.horizontal ? d.x + 1 : d.x;
    int y2 = d.horizontal ? d.y : d.y + 1;
    if (!in_diamond(order, d.x, d.y) || !in_diamond(order, x2, y2))
      throw std::invalid_argument("make_tiling: domino outside region");
    if (covered[box.idx(d.x, d.y)] || covered[box.idx(x2, y2)])
      throw std::invalid_argument("make_tiling: overlapping dominoes");
    covered[box.idx(d.x, d.y)] = covered[box.idx(x2, y2)] = 1;
    area += 2;
    d.type = classify_domino(order, d.x, d.y, d.horizontal);
  }
  if (area != static_cast<size_t>(2 * order * (order + 1)))
    throw std::invalid_argument("make_tiling: region not fully covered");
  std::sort(dominoes.begin(), dominoes.end(), [](const Domino& a, const Domino& b) {
    return std::tie(a.y, a.x, a.horizontal) < std::tie(b.y, b.x, b.horizontal);
  });
  return DominoTiling{order, std::move(dominoes)};
}

ParticleSystem particles_from_tiling(const DominoTiling& tiling) {
  const int N = tiling.order;
  make_tiling(N, tiling.dominoes);  // coverage check
  std::vector<std::vector<int>> per_line(static_cast<size_t>(N) + 1);
  for (const auto& d : tiling.dominoes) {
    if (d.type != DominoType::east && d.type != DominoType::south) continue;
    auto [bx, by] = black_square_of(N, d);
    auto [k, x] = particle_coords(N, bx, by);
    per_line[static_cast<size_t>(k)].push_back(x);
  }
  std::vector<LineConfig> lines;
  lines.reserve(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k) {
    if (static_cast<int>(per_line[static_cast<size_t>(k)].size()) != k)
      throw std::invalid_argument("particles_from_tiling: bad shaded count");
    lines.emplace_back(k, per_line[static_cast<size_t>(k)]);
  }
  ParticleSystem sys(N, std::move(lines));
  if (!sys.valid())
    throw std::invalid_argument("particles_from_tiling: interlacing violated");
  return sys;
}

// ---------------------------------------------------------------------------
// Tiling reconstruction.  Every black square is covered in one of two ways
// (E or S when shaded, W or N when unshaded); whites must be covered exactly
// once.  Orientation bits pin the free (non-adjacent, below last line)
// particles; everything else is resolved by constraint propagation, with a
// small exhaustive search as fallback.
// ---------------------------------------------------------------------------

namespace {

struct Rebuilder {
  int N;
  Box box;
  // black squares are indexed by (line k, position x)
  std::vector<char> shaded;        // per black id
  std::vector<int> white_id;       // per box cell, -1 if not a white square
  int white_count = 0;

  std::vector<std::array<int, 2>> target;    // black id, option -> white id (-1 infeasible)
  std::vector<std::array<char, 2>> feasible;  // black id, option
  std::vector<signed char> state;             // -1 unset, else chosen option
  std::vector<std::vector<std::pair<int, int>>> white_cands;  // white -> (black, opt)
  std::vector<int> white_cover;                // white -> covering black, -1

  explicit Rebuilder(const ParticleSystem& sys) : N(sys.order), box(sys.order) {
    const size_t blacks = static_cast<size_t>(N) * (N + 1);
    shaded.assign(blacks, 0);
    for (const auto& ln : sys.lines)
      for (int x : ln.positions) shaded[black_id(ln.line, x)] = 1;

    white_id.assign(box.cells(), -1);
    for (int sx = box.lo(); sx <= box.hi(); ++sx)
      for (int sy = box.lo(); sy <= box.hi(); ++sy)
        if (in_diamond(N, sx, sy) && !square_is_black(N, sx, sy))
          white_id[box.idx(sx, sy)] = white_count++;

    target.assign(blacks, {-1, -1});
    feasible.assign(blacks, {0, 0});
    state.assign(blacks, -1);
    white_cands.assign(static_cast<size_t>(white_count), {});
    white_cover.assign(static_cast<size_t>(white_count), -1);

    for (int k = 1; k <= N; ++k) {
      for (int x = 0; x <= N; ++x) {
        const size_t b = black_id(k, x);
        auto [bx, by] = particle_square(N, k, x);
        // option 0: cover the white to the right (E) / left (W);
        // option 1: cover the white below (S) / above (N-type).
        int wx0 = shaded[b] ? bx + 1 : bx - 1;
        int wy1 = shaded[b] ? by - 1 : by + 1;
        set_option(b, 0, wx0, by);
        set_option(b, 1, bx, wy1);
      }
    }
  }

  size_t black_id(int k, int x) const {
    return static_cast<size_t>(k - 1) * (N + 1) + static_cast<size_t>(x);
  }

  void set_option(size_t b, int opt, int wx, int wy) {
    if (!in_diamond(N, wx, wy)) return;
    int w = white_id[box.idx(wx, wy)];
    target[b][static_cast<size_t>(opt)] = w;
    feasible[b][static_cast<size_t>(opt)] = 1;
    white_cands[static_cast<size_t>(w)].push_back({static_cast<int>(b), opt});
  }

  // Propagation worklist.
  std::queue<std::pair<int, int>> pending;  // (black, option) assignments

  void push_assign(int b, int o) { pending.push({b, o}); }

  void eliminate(int b, int o) {
    auto& f = feasible[static_cast<size_t>(b)][static_cast<size_t>(o)];
    if (!f) return;
    if (state[static_cast<size_t>(b)] == o)
      throw std::invalid_argument("reconstruct_tiling: contradictory constraints");
    f = 0;
    if (state[static_cast<size_t>(b)] == -1) {
      int other = 1 - o;
      if (!feasible[static_cast<size_t>(b)][static_cast<size_t>(other)])
        throw std::invalid_argument("reconstruct_tiling: dead black square");
      push_assign(b, other);
    }
  }

  void drain() {
    while (!pending.empty()) {
      auto [b, o] = pending.front();
      pending.pop();
      auto& st = state[static_cast<size_t>(b)];
      if (st == o) continue;
      if (st != -1 || !feasible[static_cast<size_t>(b)][static_cast<size_t>(o)])
        throw std::invalid_argument("reconstruct_tiling: contradictory constraints");
      st = static_cast<signed char>(o);
      int w = target[static_cast<size_t>(b)][static_cast<size_t>(o)];
      if (white_cover[static_cast<size_t>(w)] != -1)
        throw std::invalid_argument("reconstruct_tiling: white covered twice");
      white_cover[static_cast<size_t>(w)] = b;
      for (auto [b2, o2] : white_cands[static_cast<size_t>(w)])
        if (b2 != b) eliminate(b2, o2);
    }
  }

  // Exhaustive completion for anything propagation left open.
  bool search() {
    int open = -1;
    for (size_t b = 0; b < state.size(); ++b)
      if (state[b] == -1) {
        open = static_cast<int>(b);
        break;
      }
    if (open == -1) return true;
    for (int o = 0; o < 2; ++o) {
      if (!feasible[static_cast<size_t>(open)][static_cast<size_t>(o)]) continue;
      Rebuilder snapshot = *this;
      try {
        push_assign(open, o);
        drain();
        if (search()) return true;
      } catch (const std::invalid_argument&) {
      }
      *this = std::move(snapshot);
    }
    return false;
  }

  DominoTiling build() const {
    std::vector<Domino> ds;
    ds.reserve(static_cast<size_t>(N) * (N + 1));
    for (int k = 1; k <= N; ++k) {
      for (int x = 0; x <= N; ++x) {
        const size_t b = black_id(k, x);
        auto [bx, by] = particle_square(N, k, x);
        int o = state[b];
        if (o < 0) throw std::logic_error("reconstruct_tiling: unassigned");
        Domino d;
        if (shaded[b]) {
          d = o == 0 ? Domino{bx, by, true, DominoType::east}
                     : Domino{bx, by - 1, false, DominoType::south};
        } else {
          d = o == 0 ? Domino{bx - 1, by, true, DominoType::west}
                     : Domino{bx, by, false, DominoType::north};
        }
        ds.push_back(d);
      }
    }
    return make_tiling(N, std::move(ds));
  }
};

}  // namespace

DominoTiling reconstruct_tiling(const ParticleSystem& system,
                                const std::vector<bool>& bits) {
  if (!system.valid())
    throw std::invalid_argument("reconstruct_tiling: invalid system");
  if (static_cast<long>(bits.size()) != free_bit_count(system))
    throw std::invalid_argument("reconstruct_tiling: wrong bit count");

  Rebuilder rb(system);
  // Seed the free particles (lexicographic by line, then particle index).
  size_t next_bit = 0;
  for (int k = 1; k < system.order; ++k) {
    const auto& low = system.lines[static_cast<size_t>(k - 1)].positions;
    const auto& up = system.lines[static_cast<size_t>(k)].positions;
    for (size_t i = 0; i < low.size(); ++i) {
      bool adjacent = low[i] == up[i] || low[i] == up[i + 1];
      if (adjacent) continue;
      rb.push_assign(static_cast<int>(rb.black_id(k, low[i])),
                     bits[next_bit++] ? 1 : 0);
    }
  }
  // Seed boundary-forced squares.
  for (size_t b = 0; b < rb.state.size(); ++b) {
    bool f0 = rb.feasible[b][0], f1 = rb.feasible[b][1];
    if (!f0 && !f1)
      throw std::logic_error("reconstruct_tiling: isolated black square");
    if (f0 != f1) rb.push_assign(static_cast<int>(b), f0 ? 0 : 1);
  }
  rb.drain();
  if (!rb.search())
    throw std::invalid_argument("reconstruct_tiling: no completion exists");
  return rb.build();
}

std::vector<bool> orientation_bits(const DominoTiling& tiling,
                                   const ParticleSystem& system) {
  const int N = tiling.order;
  Box box(N);
  std::vector<char> horiz(box.cells(), 0);
  for (const auto& d : tiling.dominoes) {
    auto [bx, by] = black_square_of(N, d);
    horiz[box.idx(bx, by)] = d.horizontal ? 1 : 2;
  }
  std::vector<bool> bits;
  for (int k = 1; k < N; ++k) {
    const auto& low = system.lines[static_cast<size_t>(k - 1)].positions;
    const auto& up = system.lines[static_cast<size_t>(k)].positions;
    for (size_t i = 0; i < low.size(); ++i) {
      if (low[i] == up[i] || low[i] == up[i + 1]) continue;
      auto [bx, by] = particle_square(N, k, low[i]);
      int h = horiz[box.idx(bx, by)];
      if (h == 0) throw std::invalid_argument("orientation_bits: particle not covered");
      bits.push_back(h == 2);
    }
  }
  return bits;
}

std::vector<DominoTiling> tiling_fiber(const ParticleSystem& system) {
  const long nbits = free_bit_count(system);
  if (nbits > 20) throw budget_error("tiling_fiber: too many free bits");
  std::vector<DominoTiling> out;
  out.reserve(static_cast<size_t>(1) << nbits);
  for (uint64_t mask = 0; mask < (uint64_t{1} << nbits); ++mask) {
    std::vector<bool> bits(static_cast<size_t>(nbits));
    for (long i = 0; i < nbits; ++i) bits[static_cast<size_t>(i)] = (mask >> i) & 1;
    out.push_back(reconstruct_tiling(system, bits));
  }
  return out;
}

ParticleSystem hole_complement(const ParticleSystem& system) {
  const int N = system.order;
  std::vector<LineConfig> lines(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) {
    std::vector<char> present(static_cast<size_t>(N) + 1, 0);
    for (int x : system.lines[static_cast<size_t>(n - 1)].positions)
      present[static_cast<size_t>(x)] = 1;
    std::vector<int> comp;
    for (int x = N; x >= 0; --x)
      if (!present[static_cast<size_t>(x)]) comp.push_back(x);
    lines[static_cast<size_t>(N - n)] = LineConfig(N + 1 - n, std::move(comp));
  }
  return ParticleSystem(N, std::move(lines));
}

PathFamily paths_from_tiling(const DominoTiling& tiling) {
  const int N = tiling.order;
  // entry point (left-edge midpoint) -> outgoing segment end
  std::map<std::pair<int, int>, PathPoint> segment;
  for (const auto& d : tiling.dominoes) {
    switch (d.type) {
      case DominoType::east:
        segment[{d.x, 2 * d.y + 1}] = PathPoint{d.x + 2, 2 * d.y + 1};
        break;
      case DominoType::north:  // right-up through the top white square
        segment[{d.x, 2 * d.y + 1}] = PathPoint{d.x + 1, 2 * d.y + 3};
        break;
      case DominoType::south:  // right-down from the top black square
        segment[{d.x, 2 * d.y + 3}] = PathPoint{d.x + 1, 2 * d.y + 1};
        break;
      case DominoType::west:
        break;  // carries no path segment
    }
  }
  PathFamily fam;
  fam.order = N;
  for (int r = 1; r <= N; ++r) {
    PathPoint p{r - N - 1, 1 - 2 * r};
    std::vector<PathPoint> path{p};
    while (true) {
      auto it = segment.find({p.x, p.y2});
      if (it == segment.end()) break;
      p = it->second;
      path.push_back(p);
    }
    if (p.x != N + 1 - r || p.y2 != 1 - 2 * r)
      throw std::logic_error("paths_from_tiling: path did not reach the far edge");
    fam.paths.push_back(std::move(path));
  }
  return fam;
}

// ---------------------------------------------------------------------------
// Direct enumeration (independent oracle).
// ---------------------------------------------------------------------------

BigInt enumerate_tilings(int order,
                         const std::function<void(const DominoTiling&)>* visit) {
  if (order < 1) throw std::invalid_argument("enumerate_tilings: order >= 1");
  if (visit && order > 6)
    throw budget_error("enumerate_tilings: streaming limited to order <= 6");
  if (order > 7)
    throw budget_error("enumerate_tilings: counting limited to order <= 7");

  Box box(order);
  std::vector<std::pair<int, int>> cells;  // row-major scan of region squares
  for (int sy = box.lo(); sy <= box.hi(); ++sy)
    for (int sx = box.lo(); sx <= box.hi(); ++sx)
      if (in_diamond(order, sx, sy)) cells.push_back({sx, sy});

  std::vector<char> covered(box.cells(), 0);
  std::vector<Domino> placed;
  BigInt count(0);

  std::function<void(size_t)> rec = [&](size_t from) {
    size_t i = from;
    while (i < cells.size() && covered[box.idx(cells[i].first, cells[i].second)])
      ++i;
    if (i == cells.size()) {
      count += 1;
      if (visit) (*visit)(make_tiling(order, placed));
      return;
    }
    auto [sx, sy] = cells[i];
    covered[box.idx(sx, sy)] = 1;
    if (in_diamond(order, sx + 1, sy) && !covered[box.idx(sx + 1, sy)]) {
      covered[box.idx(sx + 1, sy)] = 1;
      placed.push_back(Domino{sx, sy, true, DominoType::east});
      rec(i + 1);
      placed.pop_back();
      covered[box.idx(sx + 1, sy)] = 0;
    }
    if (in_diamond(order, sx, sy + 1) && !covered[box.idx(sx, sy + 1)]) {
      covered[box.idx(sx, sy + 1)] = 1;
      placed.push_back(Domino{sx, sy, false, DominoType::north});
      rec(i + 1);
      placed.pop_back();
      covered[box.idx(sx, sy + 1)] = 0;
    }
    covered[box.idx(sx, sy)] = 0;
  };
  rec(0);
  return count;
}

}  // namespace aztec
