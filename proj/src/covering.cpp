#include "polypack/covering.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdlib>

#include "polypack/rational.hpp"

namespace polypack {

namespace {

bool square_covers_cell(const IntSquare& s, int x, int y) {
  return x >= s.x && x <= s.x + 1 && y >= s.y && y <= s.y + 1;
}

// Dense slot arithmetic over the region bounding box.
struct CellIndex {
  int x0, y0, w, h;

  explicit CellIndex(const CellSet& region)
      : x0(region.min_x()),
        y0(region.min_y()),
        w(region.width()),
        h(region.height()) {}

  bool in_bbox(int x, int y) const {
    return x >= x0 && x < x0 + w && y >= y0 && y < y0 + h;
  }
  size_t slot(int x, int y) const {
    return static_cast<size_t>(y - y0) * static_cast<size_t>(w) +
           static_cast<size_t>(x - x0);
  }
};

// The four square positions whose footprint contains the given cell,
// in (y, x) order.
std::array<IntSquare, 4> squares_containing(const UnitCell& cell) {
  return {{{cell.x - 1, cell.y - 1},
           {cell.x, cell.y - 1},
           {cell.x - 1, cell.y},
           {cell.x, cell.y}}};
}

class MinCoverSearch {
 public:
  MinCoverSearch(const CellSet& region, long long max_nodes)
      : region_(region), idx_(region), max_nodes_(max_nodes) {
    cells_ = region.cells();
    cover_count_.assign(static_cast<size_t>(idx_.w) * idx_.h, 0);
    is_center_.assign(cover_count_.size(), 0);
    for (const UnitCell& c : reference_centers(region)) {
      is_center_[idx_.slot(c.x, c.y)] = 1;
      ++uncovered_centers_;
    }
    uncovered_ = static_cast<long long>(cells_.size());
  }

  MinCoverResult run() {
    dfs(0);
    MinCoverResult result;
    result.squares = best_;
    std::sort(result.squares.begin(), result.squares.end());
    result.optimal = !budget_hit_;
    result.nodes = nodes_;
    return result;
  }

 private:
  void place(const IntSquare& s, int dir) {
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) {
        int x = s.x + dx, y = s.y + dy;
        if (!region_.contains(x, y)) continue;
        size_t slot = idx_.slot(x, y);
        if (dir > 0) {
          if (cover_count_[slot]++ == 0) {
            --uncovered_;
            uncovered_centers_ -= is_center_[slot];
          }
        } else {
          if (--cover_count_[slot] == 0) {
            ++uncovered_;
            uncovered_centers_ += is_center_[slot];
          }
        }
      }
  }

  void dfs(size_t scan_from) {
    if (budget_hit_) return;
    long long bound =
        static_cast<long long>(chosen_.size()) +
        std::max(uncovered_centers_, (uncovered_ + 3) / 4);
    if (have_best_ && bound >= static_cast<long long>(best_.size())) return;
    size_t f = scan_from;
    while (f < cells_.size() &&
           cover_count_[idx_.slot(cells_[f].x, cells_[f].y)] > 0)
      ++f;
    if (f == cells_.size()) {
      best_ = chosen_;
      have_best_ = true;
      return;
    }
    for (const IntSquare& s : squares_containing(cells_[f])) {
      if (++nodes_ > max_nodes_) {
        budget_hit_ = true;
        return;
      }
      place(s, +1);
      chosen_.push_back(s);
      dfs(f + 1);
      chosen_.pop_back();
      place(s, -1);
      if (budget_hit_) return;
    }
  }

  const CellSet& region_;
  CellIndex idx_;
  long long max_nodes_;
  long long nodes_ = 0;
  bool budget_hit_ = false;
  std::vector<UnitCell> cells_;
  std::vector<int> cover_count_;
  std::vector<char> is_center_;
  long long uncovered_ = 0;
  long long uncovered_centers_ = 0;
  std::vector<IntSquare> chosen_;
  std::vector<IntSquare> best_;
  bool have_best_ = false;
};

// Perfect-cover search: one square per center in (y, x) order. Assigning a
// square changes coverage only in the 3x3 cell block around its center, so
// wipeout detection stays local.
class PerfectCoverSearch {
 public:
  PerfectCoverSearch(const CellSet& region, const RowParityMap& parity,
                     long long max_nodes)
      : region_(region), idx_(region), max_nodes_(max_nodes) {
    centers_ = reference_centers(region, parity);
    potential_.assign(static_cast<size_t>(idx_.w) * idx_.h, 0);
    covered_.assign(potential_.size(), 0);
    for (const UnitCell& c : centers_)
      for (int y = c.y - 1; y <= c.y + 1; ++y)
        for (int x = c.x - 1; x <= c.x + 1; ++x)
          if (region_.contains(x, y)) ++potential_[idx_.slot(x, y)];
    for (const UnitCell& cell : region.cells())
      if (potential_[idx_.slot(cell.x, cell.y)] == 0) infeasible_ = true;
    choice_.assign(centers_.size(), -1);
  }

  bool infeasible() const { return infeasible_; }
  long long nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }
  const std::vector<UnitCell>& centers() const { return centers_; }

  std::vector<IntSquare> chosen_squares() const {
    std::vector<IntSquare> out;
    out.reserve(centers_.size());
    for (size_t c = 0; c < centers_.size(); ++c)
      out.push_back(squares_containing(centers_[c])[choice_[c]]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // emit returns true to stop the search.
  template <class Emit>
  void run(Emit&& emit) {
    if (!infeasible_) dfs(0, emit);
  }

 private:
  bool apply(int c, const IntSquare& s) {
    const UnitCell& cc = centers_[c];
    for (int y = cc.y - 1; y <= cc.y + 1; ++y)
      for (int x = cc.x - 1; x <= cc.x + 1; ++x)
        if (region_.contains(x, y)) --potential_[idx_.slot(x, y)];
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx)
        if (region_.contains(s.x + dx, s.y + dy))
          ++covered_[idx_.slot(s.x + dx, s.y + dy)];
    bool ok = true;
    for (int y = cc.y - 1; y <= cc.y + 1; ++y)
      for (int x = cc.x - 1; x <= cc.x + 1; ++x)
        if (region_.contains(x, y)) {
          size_t slot = idx_.slot(x, y);
          if (covered_[slot] == 0 && potential_[slot] == 0) ok = false;
        }
    return ok;
  }

  void revert(int c, const IntSquare& s) {
    const UnitCell& cc = centers_[c];
    for (int y = cc.y - 1; y <= cc.y + 1; ++y)
      for (int x = cc.x - 1; x <= cc.x + 1; ++x)
        if (region_.contains(x, y)) ++potential_[idx_.slot(x, y)];
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx)
        if (region_.contains(s.x + dx, s.y + dy))
          --covered_[idx_.slot(s.x + dx, s.y + dy)];
  }

  template <class Emit>
  bool dfs(int c, Emit&& emit) {
    if (c == static_cast<int>(centers_.size())) return emit();
    std::array<IntSquare, 4> options = squares_containing(centers_[c]);
    for (int j = 0; j < 4; ++j) {
      if (++nodes_ > max_nodes_) {
        budget_hit_ = true;
        return true;
      }
      if (apply(c, options[j])) {
        choice_[c] = j;
        if (dfs(c + 1, emit)) return true;
      }
      revert(c, options[j]);
    }
    return false;
  }

  const CellSet& region_;
  CellIndex idx_;
  long long max_nodes_;
  long long nodes_ = 0;
  bool budget_hit_ = false;
  bool infeasible_ = false;
  std::vector<UnitCell> centers_;
  std::vector<int> potential_;
  std::vector<int> covered_;
  std::vector<int> choice_;
};

// Does the open segment from (cx, cy) to (mx, my) pass through the open
// axis-aligned rectangle (lox, hix) x (loy, hiy)? All coordinates are in
// quadrupled units; the clip is exact.
bool segment_passes_open_rect(long long cx, long long cy, long long mx,
                              long long my, long long lox, long long hix,
                              long long loy, long long hiy) {
  Rational t0(0), t1(1);
  // The two-argument constructor requires a positive denominator.
  auto frac = [](long long n, long long d) {
    return d < 0 ? Rational(-n, -d) : Rational(n, d);
  };
  auto clip_axis = [&](long long c0, long long d, long long lo,
                       long long hi) -> bool {
    if (d == 0) return c0 > lo && c0 < hi;
    Rational tl = frac(lo - c0, d), th = frac(hi - c0, d);
    if (th < tl) std::swap(tl, th);
    if (tl > t0) t0 = tl;
    if (th < t1) t1 = th;
    return true;
  };
  if (!clip_axis(cx, mx - cx, lox, hix)) return false;
  if (!clip_axis(cy, my - cy, loy, hiy)) return false;
  return t0 < t1;
}

}  // namespace

std::vector<CoverViolation> verify_cover(const CellSet& region,
                                         const std::vector<IntSquare>& squares) {
  std::vector<CoverViolation> out;
  for (const UnitCell& cell : region.cells()) {
    bool covered = false;
    for (const IntSquare& s : squares)
      covered = covered || square_covers_cell(s, cell.x, cell.y);
    if (!covered) out.push_back({"cell not covered by any square", cell});
  }
  return out;
}

MinCoverResult min_cover(const CellSet& region, SolverBudget budget) {
  MinCoverSearch search(region, budget.max_nodes);
  return search.run();
}

PerfectCoverResult has_perfect_cover(const CellSet& region,
                                     const RowParityMap& parity,
                                     SolverBudget budget) {
  PerfectCoverSearch search(region, parity, budget.max_nodes);
  PerfectCoverResult result;
  bool found = false;
  search.run([&] {
    result.squares = search.chosen_squares();
    found = true;
    return true;
  });
  result.nodes = search.nodes();
  if (found)
    result.feasible = Feasibility::yes;
  else
    result.feasible =
        search.budget_hit() ? Feasibility::unknown : Feasibility::no;
  return result;
}

CoverEnumeration enumerate_perfect_covers(const CellSet& region,
                                          const RowParityMap& parity,
                                          SolverBudget budget,
                                          size_t max_covers) {
  PerfectCoverSearch search(region, parity, budget.max_nodes);
  CoverEnumeration result;
  bool cap_hit = false;
  search.run([&] {
    result.covers.push_back(search.chosen_squares());
    if (result.covers.size() >= max_covers) {
      cap_hit = true;
      return true;
    }
    return false;
  });
  result.nodes = search.nodes();
  result.complete = !search.budget_hit() && !cap_hit;
  return result;
}

QuadrantForm check_quadrant_form(const CellSet& region,
                                 const IntSquare& square) {
  int inside = 0;
  for (int dy = 0; dy < 2; ++dy)
    for (int dx = 0; dx < 2; ++dx)
      inside += region.contains(square.x + dx, square.y + dy) ? 1 : 0;
  if (inside == 4) return QuadrantForm::full;
  if (inside == 3) return QuadrantForm::three_quadrant;
  return QuadrantForm::other;
}

VoronoiPartition voronoi_partition(const CellSet& region,
                                   const std::vector<IntSquare>& squares) {
  VoronoiPartition part;
  part.pieces.reserve(squares.size());
  for (size_t i = 0; i < squares.size(); ++i) {
    PartitionPiece piece;
    piece.square = static_cast<int>(i);
    piece.quarter_cells = CellSet(2 * region.min_x(), 2 * region.min_y(),
                                  2 * region.width(), 2 * region.height());
    part.pieces.push_back(std::move(piece));
  }
  if (squares.empty()) return part;
  for (const UnitCell& cell : region.cells())
    for (int qy = 0; qy < 2; ++qy)
      for (int qx = 0; qx < 2; ++qx) {
        int a = 2 * cell.x + qx, b = 2 * cell.y + qy;
        long long mx = 2LL * a + 1, my = 2LL * b + 1;
        size_t best = 0;
        long long best_d = LLONG_MAX;
        for (size_t s = 0; s < squares.size(); ++s) {
          long long ex = 4LL * (squares[s].x + 1) - mx;
          long long ey = 4LL * (squares[s].y + 1) - my;
          long long d = std::max(std::llabs(ex), std::llabs(ey));
          if (d < best_d || (d == best_d && squares[s] < squares[best])) {
            best_d = d;
            best = s;
          }
        }
        part.pieces[best].quarter_cells.insert(a, b);
      }
  return part;
}

bool piece_star_shaped(const PartitionPiece& piece, const IntSquare& square) {
  std::vector<UnitCell> qcells = piece.quarter_cells.cells();
  if (qcells.empty()) return true;
  long long cx = 4LL * (square.x + 1), cy = 4LL * (square.y + 1);
  // Candidate cells the segments may traverse: the square's own block plus
  // the tight bounding box of the piece.
  int lox = 2 * square.x, hix = 2 * square.x + 4;
  int loy = 2 * square.y, hiy = 2 * square.y + 4;
  for (const UnitCell& q : qcells) {
    lox = std::min(lox, q.x);
    hix = std::max(hix, q.x + 1);
    loy = std::min(loy, q.y);
    hiy = std::max(hiy, q.y + 1);
  }
  for (const UnitCell& q : qcells) {
    long long mx = 2LL * q.x + 1, my = 2LL * q.y + 1;
    for (int ry = loy; ry < hiy; ++ry)
      for (int rx = lox; rx < hix; ++rx) {
        if (rx == q.x && ry == q.y) continue;
        if (piece.quarter_cells.contains(rx, ry)) continue;
        if (segment_passes_open_rect(cx, cy, mx, my, 2LL * rx, 2LL * rx + 2,
                                     2LL * ry, 2LL * ry + 2))
          return false;
      }
  }
  return true;
}

}  // namespace polypack
