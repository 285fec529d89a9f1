#include "polypack/packing.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polypack {

namespace {

// Columns (or rows) of unit cells whose interior the open interval
// (lo, lo+2) of a square meets: floor(lo) .. ceil(lo)+1.
struct SpanRange {
  long first, last;
};

SpanRange span_cells(const Rational& lo) {
  return {to_long(rational_floor(lo)), to_long(rational_ceil(lo)) + 1};
}

bool square_in_region(const CellSet& region, const Rational& x,
                      const Rational& y) {
  SpanRange cx = span_cells(x), cy = span_cells(y);
  for (long a = cx.first; a <= cx.last; ++a)
    for (long b = cy.first; b <= cy.last; ++b) {
      // Skip cells only touched at the boundary of the square.
      if (Rational(a + 1) <= x || Rational(a) >= x + 2) continue;
      if (Rational(b + 1) <= y || Rational(b) >= y + 2) continue;
      if (!region.contains(static_cast<int>(a), static_cast<int>(b)))
        return false;
    }
  return true;
}

bool squares_overlap(const Placement& a, const Placement& b) {
  Rational dx = a.x - b.x;
  if (dx < 0) dx = -dx;
  Rational dy = a.y - b.y;
  if (dy < 0) dy = -dy;
  return dx < 2 && dy < 2;
}

}  // namespace

std::vector<PackingViolation> verify_packing(const CellSet& region,
                                             const Packing& packing) {
  std::vector<PackingViolation> out;
  const auto& sq = packing.squares;
  for (size_t i = 0; i < sq.size(); ++i)
    if (!square_in_region(region, sq[i].x, sq[i].y))
      out.push_back({"square is not contained in the region",
                     static_cast<int>(i), -1});
  for (size_t i = 0; i < sq.size(); ++i)
    for (size_t j = i + 1; j < sq.size(); ++j)
      if (squares_overlap(sq[i], sq[j]))
        out.push_back({"squares overlap", static_cast<int>(i),
                       static_cast<int>(j)});
  return out;
}

std::optional<std::vector<IntSquare>> as_integer_squares(
    const Packing& packing) {
  std::vector<IntSquare> out;
  out.reserve(packing.squares.size());
  for (const Placement& p : packing.squares) {
    if (!is_integer(p.x) || !is_integer(p.y)) return std::nullopt;
    out.push_back({static_cast<int>(to_long(numerator(p.x))),
                   static_cast<int>(to_long(numerator(p.y)))});
  }
  return out;
}

namespace {

// Lowest y reachable by sliding square i straight down; the region boundary
// binds at an integer, other squares bind at their top edge.
Rational slide_down_target(const CellSet& region,
                           const std::vector<Placement>& sq, size_t i) {
  const Rational& x = sq[i].x;
  const Rational& y = sq[i].y;
  SpanRange cols = span_cells(x);
  long floor_y = to_long(rational_floor(y));
  long bound = floor_y;
  for (long c = cols.first; c <= cols.last; ++c) {
    if (Rational(c + 1) <= x || Rational(c) >= x + 2) continue;
    long r = floor_y;
    while (region.contains(static_cast<int>(c), static_cast<int>(r - 1))) --r;
    bound = std::max(bound, r);
  }
  Rational target(bound);
  for (size_t j = 0; j < sq.size(); ++j) {
    if (j == i) continue;
    Rational dx = sq[j].x - x;
    if (dx < 0) dx = -dx;
    if (dx >= 2) continue;
    Rational lifted = sq[j].y + 2;
    if (lifted <= y && lifted > target) target = lifted;
  }
  return target;
}

Rational slide_left_target(const CellSet& region,
                           const std::vector<Placement>& sq, size_t i) {
  const Rational& x = sq[i].x;
  const Rational& y = sq[i].y;
  SpanRange rows = span_cells(y);
  long floor_x = to_long(rational_floor(x));
  long bound = floor_x;
  for (long r = rows.first; r <= rows.last; ++r) {
    if (Rational(r + 1) <= y || Rational(r) >= y + 2) continue;
    long c = floor_x;
    while (region.contains(static_cast<int>(c - 1), static_cast<int>(r))) --c;
    bound = std::max(bound, c);
  }
  Rational target(bound);
  for (size_t j = 0; j < sq.size(); ++j) {
    if (j == i) continue;
    Rational dy = sq[j].y - y;
    if (dy < 0) dy = -dy;
    if (dy >= 2) continue;
    Rational lifted = sq[j].x + 2;
    if (lifted <= x && lifted > target) target = lifted;
  }
  return target;
}

}  // namespace

Packing snap_to_integer(const CellSet& region, const Packing& packing) {
  Packing work = packing;
  auto& sq = work.squares;
  std::vector<size_t> order(sq.size());

  for (int iteration = 0;; ++iteration) {
    if (iteration > 200)
      throw std::logic_error("snap_to_integer failed to reach a fixpoint");
    bool moved = false;

    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (sq[a].y != sq[b].y) return sq[a].y < sq[b].y;
      return sq[a].x < sq[b].x;
    });
    for (size_t i : order) {
      Rational t = slide_down_target(region, sq, i);
      if (t < sq[i].y) {
        sq[i].y = t;
        moved = true;
      }
    }

    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (sq[a].x != sq[b].x) return sq[a].x < sq[b].x;
      return sq[a].y < sq[b].y;
    });
    for (size_t i : order) {
      Rational t = slide_left_target(region, sq, i);
      if (t < sq[i].x) {
        sq[i].x = t;
        moved = true;
      }
    }

    if (!moved) break;
  }

  for (const Placement& p : sq)
    if (!is_integer(p.x) || !is_integer(p.y))
      throw std::logic_error("snap_to_integer fixpoint is not integral");
  return work;
}

std::optional<UnitCell> covered_center(const IntSquare& square,
                                       const std::vector<UnitCell>& centers) {
  std::optional<UnitCell> found;
  for (int cx = square.x; cx < square.x + 2; ++cx)
    for (int cy = square.y; cy < square.y + 2; ++cy) {
      UnitCell cell{cx, cy};
      if (std::binary_search(centers.begin(), centers.end(), cell)) {
        if (found) return std::nullopt;
        found = cell;
      }
    }
  return found;
}

PushClass push_class(const IntSquare& square, const UnitCell& center) {
  assert(center.x == square.x || center.x == square.x + 1);
  assert(center.y == square.y || center.y == square.y + 1);
  PushClass out{};
  out.vertical =
      center.y == square.y ? VerticalPush::up : VerticalPush::down;
  out.horizontal =
      center.x == square.x ? HorizontalPush::right : HorizontalPush::left;
  return out;
}

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

StackAnalysis analyze_stacks(const CellSet& region, const RowParityMap& parity,
                             const std::vector<IntSquare>& squares) {
  StackAnalysis out;
  std::vector<UnitCell> centers = reference_centers(region, parity);
  size_t n = squares.size();

  std::vector<UnitCell> covered(n);
  std::vector<PushClass> push(n);
  for (size_t i = 0; i < n; ++i) {
    auto c = covered_center(squares[i], centers);
    if (!c) {
      out.error = "square " + std::to_string(i) +
                  " does not cover a unique reference center";
      return out;
    }
    covered[i] = *c;
    push[i] = push_class(squares[i], *c);
  }

  DisjointSet vert(n), horiz(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      int dx = std::abs(squares[i].x - squares[j].x);
      int dy = std::abs(squares[i].y - squares[j].y);
      if (dy == 2 && dx < 2) vert.unite(static_cast<int>(i), static_cast<int>(j));
      if (dx == 2 && dy < 2) horiz.unite(static_cast<int>(i), static_cast<int>(j));
    }

  auto collect = [&](DisjointSet& ds, bool vertical) {
    std::map<int, Stack> groups;
    for (size_t i = 0; i < n; ++i) {
      Stack& s = groups[ds.find(static_cast<int>(i))];
      s.vertical = vertical;
      s.squares.push_back(static_cast<int>(i));
    }
    std::vector<Stack> stacks;
    for (auto& [root, s] : groups) {
      if (vertical) {
        bool all_up = true;
        for (int i : s.squares)
          all_up = all_up && push[i].vertical == VerticalPush::up;
        s.direction = all_up ? StackDirection::up : StackDirection::down;
      } else {
        bool offset = false, all_right = true;
        for (int i : s.squares) {
          offset = offset || parity.is_offset(center_row_index(covered[i].y));
          all_right = all_right && push[i].horizontal == HorizontalPush::right;
        }
        s.direction = offset          ? StackDirection::mixed
                      : all_right     ? StackDirection::right
                                      : StackDirection::left;
      }
      stacks.push_back(std::move(s));
    }
    return stacks;
  };

  out.vertical = collect(vert, true);
  out.horizontal = collect(horiz, false);
  return out;
}

GrowthReport check_growth_properties(const CellSet& region,
                                     const RowParityMap& parity,
                                     const std::vector<IntSquare>& squares,
                                     const GrowthMetadata& meta) {
  GrowthReport report;
  std::vector<UnitCell> centers = reference_centers(region, parity);

  std::map<UnitCell, int> owner;  // center -> covering square
  std::vector<PushClass> push(squares.size());
  for (size_t i = 0; i < squares.size(); ++i) {
    auto c = covered_center(squares[i], centers);
    if (!c) {
      report.violations.push_back("square " + std::to_string(i) +
                                  " does not cover a unique reference center");
      return report;
    }
    if (!owner.emplace(*c, static_cast<int>(i)).second) {
      report.violations.push_back("center covered twice");
      return report;
    }
    push[i] = push_class(squares[i], *c);
  }

  // Static shift law: a vertical stack with squares in both rows of a shift
  // must be wider on the side it pushes toward.
  StackAnalysis stacks = analyze_stacks(region, parity, squares);
  if (!stacks.error.empty()) {
    report.violations.push_back(stacks.error);
    return report;
  }
  std::vector<UnitCell> covered(squares.size());
  for (size_t i = 0; i < squares.size(); ++i)
    covered[i] = *covered_center(squares[i], centers);

  for (int shift : meta.static_shifts) {
    for (const Stack& s : stacks.vertical) {
      int below = 0, above = 0;
      for (int i : s.squares) {
        int row = center_row_index(covered[i].y);
        if (row == shift) ++below;
        if (row == shift + 1) ++above;
      }
      if (below == 0 || above == 0) continue;
      ++report.shift_crossings_checked;
      bool ok = s.direction == StackDirection::up ? above >= below + 1
                                                  : below >= above + 1;
      if (!ok)
        report.violations.push_back(
            "vertical stack did not grow across static shift at row " +
            std::to_string(shift) + " (below " + std::to_string(below) +
            ", above " + std::to_string(above) + ")");
    }
  }

  // Windowed crossing law over regular-parity regions.
  auto up = [&](int sq_idx) { return push[sq_idx].vertical == VerticalPush::up; };
  auto right = [&](int sq_idx) {
    return push[sq_idx].horizontal == HorizontalPush::right;
  };
  auto window_square = [&](int cx, int cy, int s, int t) -> int {
    auto it = owner.find(UnitCell{cx + 2 * s, cy + 2 * t});
    return it == owner.end() ? -1 : it->second;
  };

  for (const UnitCell& anchor : centers) {
    if (parity.is_offset(center_row_index(anchor.y))) continue;
    for (int x0 = 1;; ++x0) {
      if (!owner.count(UnitCell{anchor.x + 2 * (x0 + 1), anchor.y})) break;
      for (int y0 = 1;; ++y0) {
        if (!owner.count(UnitCell{anchor.x, anchor.y + 2 * (y0 + 1)})) break;
        if (++report.windows_checked > meta.window_budget) {
          report.violations.push_back("window budget exhausted");
          return report;
        }

        bool complete = true, regular = true;
        for (int t = 0; t <= y0 + 1 && complete && regular; ++t) {
          if (parity.is_offset(center_row_index(anchor.y + 2 * t)))
            regular = false;
          for (int s = 0; s <= x0 + 1 && complete; ++s)
            if (window_square(anchor.x, anchor.y, s, t) < 0) complete = false;
        }
        if (!regular) break;
        if (!complete) continue;

        bool hyp = true;
        for (int s = 1; s <= x0 && hyp; ++s)
          hyp = up(window_square(anchor.x, anchor.y, s, 0));
        for (int t = 1; t <= y0 && hyp; ++t)
          hyp = right(window_square(anchor.x, anchor.y, 0, t));
        if (!hyp) continue;

        auto fail = [&](const std::string& what) {
          report.violations.push_back(
              "crossing window at center (" + std::to_string(anchor.x) + "," +
              std::to_string(anchor.y) + ") size (" + std::to_string(x0) +
              "," + std::to_string(y0) + "): " + what);
        };
        for (int s = 1; s <= x0; ++s)
          if (!up(window_square(anchor.x, anchor.y, s, y0 + 1)))
            fail("top row square does not push up");
        for (int t = 1; t <= y0; ++t)
          if (!right(window_square(anchor.x, anchor.y, x0 + 1, t)))
            fail("right column square does not push right");
        int corner = window_square(anchor.x, anchor.y, x0 + 1, y0 + 1);
        if (!up(corner) && !right(corner))
          fail("far corner pushes neither up nor right");
        if (!up(window_square(anchor.x, anchor.y, 0, y0 + 1)) &&
            !right(window_square(anchor.x, anchor.y, x0 + 1, 0)))
          fail("neither released corner escapes");
      }
    }
  }
  return report;
}

}  // namespace polypack
