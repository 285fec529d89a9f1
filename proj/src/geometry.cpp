#include "polypack/geometry.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <utility>

namespace polypack {

CellSet::CellSet(int min_x, int min_y, int width, int height)
    : min_x_(min_x), min_y_(min_y), width_(width), height_(height) {
  bits_.assign(static_cast<size_t>(width) * height, false);
}

void CellSet::insert(int x, int y) {
  size_t idx = static_cast<size_t>(y - min_y_) * width_ + (x - min_x_);
  if (!bits_[idx]) {
    bits_[idx] = true;
    ++count_;
  }
}

bool CellSet::contains(int x, int y) const {
  if (x < min_x_ || y < min_y_ || x >= min_x_ + width_ || y >= min_y_ + height_)
    return false;
  return bits_[static_cast<size_t>(y - min_y_) * width_ + (x - min_x_)];
}

std::vector<UnitCell> CellSet::cells() const {
  std::vector<UnitCell> out;
  out.reserve(static_cast<size_t>(count_));
  for (int y = min_y_; y < min_y_ + height_; ++y)
    for (int x = min_x_; x < min_x_ + width_; ++x)
      if (bits_[static_cast<size_t>(y - min_y_) * width_ + (x - min_x_)])
        out.push_back({x, y});
  return out;
}

long long twice_signed_area(const GridPolygon& poly) {
  long long acc = 0;
  const auto& v = poly.vertices;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const GridPoint& a = v[i];
    const GridPoint& b = v[(i + 1) % n];
    acc += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
  }
  return acc;
}

namespace {

struct Edge {
  GridPoint a, b;
  bool vertical;
};

// Closed segments sharing at most one endpoint are fine; any other contact
// between axis-parallel segments makes the polygon non-simple.
bool edges_conflict(const Edge& e, const Edge& f, bool adjacent) {
  auto lo = [](int p, int q) { return std::min(p, q); };
  auto hi = [](int p, int q) { return std::max(p, q); };
  int exl = lo(e.a.x, e.b.x), exh = hi(e.a.x, e.b.x);
  int eyl = lo(e.a.y, e.b.y), eyh = hi(e.a.y, e.b.y);
  int fxl = lo(f.a.x, f.b.x), fxh = hi(f.a.x, f.b.x);
  int fyl = lo(f.a.y, f.b.y), fyh = hi(f.a.y, f.b.y);
  bool overlap_x = exl <= fxh && fxl <= exh;
  bool overlap_y = eyl <= fyh && fyl <= eyh;
  if (!overlap_x || !overlap_y) return false;
  if (!adjacent) return true;
  // Adjacent edges are perpendicular in a valid polygon; sharing exactly the
  // common vertex is the only allowed contact.
  int ix_l = std::max(exl, fxl), ix_h = std::min(exh, fxh);
  int iy_l = std::max(eyl, fyl), iy_h = std::min(eyh, fyh);
  return ix_l != ix_h || iy_l != iy_h;
}

}  // namespace

std::vector<Violation> validate(const GridPolygon& poly) {
  std::vector<Violation> out;
  const auto& v = poly.vertices;
  size_t n = v.size();
  if (n < 4) {
    out.push_back({"polygon needs at least 4 vertices", -1});
    return out;
  }
  if (n % 2 != 0)
    out.push_back({"rectilinear polygon needs an even vertex count", -1});
  if (n >= 2 && v.front() == v.back())
    out.push_back({"first vertex must not be repeated at the end",
                   static_cast<int>(n) - 1});

  std::vector<Edge> edges;
  edges.reserve(n);
  bool shape_ok = true;
  for (size_t i = 0; i < n; ++i) {
    const GridPoint& a = v[i];
    const GridPoint& b = v[(i + 1) % n];
    if (a == b) {
      out.push_back({"zero-length edge", static_cast<int>(i)});
      shape_ok = false;
      continue;
    }
    if (a.x != b.x && a.y != b.y) {
      out.push_back({"edge is not axis-parallel", static_cast<int>(i)});
      shape_ok = false;
      continue;
    }
    edges.push_back({a, b, a.x == b.x});
  }
  if (!shape_ok) return out;

  for (size_t i = 0; i < n; ++i) {
    const Edge& e = edges[i];
    const Edge& f = edges[(i + 1) % n];
    if (e.vertical == f.vertical) {
      out.push_back({"consecutive edges must alternate direction",
                     static_cast<int>((i + 1) % n)});
      return out;
    }
  }

  std::map<std::pair<int, int>, int> seen;
  for (size_t i = 0; i < n; ++i) {
    auto key = std::make_pair(v[i].x, v[i].y);
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.push_back({"repeated vertex", static_cast<int>(i)});
      return out;
    }
    seen[key] = static_cast<int>(i);
  }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (edges_conflict(edges[i], edges[j], adjacent)) {
        out.push_back({"polygon is not simple: edges " + std::to_string(i) +
                           " and " + std::to_string(j) + " intersect",
                       static_cast<int>(i)});
        return out;
      }
    }

  long long area2 = twice_signed_area(poly);
  if (area2 == 0) out.push_back({"polygon has zero area", -1});
  if (area2 < 0) out.push_back({"vertices must be in counterclockwise order", -1});
  return out;
}

CellSet rasterize(const GridPolygon& poly) {
  const auto& v = poly.vertices;
  size_t n = v.size();
  int min_x = v[0].x, max_x = v[0].x, min_y = v[0].y, max_y = v[0].y;
  for (const auto& p : v) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  CellSet cells(min_x, min_y, max_x - min_x, max_y - min_y);

  // Scanline over cell rows: vertical edges crossing the row midline,
  // sorted by x, bound the interior runs in alternation.
  for (int y = min_y; y < max_y; ++y) {
    std::vector<int> xs;
    for (size_t i = 0; i < n; ++i) {
      const GridPoint& a = v[i];
      const GridPoint& b = v[(i + 1) % n];
      if (a.x != b.x) continue;
      int lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
      if (lo <= y && y + 1 <= hi) xs.push_back(a.x);
    }
    std::sort(xs.begin(), xs.end());
    for (size_t i = 0; i + 1 < xs.size(); i += 2)
      for (int x = xs[i]; x < xs[i + 1]; ++x) cells.insert(x, y);
  }
  return cells;
}

bool is_orthogonally_convex(const CellSet& cells) {
  if (cells.empty()) return true;
  for (int y = cells.min_y(); y < cells.min_y() + cells.height(); ++y) {
    int first = INT_MIN, last = INT_MIN, count = 0;
    for (int x = cells.min_x(); x < cells.min_x() + cells.width(); ++x)
      if (cells.contains(x, y)) {
        if (count == 0) first = x;
        last = x;
        ++count;
      }
    if (count != 0 && last - first + 1 != count) return false;
  }
  for (int x = cells.min_x(); x < cells.min_x() + cells.width(); ++x) {
    int first = INT_MIN, last = INT_MIN, count = 0;
    for (int y = cells.min_y(); y < cells.min_y() + cells.height(); ++y)
      if (cells.contains(x, y)) {
        if (count == 0) first = y;
        last = y;
        ++count;
      }
    if (count != 0 && last - first + 1 != count) return false;
  }
  return true;
}

std::vector<UnitCell> reference_centers(const CellSet& cells,
                                        const RowParityMap& parity) {
  std::vector<UnitCell> out;
  for (const UnitCell& c : cells.cells())
    if (is_center_form(c.x, c.y, parity)) out.push_back(c);
  return out;
}

std::optional<GridPolygon> trace_boundary(const CellSet& cells) {
  if (cells.empty()) return std::nullopt;

  // Boundary edges directed with the region on their left. Key is the source
  // corner; a corner with two outgoing edges is a diagonal pinch.
  std::map<std::pair<int, int>, std::pair<int, int>> next;
  long long edge_count = 0;
  auto add = [&](int ax, int ay, int bx, int by) -> bool {
    auto key = std::make_pair(ax, ay);
    if (next.count(key)) return false;
    next[key] = {bx, by};
    ++edge_count;
    return true;
  };
  for (const UnitCell& c : cells.cells()) {
    if (!cells.contains(c.x, c.y - 1) && !add(c.x, c.y, c.x + 1, c.y))
      return std::nullopt;
    if (!cells.contains(c.x + 1, c.y) && !add(c.x + 1, c.y, c.x + 1, c.y + 1))
      return std::nullopt;
    if (!cells.contains(c.x, c.y + 1) && !add(c.x + 1, c.y + 1, c.x, c.y + 1))
      return std::nullopt;
    if (!cells.contains(c.x - 1, c.y) && !add(c.x, c.y + 1, c.x, c.y))
      return std::nullopt;
  }

  std::pair<int, int> start = next.begin()->first;
  std::vector<GridPoint> loop;
  std::pair<int, int> cur = start;
  long long used = 0;
  do {
    auto it = next.find(cur);
    if (it == next.end()) return std::nullopt;
    loop.push_back({cur.first, cur.second});
    cur = it->second;
    ++used;
    if (used > edge_count) return std::nullopt;
  } while (cur != start);
  if (used != edge_count) return std::nullopt;  // hole or second component

  // Merge collinear runs.
  std::vector<GridPoint> merged;
  size_t n = loop.size();
  for (size_t i = 0; i < n; ++i) {
    const GridPoint& prev = loop[(i + n - 1) % n];
    const GridPoint& here = loop[i];
    const GridPoint& nxt = loop[(i + 1) % n];
    bool collinear = (prev.x == here.x && here.x == nxt.x) ||
                     (prev.y == here.y && here.y == nxt.y);
    if (!collinear) merged.push_back(here);
  }
  return GridPolygon{merged};
}

}  // namespace polypack
