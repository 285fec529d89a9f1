#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polypack {

struct GridPoint {
  int x = 0;
  int y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Orders by (y, x); used everywhere a deterministic cell order is needed.
inline bool cell_less(const GridPoint& a, const GridPoint& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

// A unit cell [x, x+1] x [y, y+1], identified by its lower-left corner.
struct UnitCell {
  int x = 0;
  int y = 0;

  friend bool operator==(const UnitCell&, const UnitCell&) = default;
  friend bool operator<(const UnitCell& a, const UnitCell& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

// Which rows of reference centers use the +1 horizontal offset.
// Row index l refers to the cell row y = 2l-1; a row not in the set keeps
// centers at odd x, a row in the set shifts them to even x.
struct RowParityMap {
  std::set<int> offset_rows;

  bool is_offset(int row) const { return offset_rows.count(row) != 0; }
};

struct Violation {
  std::string message;
  int vertex = -1;  // index into vertices when applicable, else -1
};

// Simple rectilinear polygon on the integer grid. Vertices are listed in
// counterclockwise order without repeating the first vertex at the end.
struct GridPolygon {
  std::vector<GridPoint> vertices;
};

// Dense occupancy bitmap over the bounding box of a cell set.
class CellSet {
 public:
  CellSet() = default;
  CellSet(int min_x, int min_y, int width, int height);

  void insert(int x, int y);
  bool contains(int x, int y) const;
  long long size() const { return count_; }
  bool empty() const { return count_ == 0; }

  int min_x() const { return min_x_; }
  int min_y() const { return min_y_; }
  int width() const { return width_; }
  int height() const { return height_; }

  // Cells in (y, x) order.
  std::vector<UnitCell> cells() const;

  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.cells() == b.cells();
  }

 private:
  int min_x_ = 0, min_y_ = 0, width_ = 0, height_ = 0;
  long long count_ = 0;
  std::vector<bool> bits_;
};

// Structural checks: vertex count, rectilinearity with alternating edge
// directions, no zero-length edges, no repeated vertices, simplicity,
// counterclockwise orientation, positive area. Empty result means valid.
std::vector<Violation> validate(const GridPolygon& poly);

// Twice the signed area (shoelace); positive for counterclockwise input.
long long twice_signed_area(const GridPolygon& poly);

// Unit cells of the closed region bounded by the polygon.
// Precondition: validate(poly) is empty.
CellSet rasterize(const GridPolygon& poly);

// True when every row and every column of the rasterization is a single
// contiguous run of cells.
bool is_orthogonally_convex(const CellSet& cells);

// Reference centers: cells (x, y) of the region with y odd and x of the
// parity prescribed by the row map. Every axis-aligned 2x2 square with
// integer corners inside the region contains exactly one such cell.
std::vector<UnitCell> reference_centers(const CellSet& cells,
                                        const RowParityMap& parity);

inline std::vector<UnitCell> reference_centers(const CellSet& cells) {
  return reference_centers(cells, RowParityMap{});
}

// Traces the boundary of a 4-connected, hole-free cell set into a
// counterclockwise polygon with collinear runs merged. Returns nothing when
// the set is empty, disconnected, has a hole, or pinches at a corner (two
// cells meeting only diagonally), since no simple polygon bounds it then.
std::optional<GridPolygon> trace_boundary(const CellSet& cells);

// Row index l of a reference center at cell row y = 2l-1 (y must be odd).
inline int center_row_index(int cell_y) { return (cell_y + 1) / 2; }

// True when cell (x, y) has the center form for the given parity map.
inline bool is_center_form(int x, int y, const RowParityMap& parity) {
  bool odd_y = ((y % 2) + 2) % 2 == 1;
  if (!odd_y) return false;
  bool odd_x = ((x % 2) + 2) % 2 == 1;
  return parity.is_offset(center_row_index(y)) ? !odd_x : odd_x;
}

}  // namespace polypack
