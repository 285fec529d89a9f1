#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polypack/geometry.hpp"
#include "polypack/rational.hpp"

namespace polypack {

// Axis-aligned 2x2 square [x, x+2] x [y, y+2], identified by its lower-left
// corner. Coordinates are exact rationals.
struct Placement {
  Rational x, y;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Packing {
  std::vector<Placement> squares;
};

// Integer placement; the workhorse for solving and stack analysis.
struct IntSquare {
  int x = 0;
  int y = 0;

  friend bool operator==(const IntSquare&, const IntSquare&) = default;
  friend bool operator<(const IntSquare& a, const IntSquare& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

struct PackingViolation {
  std::string message;
  int square = -1;  // index into the packing
  int other = -1;   // second index for overlap violations
};

// Checks every square lies inside the region and squares are pairwise
// interior-disjoint. Empty result means the packing is valid.
std::vector<PackingViolation> verify_packing(const CellSet& region,
                                             const Packing& packing);

// All coordinates integral? Then converts losslessly.
std::optional<std::vector<IntSquare>> as_integer_squares(const Packing& packing);

inline Packing to_packing(const std::vector<IntSquare>& squares) {
  Packing p;
  p.squares.reserve(squares.size());
  for (const IntSquare& s : squares) p.squares.push_back({s.x, s.y});
  return p;
}

// Slides squares maximally down, then maximally left, sweeping until no
// square moves. The fixpoint of a valid packing is integral; cardinality and
// square order are preserved. Precondition: verify_packing is empty.
Packing snap_to_integer(const CellSet& region, const Packing& packing);

// The unique reference center covered by the square, or nothing when the
// square covers zero or several (malformed parity or square outside region).
std::optional<UnitCell> covered_center(const IntSquare& square,
                                       const std::vector<UnitCell>& centers);

enum class VerticalPush { up, down };
enum class HorizontalPush { left, right };

// Derived from where the covered center sits inside the square: center in
// the lower half pushes the square up, center in the left half pushes right.
struct PushClass {
  VerticalPush vertical;
  HorizontalPush horizontal;

  friend bool operator==(const PushClass&, const PushClass&) = default;
};

// Precondition: center is one of the four cells of the square.
PushClass push_class(const IntSquare& square, const UnitCell& center);

enum class StackDirection { up, down, left, right, mixed };

struct Stack {
  bool vertical = false;  // else horizontal
  StackDirection direction = StackDirection::mixed;
  std::vector<int> squares;  // indices into the packing, sorted
};

struct StackAnalysis {
  std::vector<Stack> vertical;
  std::vector<Stack> horizontal;
  std::string error;  // nonempty when some square covers no unique center
};

// Vertical stacks: components under "touches along a horizontal boundary
// segment of positive length" (dy == 2, |dx| < 2). A vertical stack pushes up
// only when all members push up. Horizontal stacks mirror this; a horizontal
// stack containing a square whose center row has offset parity is reported
// as mixed and is skipped by growth checks.
StackAnalysis analyze_stacks(const CellSet& region, const RowParityMap& parity,
                             const std::vector<IntSquare>& squares);

struct GrowthMetadata {
  // Center-row indices l such that rows l and l+1 are adjacent static rows
  // with opposite horizontal alignment.
  std::vector<int> static_shifts;
  // Cap on scanned crossing windows; exceeding it is reported as a violation.
  long long window_budget = 10'000'000;
};

struct GrowthReport {
  std::vector<std::string> violations;
  long long windows_checked = 0;
  int shift_crossings_checked = 0;

  bool ok() const { return violations.empty(); }
};

// Two checks on an integer packing that covers centers uniquely:
// 1. Every vertical stack with squares in both rows of a declared static
//    shift is wider on the far side (>= 1 extra square in push direction).
// 2. Windowed crossing law: on every fully covered regular-parity grid of
//    centers anchored at (cx + 2s, cy + 2t), s in [0, x0+1], t in [0, y0+1],
//    if <1..x0, 0> all push up and <0, 1..y0> all push right, then
//    <1..x0, y0+1> push up, <x0+1, 1..y0> push right, <x0+1, y0+1> pushes up
//    or right, and <0, y0+1> pushes up or <x0+1, 0> pushes right.
GrowthReport check_growth_properties(const CellSet& region,
                                     const RowParityMap& parity,
                                     const std::vector<IntSquare>& squares,
                                     const GrowthMetadata& meta);

}  // namespace polypack
