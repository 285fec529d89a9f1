#pragma once

#include <string>
#include <vector>

#include "polypack/geometry.hpp"
#include "polypack/packing.hpp"
#include "polypack/solver.hpp"

namespace polypack {

// Covering squares sit on the integer grid and may overhang the region;
// a cover is valid when every cell of the region lies under some square.
struct CoverViolation {
  std::string message;
  UnitCell cell;
};

std::vector<CoverViolation> verify_cover(const CellSet& region,
                                         const std::vector<IntSquare>& squares);

struct MinCoverResult {
  std::vector<IntSquare> squares;  // best cover found, sorted by (y, x)
  bool optimal = false;
  long long nodes = 0;
};

// Exact minimum cover: branch on the first uncovered cell, which only four
// squares can cover. Lower bound: uncovered centers and uncovered area.
MinCoverResult min_cover(const CellSet& region, SolverBudget budget = {});

// A perfect cover uses exactly one square per reference center, so each
// square must contain its center cell and the union must fill the region.
struct PerfectCoverResult {
  Feasibility feasible = Feasibility::unknown;
  std::vector<IntSquare> squares;
  long long nodes = 0;
};

PerfectCoverResult has_perfect_cover(const CellSet& region,
                                     const RowParityMap& parity = {},
                                     SolverBudget budget = {});

struct CoverEnumeration {
  std::vector<std::vector<IntSquare>> covers;
  bool complete = false;
  long long nodes = 0;
};

CoverEnumeration enumerate_perfect_covers(const CellSet& region,
                                          const RowParityMap& parity = {},
                                          SolverBudget budget = {},
                                          size_t max_covers = 1'000'000);

// How a covering square meets the region: all four cells inside, exactly
// three inside, or anything else.
enum class QuadrantForm { full, three_quadrant, other };

QuadrantForm check_quadrant_form(const CellSet& region, const IntSquare& square);

// Partition of the region among cover squares: every quarter cell (half-unit
// raster, stored in doubled coordinates) goes to the square with the nearest
// center in the L-infinity metric, ties broken by (y, x) of the square.
struct PartitionPiece {
  int square = -1;        // index into the input squares
  CellSet quarter_cells;  // doubled coordinates; may be empty
};

struct VoronoiPartition {
  std::vector<PartitionPiece> pieces;  // one per input square, same order
};

VoronoiPartition voronoi_partition(const CellSet& region,
                                   const std::vector<IntSquare>& squares);

// Is every quarter cell of the piece visible from the square's center point
// without leaving the piece? Exact rational segment clipping.
bool piece_star_shaped(const PartitionPiece& piece, const IntSquare& square);

}  // namespace polypack
