#pragma once

#include <stdexcept>
#include <vector>

#include "polypack/geometry.hpp"
#include "polypack/packing.hpp"

namespace polypack {

// Thrown when an input exceeds a documented size guard (CLI exit code 3).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverBudget {
  long long max_nodes = 10'000'000;
};

// Every axis-aligned 2x2 square inside the region covers exactly one
// reference center, so candidate positions split into per-center groups.
struct CandidateModel {
  std::vector<UnitCell> centers;             // sorted by (y, x)
  std::vector<IntSquare> squares;            // sorted by (y, x)
  std::vector<int> owner;                    // owner[i] indexes centers
  std::vector<std::vector<int>> per_center;  // candidate indices per center
};

CandidateModel enumerate_candidates(const CellSet& region,
                                    const RowParityMap& parity = {});

struct MaxPackingResult {
  std::vector<IntSquare> squares;  // best packing found, sorted by (y, x)
  bool optimal = false;            // search finished within budget
  long long nodes = 0;
};

// Exact maximum 2x2 packing via branch and bound over centers.
MaxPackingResult max_packing(const CellSet& region, SolverBudget budget = {});

enum class Feasibility { yes, no, unknown };

struct PerfectPackingResult {
  Feasibility feasible = Feasibility::unknown;
  std::vector<IntSquare> squares;  // witness when feasible == yes
  long long nodes = 0;
};

// Does some packing cover every reference center of the given parity?
PerfectPackingResult has_perfect_packing(const CellSet& region,
                                         const RowParityMap& parity = {},
                                         SolverBudget budget = {});

struct PackingEnumeration {
  std::vector<std::vector<IntSquare>> packings;  // each sorted by (y, x)
  bool complete = false;  // false if budget or max_packings cut it short
  long long nodes = 0;
};

PackingEnumeration enumerate_perfect_packings(const CellSet& region,
                                              const RowParityMap& parity = {},
                                              SolverBudget budget = {},
                                              size_t max_packings = 1'000'000);

// Independent oracle: plain include/exclude search over candidate squares
// with no center bookkeeping. Guarded to at most 60 candidates.
MaxPackingResult brute_force_max_packing(const CellSet& region,
                                         SolverBudget budget = {});

struct ConflictGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
};

// Vertices are the given squares; edges join overlapping pairs.
ConflictGraph to_conflict_graph(const std::vector<IntSquare>& squares);

struct MisResult {
  std::vector<int> vertices;  // independent set, ascending
  bool optimal = false;
  long long nodes = 0;
};

// Maximum independent set via branch and bound with a greedy clique
// cover bound. Third route to the packing number.
MisResult max_independent_set(const ConflictGraph& graph,
                              SolverBudget budget = {});

}  // namespace polypack
