#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polypack/solver.hpp"

namespace polypack {

// Clauses are lists of nonzero literals (positive = variable, negative =
// negated variable); every clause has between one and three literals.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

std::vector<std::string> validate_cnf(const CnfFormula& f);

// Exhaustive satisfiability check; guarded to 26 variables.
// Returns the lexicographically first satisfying assignment (index v-1
// holds variable v) or nothing.
std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& f);

bool evaluate_cnf(const CnfFormula& f, const std::vector<bool>& assignment);

// DIMACS text ingestion for the oracle; returns nothing on malformed input.
std::optional<CnfFormula> parse_dimacs(const std::string& text);
std::string write_dimacs(const CnfFormula& f);

// A monotone instance whose clause sides are laminar forests: every node
// holds one clause as a sorted list of 1..3 distinct variables, and child
// intervals nest inside their parent's [min, max] interval.
struct ClauseNode {
  std::vector<int> vars;
  std::vector<ClauseNode> children;
};

struct PlanarMonotoneInstance {
  int num_vars = 0;
  std::vector<ClauseNode> positive;  // clauses of positive literals
  std::vector<ClauseNode> negative;  // clauses of negated literals
};

std::vector<std::string> validate_planar_instance(
    const PlanarMonotoneInstance& inst);

// Plain CNF view of the instance (negative nodes become negated literals).
CnfFormula to_cnf(const PlanarMonotoneInstance& inst);

// One clause after auxiliary rewriting: three fresh variables wired to the
// (padded) literals by implications, plus a ternary OR over the fresh
// variables. Positive clause: aux => main per literal and (a0 | a1 | a2).
// Negative clause: main => aux per literal and (!a0 | !a1 | !a2).
struct RewrittenClause {
  bool positive = true;
  int id = -1;                        // clause order index
  int depth = 0;                      // nesting depth in its forest
  std::array<int, 3> main_vars{};     // literal order, padded by repetition
  std::array<int, 3> aux_vars{};      // fresh variables, one per literal
};

struct RewrittenInstance {
  int num_main_vars = 0;
  int num_vars = 0;  // main variables followed by all auxiliaries
  std::vector<RewrittenClause> clauses;
};

// Clause order: positive forest in preorder, then negative forest in
// preorder. Auxiliaries are numbered num_main_vars + 3*id + literal index.
RewrittenInstance rewrite_with_auxiliaries(const PlanarMonotoneInstance& inst);

CnfFormula rewritten_cnf(const RewrittenInstance& inst);

// ---------------------------------------------------------------------------
// Schematic: the integer-grid arrangement of rows and columns that the
// polygon construction follows. Main variable rows are stacked bottom-up
// with staggered endpoints; each clause contributes three auxiliary rows
// and an or-segment on its side of the variables, connected by columns.

enum class RowKind { main_variable, auxiliary_variable, or_segment };

struct SchematicRow {
  RowKind kind = RowKind::main_variable;
  long long y = 0;
  long long x_left = 0, x_right = 0;
  bool positive = true;  // side of the construction (mains: true)
  int variable = -1;     // main rows: the variable; aux rows: implied main var
  int clause = -1;       // aux and or rows: rewritten clause id
  int slot = -1;         // aux rows: 0 = nearest the mains, 2 = farthest
  int aux_var = -1;      // aux rows: the auxiliary variable
};

enum class ColumnKind { implication, or_connection };

struct SchematicColumn {
  ColumnKind kind = ColumnKind::implication;
  long long x = 0;
  long long y_bottom = 0, y_top = 0;
  int bottom_row = -1, top_row = -1;  // indices into Schematic::rows
  int crossings = 0;     // rows whose interior the column passes through
  int width_budget = 2;  // 2 + 2*crossings
};

struct Schematic {
  int num_vars = 0;
  std::vector<SchematicRow> rows;
  std::vector<SchematicColumn> columns;
};

// Lays out the rewritten instance: deeper-nested clauses farther from the
// variables, negative implication columns left of all positive ones,
// or-connections in a zone right of every variable row, column spacing
// respecting each column's width budget.
Schematic build_schematic(const PlanarMonotoneInstance& inst);

struct ArrangementReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Geometry-only audit of a schematic: main-row staggering, or-segments
// crossed by nothing, width budgets honored, declared crossing counts
// matching a recount, and every segment endpoint reachable from the outer
// face (flood fill at half-unit resolution).
ArrangementReport check_schematic(const Schematic& s);

}  // namespace polypack
