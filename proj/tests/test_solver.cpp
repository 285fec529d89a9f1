#include "doctest.h"

#include <random>
#include <set>

#include "polypack/geometry.hpp"
#include "polypack/packing.hpp"
#include "polypack/solver.hpp"
#include "test_util.hpp"

using namespace polypack;

namespace {

GridPolygon rect(int x0, int y0, int x1, int y1) {
  return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

}  // namespace

TEST_CASE("candidate model of the 4x4 square") {
  CellSet region = rasterize(rect(0, 0, 4, 4));
  CandidateModel model = enumerate_candidates(region);

  REQUIRE(model.centers.size() == 4);
  REQUIRE(model.squares.size() == 9);
  CHECK(model.centers ==
        std::vector<UnitCell>{{1, 1}, {3, 1}, {1, 3}, {3, 3}});
  CHECK(model.per_center[0].size() == 4);  // center (1,1)
  CHECK(model.per_center[1].size() == 2);  // center (3,1)
  CHECK(model.per_center[2].size() == 2);  // center (1,3)
  CHECK(model.per_center[3].size() == 1);  // center (3,3)
}

TEST_CASE("max_packing on small fixtures") {
  auto size_of = [](const GridPolygon& poly) {
    MaxPackingResult r = max_packing(rasterize(poly));
    REQUIRE(r.optimal);
    REQUIRE(verify_packing(rasterize(poly), to_packing(r.squares)).empty());
    return r.squares.size();
  };

  CHECK(size_of(rect(0, 0, 4, 4)) == 4);
  CHECK(size_of(rect(0, 0, 2, 2)) == 1);
  CHECK(size_of(rect(0, 0, 3, 3)) == 1);
  CHECK(size_of(rect(0, 0, 5, 2)) == 2);
  CHECK(size_of(GridPolygon{
            {{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}}) == 3);
}

TEST_CASE("perfect packing feasibility depends on the parity map") {
  CellSet strip = rasterize(rect(0, 0, 3, 2));

  PerfectPackingResult plain = has_perfect_packing(strip);
  CHECK(plain.feasible == Feasibility::yes);
  CHECK(plain.squares.size() == 1);

  // The offset row splits the strip into two centers that one square
  // cannot cover and two squares cannot fit.
  RowParityMap parity;
  parity.offset_rows.insert(1);
  CHECK(has_perfect_packing(strip, parity).feasible == Feasibility::no);
}

TEST_CASE("enumerate_perfect_packings lists every solution once") {
  PackingEnumeration square4 =
      enumerate_perfect_packings(rasterize(rect(0, 0, 4, 4)));
  REQUIRE(square4.complete);
  REQUIRE(square4.packings.size() == 1);
  CHECK(square4.packings[0] ==
        std::vector<IntSquare>{{0, 0}, {2, 0}, {0, 2}, {2, 2}});

  PackingEnumeration tower =
      enumerate_perfect_packings(rasterize(rect(0, 0, 2, 5)));
  REQUIRE(tower.complete);
  REQUIRE(tower.packings.size() == 3);
  std::set<std::vector<IntSquare>> seen(tower.packings.begin(),
                                        tower.packings.end());
  CHECK(seen.size() == 3);
  CHECK(seen.count({{0, 0}, {0, 2}}) == 1);
  CHECK(seen.count({{0, 0}, {0, 3}}) == 1);
  CHECK(seen.count({{0, 1}, {0, 3}}) == 1);
}

TEST_CASE("three routes to the packing number agree") {
  std::mt19937 rng(7201);
  for (int trial = 0; trial < 60; ++trial) {
    GridPolygon poly = testutil::random_polygon(rng, 7, 7, 16);
    CellSet region = rasterize(poly);

    MaxPackingResult fast = max_packing(region);
    MaxPackingResult brute = brute_force_max_packing(region);
    REQUIRE(fast.optimal);
    REQUIRE(brute.optimal);
    CHECK(fast.squares.size() == brute.squares.size());

    CandidateModel model = enumerate_candidates(region);
    MisResult mis = max_independent_set(to_conflict_graph(model.squares));
    REQUIRE(mis.optimal);
    CHECK(mis.vertices.size() == fast.squares.size());

    CHECK(verify_packing(region, to_packing(fast.squares)).empty());
    CHECK(verify_packing(region, to_packing(brute.squares)).empty());

    bool perfect =
        has_perfect_packing(region).feasible == Feasibility::yes;
    CHECK(perfect == (fast.squares.size() == model.centers.size()));
  }
}

TEST_CASE("exhausted node budgets report unknown instead of wrong answers") {
  CellSet region = rasterize(rect(0, 0, 12, 12));
  SolverBudget tiny{1};

  CHECK(!max_packing(region, tiny).optimal);
  CHECK(has_perfect_packing(region, RowParityMap{}, tiny).feasible ==
        Feasibility::unknown);
  CHECK(!enumerate_perfect_packings(region, RowParityMap{}, tiny).complete);
}

TEST_CASE("enumeration respects the solution cap") {
  PackingEnumeration capped = enumerate_perfect_packings(
      rasterize(rect(0, 0, 2, 5)), RowParityMap{}, SolverBudget{}, 2);
  CHECK(capped.packings.size() == 2);
  CHECK(!capped.complete);
}

TEST_CASE("conflict graph of the 4x4 candidates is the 3x3 king graph") {
  CandidateModel model = enumerate_candidates(rasterize(rect(0, 0, 4, 4)));
  ConflictGraph graph = to_conflict_graph(model.squares);

  REQUIRE(graph.n == 9);
  int edges = 0;
  for (const std::vector<int>& nbrs : graph.adj) edges += nbrs.size();
  CHECK(edges / 2 == 20);       // 3x3 king graph edge count
  CHECK(graph.adj[4].size() == 8);  // middle square conflicts with all others

  MisResult mis = max_independent_set(graph);
  REQUIRE(mis.optimal);
  CHECK(mis.vertices == std::vector<int>{0, 2, 6, 8});
}

TEST_CASE("brute force refuses oversized inputs") {
  CHECK_THROWS_AS(brute_force_max_packing(rasterize(rect(0, 0, 12, 12))),
                  GuardError);
}
