#include "doctest.h"

#include <random>

#include "polypack/geometry.hpp"
#include "polypack/packing.hpp"
#include "test_util.hpp"

using namespace polypack;

namespace {

GridPolygon rect(int x0, int y0, int x1, int y1) {
  return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Packing make_packing(std::vector<std::pair<Rational, Rational>> squares) {
  Packing p;
  for (auto& [x, y] : squares) p.squares.push_back({x, y});
  return p;
}

bool cell_square_inside(const CellSet& region, int x, int y) {
  return region.contains(x, y) && region.contains(x + 1, y) &&
         region.contains(x, y + 1) && region.contains(x + 1, y + 1);
}

std::vector<IntSquare> random_integer_packing(std::mt19937& rng,
                                              const CellSet& region) {
  std::vector<IntSquare> candidates;
  for (int x = region.min_x(); x < region.min_x() + region.width(); ++x)
    for (int y = region.min_y(); y < region.min_y() + region.height(); ++y)
      if (cell_square_inside(region, x, y)) candidates.push_back({x, y});
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<IntSquare> chosen;
  for (const IntSquare& c : candidates) {
    bool free = true;
    for (const IntSquare& s : chosen)
      free = free && (std::abs(s.x - c.x) >= 2 || std::abs(s.y - c.y) >= 2);
    if (free) chosen.push_back(c);
  }
  return chosen;
}

Packing jitter(std::mt19937& rng, const CellSet& region,
               const std::vector<IntSquare>& squares) {
  Packing p = to_packing(squares);
  std::uniform_int_distribution<int> num(1, 3), den(2, 7), coin(0, 1);
  for (size_t i = 0; i < p.squares.size(); ++i) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      Rational delta(num(rng), den(rng));
      if (coin(rng)) delta = -delta;
      Placement before = p.squares[i];
      if (coin(rng))
        p.squares[i].x += delta;
      else
        p.squares[i].y += delta;
      if (!verify_packing(region, p).empty()) p.squares[i] = before;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("verify_packing accepts valid and flags broken packings") {
  CellSet region = rasterize(rect(0, 0, 4, 4));

  CHECK(verify_packing(region, make_packing({{0, 0}, {2, 0}, {0, 2}, {2, 2}}))
            .empty());
  CHECK(verify_packing(region, make_packing({{Rational(1, 2), Rational(1, 2)}}))
            .empty());

  auto outside = verify_packing(region, make_packing({{3, 0}}));
  REQUIRE(outside.size() == 1);
  CHECK(outside[0].square == 0);

  auto overlap = verify_packing(region, make_packing({{0, 0}, {1, 1}}));
  REQUIRE(overlap.size() == 1);
  CHECK(overlap[0].square == 0);
  CHECK(overlap[0].other == 1);

  // Interior containment is what counts: touching the boundary is fine.
  CellSet lshape = rasterize(
      GridPolygon{{{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}});
  CHECK(verify_packing(lshape, make_packing({{2, 0}})).empty());
  CHECK(!verify_packing(lshape, make_packing({{2, Rational(1, 2)}})).empty());
}

TEST_CASE("snap_to_integer matches the worked examples") {
  CellSet region = rasterize(rect(0, 0, 4, 4));

  Packing a = snap_to_integer(
      region, make_packing({{Rational(1, 2), Rational(1, 2)}}));
  CHECK(a.squares == make_packing({{0, 0}}).squares);

  Packing b = snap_to_integer(
      region, make_packing({{0, 0}, {2, Rational(1, 2)}}));
  CHECK(b.squares == make_packing({{0, 0}, {2, 0}}).squares);
}

TEST_CASE("snap_to_integer lands jittered packings on the grid") {
  std::mt19937 rng(7101);
  for (int trial = 0; trial < 100; ++trial) {
    GridPolygon poly = testutil::random_polygon(rng, 9, 9, 28);
    CellSet region = rasterize(poly);
    std::vector<IntSquare> base = random_integer_packing(rng, region);
    Packing shaken = jitter(rng, region, base);
    REQUIRE(verify_packing(region, shaken).empty());

    Packing snapped = snap_to_integer(region, shaken);
    CHECK(snapped.squares.size() == base.size());
    CHECK(verify_packing(region, snapped).empty());
    CHECK(as_integer_squares(snapped).has_value());
  }
}

TEST_CASE("covered_center finds the unique center") {
  CellSet region = rasterize(rect(0, 0, 4, 4));
  auto centers = reference_centers(region);

  CHECK(covered_center({0, 0}, centers) == UnitCell{1, 1});
  CHECK(covered_center({1, 1}, centers) == UnitCell{1, 1});
  CHECK(covered_center({2, 2}, centers) == UnitCell{3, 3});

  // Malformed center lists are rejected rather than guessed at.
  CHECK(!covered_center({0, 0}, {}).has_value());
  CHECK(!covered_center({1, 0}, {{1, 1}, {2, 1}}).has_value());
}

TEST_CASE("push_class follows the covered quadrant") {
  CHECK(push_class({0, 0}, {1, 1}) ==
        PushClass{VerticalPush::down, HorizontalPush::left});
  CHECK(push_class({1, 1}, {1, 1}) ==
        PushClass{VerticalPush::up, HorizontalPush::right});
  CHECK(push_class({0, 1}, {1, 1}) ==
        PushClass{VerticalPush::up, HorizontalPush::left});
  CHECK(push_class({1, 0}, {1, 1}) ==
        PushClass{VerticalPush::down, HorizontalPush::right});
}

TEST_CASE("analyze_stacks splits the full 4x4 packing into pairs") {
  CellSet region = rasterize(rect(0, 0, 4, 4));
  std::vector<IntSquare> squares{{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  StackAnalysis stacks = analyze_stacks(region, RowParityMap{}, squares);

  REQUIRE(stacks.error.empty());
  REQUIRE(stacks.vertical.size() == 2);
  REQUIRE(stacks.horizontal.size() == 2);
  for (const Stack& s : stacks.vertical) {
    CHECK(s.squares.size() == 2);
    CHECK(s.direction == StackDirection::down);
  }
  for (const Stack& s : stacks.horizontal) {
    CHECK(s.squares.size() == 2);
    CHECK(s.direction == StackDirection::left);
  }
}

TEST_CASE("analyze_stacks direction depends on raised squares") {
  CellSet region = rasterize(rect(0, 0, 2, 5));

  StackAnalysis down = analyze_stacks(region, RowParityMap{}, {{0, 0}, {0, 2}});
  REQUIRE(down.vertical.size() == 1);
  CHECK(down.vertical[0].direction == StackDirection::down);

  StackAnalysis up = analyze_stacks(region, RowParityMap{}, {{0, 1}, {0, 3}});
  REQUIRE(up.vertical.size() == 1);
  CHECK(up.vertical[0].direction == StackDirection::up);
}

TEST_CASE("analyze_stacks marks offset-parity horizontal stacks as mixed") {
  RowParityMap parity;
  parity.offset_rows.insert(1);
  CellSet region = rasterize(rect(0, 0, 4, 2));
  StackAnalysis stacks = analyze_stacks(region, parity, {{0, 0}, {2, 0}});
  REQUIRE(stacks.error.empty());
  REQUIRE(stacks.horizontal.size() == 1);
  CHECK(stacks.horizontal[0].direction == StackDirection::mixed);
}

TEST_CASE("static shift growth law is checked per crossing stack") {
  CellSet region = rasterize(rect(0, 0, 8, 6));
  GrowthMetadata meta;
  meta.static_shifts = {1};

  // Width 1 below the shift, width 2 above: the law holds.
  GrowthReport good = check_growth_properties(
      region, RowParityMap{}, {{3, 1}, {2, 3}, {4, 3}}, meta);
  CHECK(good.ok());
  CHECK(good.shift_crossings_checked == 1);

  // Width 1 on both sides: flagged.
  GrowthReport bad = check_growth_properties(region, RowParityMap{},
                                             {{3, 1}, {3, 3}}, meta);
  CHECK(!bad.ok());
}

TEST_CASE("crossing windows pass on aligned grids and report broken input") {
  CellSet region = rasterize(rect(0, 0, 6, 6));
  std::vector<IntSquare> aligned;
  for (int x = 0; x < 6; x += 2)
    for (int y = 0; y < 6; y += 2) aligned.push_back({x, y});
  GrowthReport grid =
      check_growth_properties(region, RowParityMap{}, aligned, GrowthMetadata{});
  CHECK(grid.ok());
  CHECK(grid.windows_checked > 0);

  // Deliberately inconsistent input (overlapping squares) to exercise the
  // violation path: hypothesis holds but the top row square pushes down.
  std::vector<IntSquare> broken{{2, 1}, {1, 2}, {0, 0}, {4, 0}, {3, 2},
                                {4, 4}, {0, 4}, {2, 4}, {4, 2}};
  GrowthReport report = check_growth_properties(region, RowParityMap{}, broken,
                                                GrowthMetadata{});
  CHECK(!report.ok());
}

TEST_CASE("snapping preserves cardinality across many regions") {
  std::mt19937 rng(7102);
  for (int trial = 0; trial < 40; ++trial) {
    GridPolygon poly = testutil::random_polygon(rng, 8, 8, 24);
    CellSet region = rasterize(poly);
    std::vector<IntSquare> base = random_integer_packing(rng, region);
    Packing snapped = snap_to_integer(region, to_packing(base));
    CHECK(snapped.squares.size() == base.size());
    CHECK(verify_packing(region, snapped).empty());
  }
}
