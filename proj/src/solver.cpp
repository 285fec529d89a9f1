#include "polypack/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace polypack {

namespace {

bool squares_conflict(const IntSquare& a, const IntSquare& b) {
  return std::abs(a.x - b.x) < 2 && std::abs(a.y - b.y) < 2;
}

bool square_inside(const CellSet& region, int x, int y) {
  return region.contains(x, y) && region.contains(x + 1, y) &&
         region.contains(x, y + 1) && region.contains(x + 1, y + 1);
}

// All integer positions of a 2x2 square inside the region, in (y, x) order.
std::vector<IntSquare> all_square_positions(const CellSet& region) {
  std::vector<IntSquare> out;
  int x0 = region.min_x();
  int y0 = region.min_y();
  for (int y = y0; y < y0 + region.height(); ++y)
    for (int x = x0; x < x0 + region.width(); ++x)
      if (square_inside(region, x, y)) out.push_back({x, y});
  return out;
}

// Depth-first perfect-packing search: assign one candidate square to every
// center in (y, x) order, pruning later domains after each assignment.
class PerfectSearch {
 public:
  PerfectSearch(const CandidateModel& model, long long max_nodes)
      : m_(model), max_nodes_(max_nodes) {
    size_t n = m_.centers.size();
    alive_.resize(n);
    alive_count_.resize(n);
    choice_.assign(n, -1);
    for (size_t c = 0; c < n; ++c) {
      alive_[c].assign(m_.per_center[c].size(), 1);
      alive_count_[c] = static_cast<int>(m_.per_center[c].size());
    }
    if (!m_.centers.empty()) {
      min_x_ = max_x_ = m_.centers[0].x;
      min_y_ = max_y_ = m_.centers[0].y;
      for (const UnitCell& c : m_.centers) {
        min_x_ = std::min(min_x_, c.x);
        max_x_ = std::max(max_x_, c.x);
        min_y_ = std::min(min_y_, c.y);
        max_y_ = std::max(max_y_, c.y);
      }
      grid_.assign(static_cast<size_t>(max_x_ - min_x_ + 1) *
                       static_cast<size_t>(max_y_ - min_y_ + 1),
                   -1);
      for (size_t i = 0; i < m_.centers.size(); ++i)
        grid_[cell_slot(m_.centers[i].x, m_.centers[i].y)] =
            static_cast<int>(i);
    }
  }

  // emit returns true to stop the whole search.
  template <class Emit>
  void run(Emit&& emit) {
    dfs(0, emit);
  }

  long long nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }
  const std::vector<int>& choice() const { return choice_; }

 private:
  size_t cell_slot(int x, int y) const {
    return static_cast<size_t>(y - min_y_) *
               static_cast<size_t>(max_x_ - min_x_ + 1) +
           static_cast<size_t>(x - min_x_);
  }

  int center_at(int x, int y) const {
    if (x < min_x_ || x > max_x_ || y < min_y_ || y > max_y_) return -1;
    return grid_[cell_slot(x, y)];
  }

  // Remove candidates of later centers that overlap s; false on a wipeout.
  bool forward_check(int c, const IntSquare& s) {
    bool ok = true;
    for (int cy = s.y - 1; cy <= s.y + 2; ++cy)
      for (int cx = s.x - 1; cx <= s.x + 2; ++cx) {
        int other = center_at(cx, cy);
        if (other <= c) continue;
        const std::vector<int>& cands = m_.per_center[other];
        for (size_t j = 0; j < cands.size(); ++j) {
          if (!alive_[other][j]) continue;
          if (squares_conflict(m_.squares[cands[j]], s)) {
            alive_[other][j] = 0;
            --alive_count_[other];
            trail_.push_back({other, static_cast<int>(j)});
          }
        }
        if (alive_count_[other] == 0) ok = false;
      }
    return ok;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      auto [c, j] = trail_.back();
      trail_.pop_back();
      alive_[c][j] = 1;
      ++alive_count_[c];
    }
  }

  template <class Emit>
  bool dfs(int c, Emit&& emit) {
    if (c == static_cast<int>(m_.centers.size())) return emit(choice_);
    const std::vector<int>& cands = m_.per_center[c];
    for (size_t j = 0; j < cands.size(); ++j) {
      if (!alive_[c][j]) continue;
      if (++nodes_ > max_nodes_) {
        budget_hit_ = true;
        return true;
      }
      size_t mark = trail_.size();
      if (forward_check(c, m_.squares[cands[j]])) {
        choice_[c] = static_cast<int>(j);
        if (dfs(c + 1, emit)) return true;
      }
      undo(mark);
    }
    return false;
  }

  const CandidateModel& m_;
  long long max_nodes_;
  long long nodes_ = 0;
  bool budget_hit_ = false;
  std::vector<std::vector<char>> alive_;
  std::vector<int> alive_count_;
  std::vector<int> choice_;
  std::vector<std::pair<int, int>> trail_;
  std::vector<int> grid_;
  int min_x_ = 0, max_x_ = -1, min_y_ = 0, max_y_ = -1;
};

std::vector<IntSquare> choice_to_squares(const CandidateModel& m,
                                         const std::vector<int>& choice) {
  std::vector<IntSquare> out;
  out.reserve(choice.size());
  for (size_t c = 0; c < choice.size(); ++c)
    out.push_back(m.squares[m.per_center[c][choice[c]]]);
  std::sort(out.begin(), out.end());
  return out;
}

// Branch and bound for the maximum packing: centers in (y, x) order, each
// either given one of its candidate squares or skipped.
class MaxSearch {
 public:
  MaxSearch(const CellSet& region, const CandidateModel& model,
            long long max_nodes)
      : m_(model), max_nodes_(max_nodes) {
    ox_ = region.min_x();
    oy_ = region.min_y();
    ow_ = region.width();
    oh_ = region.height();
    occupied_.assign(static_cast<size_t>(ow_) * static_cast<size_t>(oh_), 0);
  }

  MaxPackingResult run() {
    dfs(0);
    MaxPackingResult result;
    result.squares = best_;
    result.optimal = !budget_hit_;
    result.nodes = nodes_;
    return result;
  }

 private:
  char& occ(int x, int y) {
    return occupied_[static_cast<size_t>(y - oy_) * static_cast<size_t>(ow_) +
                     static_cast<size_t>(x - ox_)];
  }

  bool cells_free(const IntSquare& s) {
    return !occ(s.x, s.y) && !occ(s.x + 1, s.y) && !occ(s.x, s.y + 1) &&
           !occ(s.x + 1, s.y + 1);
  }

  void mark(const IntSquare& s, char v) {
    occ(s.x, s.y) = v;
    occ(s.x + 1, s.y) = v;
    occ(s.x, s.y + 1) = v;
    occ(s.x + 1, s.y + 1) = v;
  }

  void dfs(int c) {
    if (budget_hit_ || done_) return;
    int n = static_cast<int>(m_.centers.size());
    if (static_cast<int>(current_.size()) + (n - c) <=
        static_cast<int>(best_.size()))
      return;
    if (c == n) {
      if (current_.size() > best_.size()) {
        best_ = current_;
        std::sort(best_.begin(), best_.end());
        if (static_cast<int>(best_.size()) == n) done_ = true;
      }
      return;
    }
    for (int idx : m_.per_center[c]) {
      if (++nodes_ > max_nodes_) {
        budget_hit_ = true;
        return;
      }
      const IntSquare& s = m_.squares[idx];
      if (!cells_free(s)) continue;
      mark(s, 1);
      current_.push_back(s);
      dfs(c + 1);
      current_.pop_back();
      mark(s, 0);
      if (budget_hit_ || done_) return;
    }
    dfs(c + 1);
  }

  const CandidateModel& m_;
  long long max_nodes_;
  long long nodes_ = 0;
  bool budget_hit_ = false;
  bool done_ = false;
  std::vector<char> occupied_;
  int ox_, oy_, ow_, oh_;
  std::vector<IntSquare> current_;
  std::vector<IntSquare> best_;
};

}  // namespace

CandidateModel enumerate_candidates(const CellSet& region,
                                    const RowParityMap& parity) {
  CandidateModel model;
  model.centers = reference_centers(region, parity);
  model.squares = all_square_positions(region);
  model.per_center.resize(model.centers.size());
  model.owner.resize(model.squares.size());
  for (size_t i = 0; i < model.squares.size(); ++i) {
    auto center = covered_center(model.squares[i], model.centers);
    if (!center)
      throw std::logic_error(
          "candidate square does not cover exactly one reference center");
    size_t c = static_cast<size_t>(
        std::lower_bound(model.centers.begin(), model.centers.end(), *center) -
        model.centers.begin());
    model.owner[i] = static_cast<int>(c);
    model.per_center[c].push_back(static_cast<int>(i));
  }
  return model;
}

MaxPackingResult max_packing(const CellSet& region, SolverBudget budget) {
  CandidateModel model = enumerate_candidates(region);
  MaxSearch search(region, model, budget.max_nodes);
  return search.run();
}

PerfectPackingResult has_perfect_packing(const CellSet& region,
                                         const RowParityMap& parity,
                                         SolverBudget budget) {
  CandidateModel model = enumerate_candidates(region, parity);
  PerfectPackingResult result;
  for (const std::vector<int>& group : model.per_center)
    if (group.empty()) {
      result.feasible = Feasibility::no;
      return result;
    }
  PerfectSearch search(model, budget.max_nodes);
  bool found = false;
  search.run([&](const std::vector<int>& choice) {
    result.squares = choice_to_squares(model, choice);
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

PackingEnumeration enumerate_perfect_packings(const CellSet& region,
                                              const RowParityMap& parity,
                                              SolverBudget budget,
                                              size_t max_packings) {
  CandidateModel model = enumerate_candidates(region, parity);
  PackingEnumeration result;
  for (const std::vector<int>& group : model.per_center)
    if (group.empty()) {
      result.complete = true;
      return result;
    }
  PerfectSearch search(model, budget.max_nodes);
  bool cap_hit = false;
  search.run([&](const std::vector<int>& choice) {
    result.packings.push_back(choice_to_squares(model, choice));
    if (result.packings.size() >= max_packings) {
      cap_hit = true;
      return true;
    }
    return false;
  });
  result.nodes = search.nodes();
  result.complete = !search.budget_hit() && !cap_hit;
  return result;
}

MaxPackingResult brute_force_max_packing(const CellSet& region,
                                         SolverBudget budget) {
  std::vector<IntSquare> cands = all_square_positions(region);
  if (cands.size() > 60)
    throw GuardError("brute_force_max_packing: more than 60 candidate squares");
  std::vector<int> chosen;
  std::vector<IntSquare> best;
  long long nodes = 0;
  bool budget_hit = false;
  std::function<void(size_t)> dfs = [&](size_t i) {
    if (budget_hit) return;
    if (chosen.size() + (cands.size() - i) <= best.size()) return;
    if (i == cands.size()) {
      if (chosen.size() > best.size()) {
        best.clear();
        for (int k : chosen) best.push_back(cands[k]);
      }
      return;
    }
    if (++nodes > budget.max_nodes) {
      budget_hit = true;
      return;
    }
    bool fits = true;
    for (int k : chosen) fits = fits && !squares_conflict(cands[k], cands[i]);
    if (fits) {
      chosen.push_back(static_cast<int>(i));
      dfs(i + 1);
      chosen.pop_back();
    }
    dfs(i + 1);
  };
  dfs(0);
  MaxPackingResult result;
  result.squares = best;
  result.optimal = !budget_hit;
  result.nodes = nodes;
  return result;
}

ConflictGraph to_conflict_graph(const std::vector<IntSquare>& squares) {
  ConflictGraph graph;
  graph.n = static_cast<int>(squares.size());
  graph.adj.resize(squares.size());
  for (size_t a = 0; a < squares.size(); ++a)
    for (size_t b = a + 1; b < squares.size(); ++b)
      if (squares_conflict(squares[a], squares[b])) {
        graph.adj[a].push_back(static_cast<int>(b));
        graph.adj[b].push_back(static_cast<int>(a));
      }
  for (std::vector<int>& nbrs : graph.adj) std::sort(nbrs.begin(), nbrs.end());
  return graph;
}

namespace {

class MisSearch {
 public:
  MisSearch(const ConflictGraph& graph, long long max_nodes)
      : g_(graph), max_nodes_(max_nodes) {
    removed_.assign(static_cast<size_t>(g_.n), 0);
  }

  MisResult run() {
    dfs();
    MisResult result;
    result.vertices = best_;
    result.optimal = !budget_hit_;
    result.nodes = nodes_;
    return result;
  }

 private:
  bool has_edge(int v, int u) const {
    return std::binary_search(g_.adj[v].begin(), g_.adj[v].end(), u);
  }

  // Greedy clique cover of the remaining vertices: each clique can hold at
  // most one independent vertex, so the cover size bounds what is left.
  int clique_cover_bound() const {
    std::vector<std::vector<int>> cliques;
    for (int v = 0; v < g_.n; ++v) {
      if (removed_[v]) continue;
      bool placed = false;
      for (std::vector<int>& q : cliques) {
        bool fits = true;
        for (int u : q) fits = fits && has_edge(v, u);
        if (fits) {
          q.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    return static_cast<int>(cliques.size());
  }

  void dfs() {
    if (budget_hit_) return;
    if (++nodes_ > max_nodes_) {
      budget_hit_ = true;
      return;
    }
    int v = -1;
    for (int i = 0; i < g_.n; ++i)
      if (!removed_[i]) {
        v = i;
        break;
      }
    if (v < 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (static_cast<int>(current_.size()) + clique_cover_bound() <=
        static_cast<int>(best_.size()))
      return;
    std::vector<int> nbrs;
    for (int u : g_.adj[v])
      if (!removed_[u]) nbrs.push_back(u);
    removed_[v] = 1;
    for (int u : nbrs) removed_[u] = 1;
    current_.push_back(v);
    dfs();
    current_.pop_back();
    for (int u : nbrs) removed_[u] = 0;
    // Excluding v can only help when it conflicts with something.
    if (!nbrs.empty() && !budget_hit_) dfs();
    removed_[v] = 0;
  }

  const ConflictGraph& g_;
  long long max_nodes_;
  long long nodes_ = 0;
  bool budget_hit_ = false;
  std::vector<char> removed_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

MisResult max_independent_set(const ConflictGraph& graph, SolverBudget budget) {
  MisSearch search(graph, budget.max_nodes);
  return search.run();
}

}  // namespace polypack
