#include "uavsearch/planners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "uavsearch/errors.hpp"

namespace uavsearch {

std::string_view to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::zigzag: return "zigzag";
    case PlannerKind::naive: return "naive";
    case PlannerKind::windowing: return "windowing";
  }
  return "unknown";
}

PlannerKind parse_planner_kind(std::string_view text) {
  if (text == "zigzag") return PlannerKind::zigzag;
  if (text == "naive") return PlannerKind::naive;
  if (text == "windowing") return PlannerKind::windowing;
  throw ConfigError("unknown planner '" + std::string(text) + "'");
}

std::unique_ptr<Planner> make_planner(const PlannerConfig& cfg) {
  switch (cfg.kind) {
    case PlannerKind::zigzag: return std::make_unique<ZigzagPlanner>(cfg.start);
    case PlannerKind::naive: return std::make_unique<NaivePlanner>();
    case PlannerKind::windowing:
      if (cfg.window == 0) throw ConfigError("window size must be at least 1");
      return std::make_unique<WindowingPlanner>(cfg.window);
  }
  throw ConfigError("unknown planner kind");
}

// --- Zigzag ----------------------------------------------------------------

std::vector<CellIndex> zigzag_plan(const GridSpec& grid, Corner start) {
  const std::size_t rows = grid.rows();
  const std::size_t cols = grid.cols();
  const bool from_top = start == Corner::top_left || start == Corner::top_right;
  bool left_to_right = start == Corner::bottom_left || start == Corner::top_left;

  std::vector<CellIndex> order;
  order.reserve(grid.cell_count());
  for (std::size_t k = 0; k < rows; ++k) {
    const std::size_t r = from_top ? rows - 1 - k : k;
    for (std::size_t j = 0; j < cols; ++j)
      order.push_back(grid.index(r, left_to_right ? j : cols - 1 - j));
    left_to_right = !left_to_right;
  }
  return order;
}

void ZigzagPlanner::reset(const ProbabilityMap& prior, CellIndex start) {
  sweep_ = zigzag_plan(prior.grid(), start_);
  pos_ = 0;
  forward_ = true;
  on_track_ = start == sweep_.front();
}

CellIndex ZigzagPlanner::next_cell(const PlannerState& state, const ProbabilityMap& map) {
  if (!on_track_) {
    if (state.current != sweep_.front()) return map.grid().step_toward(state.current, sweep_.front());
    on_track_ = true;
    pos_ = 0;
  }
  if (sweep_.size() == 1) return sweep_.front();
  if (forward_) {
    if (pos_ + 1 < sweep_.size()) {
      ++pos_;
    } else {
      forward_ = false;
      --pos_;
    }
  } else {
    if (pos_ > 0) {
      --pos_;
    } else {
      forward_ = true;
      ++pos_;
    }
  }
  return sweep_[pos_];
}

// --- Naive -----------------------------------------------------------------

void NaivePlanner::reset(const ProbabilityMap& prior, CellIndex /*start*/) {
  grid_ = prior.grid_ptr();
  const auto p = prior.probs();
  order_.clear();
  for (CellIndex i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) order_.push_back(i);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](CellIndex a, CellIndex b) { return p[a] > p[b]; });
  visited_.assign(p.size(), false);
  rank_ = 0;
  committed_.reset();
}

void NaivePlanner::commit_next() {
  while (rank_ < order_.size() && visited_[order_[rank_]]) ++rank_;
  if (rank_ == order_.size()) {
    std::fill(visited_.begin(), visited_.end(), false);
    rank_ = 0;
  }
  committed_ = order_[rank_];
}

CellIndex NaivePlanner::next_cell(const PlannerState& state, const ProbabilityMap& /*map*/) {
  if (!committed_) commit_next();
  if (*committed_ == state.current) {
    visited_[state.current] = true;
    commit_next();
  }
  return grid_->step_toward(state.current, *committed_);
}

// --- Regions ---------------------------------------------------------------

std::size_t RegionGrid::region_of(const GridSpec& grid, CellIndex cell) const {
  const auto [r, c] = grid.coord(cell);
  return (r / window) * region_cols + c / window;
}

std::vector<std::size_t> RegionGrid::adjacent(std::size_t region) const {
  const std::size_t r = region / region_cols;
  const std::size_t c = region % region_cols;
  std::vector<std::size_t> out;
  if (r > 0) out.push_back(region - region_cols);
  if (c > 0) out.push_back(region - 1);
  if (c + 1 < region_cols) out.push_back(region + 1);
  if (r + 1 < region_rows) out.push_back(region + region_cols);
  return out;
}

double RegionGrid::distance(std::size_t a, std::size_t b) const {
  return uavsearch::distance(centers[a], centers[b]);
}

RegionGrid region_aggregate(const ProbabilityMap& map, std::size_t window) {
  if (window == 0) throw ConfigError("window size must be at least 1");
  const GridSpec& grid = map.grid();
  RegionGrid rg;
  rg.window = window;
  rg.region_rows = (grid.rows() + window - 1) / window;
  rg.region_cols = (grid.cols() + window - 1) / window;
  const std::size_t n = rg.region_rows * rg.region_cols;
  rg.prob.assign(n, 0.0);
  rg.centers.assign(n, Point{});
  std::vector<std::size_t> members(n, 0);

  for (CellIndex i = 0; i < map.size(); ++i) {
    const std::size_t r = rg.region_of(grid, i);
    rg.prob[r] += map[i];
    const Point wp = grid.waypoint(i);
    rg.centers[r].x += wp.x;
    rg.centers[r].y += wp.y;
    ++members[r];
  }
  for (std::size_t r = 0; r < n; ++r) {
    rg.centers[r].x /= static_cast<double>(members[r]);
    rg.centers[r].y /= static_cast<double>(members[r]);
  }
  return rg;
}

std::size_t choose_next_region(const RegionGrid& regions) {
  const std::size_t current = regions.current;
  const auto& p = regions.prob;
  const std::size_t best =
      static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
  if (best == current) return current;

  const auto adj = regions.adjacent(current);
  if (adj.empty()) return current;

  std::size_t local = adj.front();
  for (std::size_t a : adj)
    if (p[a] > p[local]) local = a;

  // P(best) / P(local) > d(best) / d(local), cross-multiplied so a
  // zero-probability neighborhood needs no special case.
  const double d_best = regions.distance(current, best);
  const double d_local = regions.distance(current, local);
  if (!(p[best] * d_local > p[local] * d_best)) return local;

  const Point c = regions.centers[current];
  const Point goal = regions.centers[best];
  const double gx = goal.x - c.x;
  const double gy = goal.y - c.y;
  const double gnorm = std::hypot(gx, gy);
  std::size_t toward = adj.front();
  double best_cos = -2.0;
  for (std::size_t a : adj) {
    const double ax = regions.centers[a].x - c.x;
    const double ay = regions.centers[a].y - c.y;
    const double cosine = (ax * gx + ay * gy) / (std::hypot(ax, ay) * gnorm);
    if (cosine > best_cos) {
      best_cos = cosine;
      toward = a;
    }
  }
  return toward;
}

// --- Window scoring --------------------------------------------------------

void WindowPlannerConfig::validate() const {
  if (window == 0) throw ConfigError("window size must be at least 1");
  if (window * window > horizon)
    throw ConfigError("window size " + std::to_string(window) + " too large for " +
                      std::to_string(horizon) + " cells");
}

namespace {

// Score reduction below the all-miss value M - W:
// sum_i (M - W - i) p_i. Ranking by gain avoids losing tiny masses against
// the residual term.
double window_gain(std::span<const CellIndex> path, const ProbabilityMap& map,
                   std::size_t window, std::size_t horizon) {
  const double remaining = static_cast<double>(horizon) - static_cast<double>(window);
  double gain = 0.0;
  for (std::size_t i = 0; i < path.size() && i < window; ++i)
    gain += (remaining - static_cast<double>(i + 1)) * map[path[i]];
  return gain;
}

}  // namespace

double window_expected_time(std::span<const CellIndex> path, const ProbabilityMap& map,
                            std::size_t window, std::size_t horizon) {
  const double remaining = static_cast<double>(horizon) - static_cast<double>(window);
  return remaining - window_gain(path, map, window, horizon);
}

std::vector<CellIndex> straight_path(const GridSpec& grid, CellIndex from,
                                     CellIndex first_step, std::size_t window) {
  const auto a = grid.coord(from);
  const auto b = grid.coord(first_step);
  const long dr = static_cast<long>(b.row) - static_cast<long>(a.row);
  const long dc = static_cast<long>(b.col) - static_cast<long>(a.col);
  std::vector<CellIndex> path;
  long r = static_cast<long>(b.row);
  long c = static_cast<long>(b.col);
  while (path.size() < window && r >= 0 && c >= 0 && r < static_cast<long>(grid.rows()) &&
         c < static_cast<long>(grid.cols())) {
    path.push_back(grid.index(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
    r += dr;
    c += dc;
  }
  return path;
}

CellIndex next_cell_window(CellIndex current, const ProbabilityMap& map,
                           const WindowPlannerConfig& cfg,
                           std::span<const CellIndex> first_steps) {
  const GridSpec& grid = map.grid();
  std::vector<CellIndex> all;
  if (first_steps.empty()) {
    all = grid.neighbors(current);
    first_steps = all;
  }
  if (first_steps.empty())
    throw PlannerStuck("cell " + std::to_string(current) + " has no neighbors");

  CellIndex best = first_steps.front();
  double best_gain = -std::numeric_limits<double>::infinity();
  for (CellIndex n : first_steps) {
    const auto path = straight_path(grid, current, n, cfg.window);
    const double gain = window_gain(path, map, cfg.window, cfg.horizon);
    if (gain > best_gain || (gain == best_gain && n < best)) {
      best_gain = gain;
      best = n;
    }
  }
  return best;
}

// --- Windowing planner ------------------------------------------------------

void WindowingPlanner::reset(const ProbabilityMap& prior, CellIndex /*start*/) {
  WindowPlannerConfig{window_, prior.size()}.validate();
  searched_ = 0;
  in_transit_ = false;
  regions_ = RegionGrid{};
  target_region_.reset();
}

CellIndex WindowingPlanner::next_cell(const PlannerState& state, const ProbabilityMap& map) {
  const GridSpec& grid = map.grid();
  if (grid.cell_count() < 2) throw PlannerStuck("single-cell grid leaves nowhere to move");
  const WindowPlannerConfig cfg{window_, grid.cell_count()};
  const CellIndex cur = state.current;

  if (!in_transit_ && searched_ == window_) {
    regions_ = region_aggregate(map, window_);
    regions_.current = regions_.region_of(grid, cur);
    target_region_ = choose_next_region(regions_);
    goal_ = cur;
    double best = -1.0;
    for (CellIndex i = 0; i < map.size(); ++i) {
      if (regions_.region_of(grid, i) == *target_region_ && map[i] > best) {
        best = map[i];
        goal_ = i;
      }
    }
    in_transit_ = true;
  }
  if (in_transit_ && cur == goal_) {
    in_transit_ = false;
    searched_ = 0;
  }

  if (!in_transit_) {
    ++searched_;
    return next_cell_window(cur, map, cfg);
  }

  const std::size_t remaining = grid.grid_distance(cur, goal_);
  std::vector<CellIndex> closer;
  for (CellIndex n : grid.neighbors(cur))
    if (grid.grid_distance(n, goal_) < remaining) closer.push_back(n);
  return next_cell_window(cur, map, cfg, closer);
}

}  // namespace uavsearch
