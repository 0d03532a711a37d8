#ifndef UAVSEARCH_PLANNERS_HPP
#define UAVSEARCH_PLANNERS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uavsearch/gridmap.hpp"
#include "uavsearch/sensor.hpp"

namespace uavsearch {

struct PlannerState {
  CellIndex current = 0;
  std::size_t step = 0;  // observations made so far
};

/// A search planner moves the UAV by at most one 4-connected cell per time
/// step. Planners are per-trial objects and are not shared between threads.
class Planner {
 public:
  virtual ~Planner() = default;

  virtual std::string name() const = 0;

  /// Starts a new trial from `start` with the prior map.
  virtual void reset(const ProbabilityMap& prior, CellIndex start) = 0;

  /// Next cell: the current one or a 4-neighbor of it.
  virtual CellIndex next_cell(const PlannerState& state, const ProbabilityMap& map) = 0;

  virtual void notify(const Observation& /*obs*/, const ProbabilityMap& /*updated*/) {}

  /// False when next_cell ignores the posterior, letting the harness skip
  /// the per-step Bayes update.
  virtual bool uses_posterior() const { return false; }
};

enum class PlannerKind { zigzag, naive, windowing };

std::string_view to_string(PlannerKind kind);
PlannerKind parse_planner_kind(std::string_view text);

struct PlannerConfig {
  PlannerKind kind = PlannerKind::windowing;
  std::size_t window = 3;
  Corner start = Corner::bottom_left;
};

std::unique_ptr<Planner> make_planner(const PlannerConfig& cfg);

// --- Zigzag --------------------------------------------------------------

/// Boustrophedon sweep from a corner: along the starting row, then back
/// along the next, covering every cell once.
std::vector<CellIndex> zigzag_plan(const GridSpec& grid, Corner start);

/// Follows the sweep forward, then backward, and so on, so consecutive
/// sweeps stay 4-connected.
class ZigzagPlanner final : public Planner {
 public:
  explicit ZigzagPlanner(Corner start = Corner::bottom_left) : start_(start) {}

  std::string name() const override { return "zigzag"; }
  void reset(const ProbabilityMap& prior, CellIndex start) override;
  CellIndex next_cell(const PlannerState& state, const ProbabilityMap& map) override;

 private:
  Corner start_;
  std::vector<CellIndex> sweep_;
  std::size_t pos_ = 0;
  bool forward_ = true;
  bool on_track_ = false;
};

// --- Naive -------------------------------------------------------------

/// Flies to cells in order of prior probability, highest first, without
/// updating the map. Commits to a target until arrival; cells of zero prior
/// mass are never targeted. When every target was reached the sweep restarts.
class NaivePlanner final : public Planner {
 public:
  std::string name() const override { return "naive"; }
  void reset(const ProbabilityMap& prior, CellIndex start) override;
  CellIndex next_cell(const PlannerState& state, const ProbabilityMap& map) override;

  std::optional<CellIndex> committed_target() const { return committed_; }

 private:
  void commit_next();

  std::shared_ptr<const GridSpec> grid_;
  std::vector<CellIndex> order_;
  std::vector<bool> visited_;
  std::size_t rank_ = 0;
  std::optional<CellIndex> committed_;
};

// --- Windowing ---------------------------------------------------------

/// Non-overlapping W x W blocks of cells. Blocks on the top and right edges
/// are smaller when the grid is not a multiple of W. Regions are indexed
/// row-major from the bottom-left block.
struct RegionGrid {
  std::size_t window = 1;
  std::size_t region_rows = 0;
  std::size_t region_cols = 0;
  std::vector<double> prob;
  std::vector<Point> centers;
  std::size_t current = 0;

  std::size_t size() const { return prob.size(); }
  std::size_t region_of(const GridSpec& grid, CellIndex cell) const;
  std::vector<std::size_t> adjacent(std::size_t region) const;
  double distance(std::size_t a, std::size_t b) const;
};

RegionGrid region_aggregate(const ProbabilityMap& map, std::size_t window);

/// Compares the global best region against the best adjacent one, weighing
/// the probability ratio against the distance ratio. Returns the adjacent
/// region pointing toward the global best when the far region is worth the
/// trip, otherwise the best adjacent region. Returns `current` when it is
/// itself the most probable region or has no neighbors.
std::size_t choose_next_region(const RegionGrid& regions);

/// Score of a candidate window path: sum_i i * p(path_i) plus
/// (M - W) * (1 - sum_i p(path_i)). A path truncated by the grid boundary
/// contributes no mass for its missing slots.
double window_expected_time(std::span<const CellIndex> path, const ProbabilityMap& map,
                            std::size_t window, std::size_t horizon);

struct WindowPlannerConfig {
  std::size_t window = 3;
  std::size_t horizon = 0;  // M, the full-sweep time used for residual mass

  void validate() const;
};

/// Cells first_step, first_step + d, ... in the direction d from `from` to
/// `first_step`, at most `window` long, truncated at the boundary.
std::vector<CellIndex> straight_path(const GridSpec& grid, CellIndex from,
                                     CellIndex first_step, std::size_t window);

/// Neighbor of `current` whose straight path minimizes window_expected_time.
/// `first_steps` restricts the candidate neighbors; empty means all of them.
/// Ties go to the lowest cell index.
CellIndex next_cell_window(CellIndex current, const ProbabilityMap& map,
                           const WindowPlannerConfig& cfg,
                           std::span<const CellIndex> first_steps = {});

/// Receding-horizon planner. It searches for W observations, scoring each
/// move over straight windows of W cells, then re-ranks the regions and
/// picks the next one. It then flies to the most probable cell of that
/// region, taking only moves that shorten the grid distance to it and
/// choosing among those by window score. The next W observations start on
/// arrival.
class WindowingPlanner final : public Planner {
 public:
  explicit WindowingPlanner(std::size_t window) : window_(window) {}

  std::string name() const override { return "windowing"; }
  void reset(const ProbabilityMap& prior, CellIndex start) override;
  CellIndex next_cell(const PlannerState& state, const ProbabilityMap& map) override;
  bool uses_posterior() const override { return true; }

  std::size_t window() const { return window_; }
  std::optional<std::size_t> target_region() const { return target_region_; }
  /// Cell being flown to, while in transit.
  std::optional<CellIndex> goal() const {
    return in_transit_ ? std::optional<CellIndex>(goal_) : std::nullopt;
  }
  const RegionGrid& regions() const { return regions_; }

 private:
  std::size_t window_;
  std::size_t searched_ = 0;  // observations in the current search phase
  bool in_transit_ = false;
  CellIndex goal_ = 0;
  RegionGrid regions_;
  std::optional<std::size_t> target_region_;
};

}  // namespace uavsearch

#endif  // UAVSEARCH_PLANNERS_HPP
