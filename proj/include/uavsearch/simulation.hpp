#ifndef UAVSEARCH_SIMULATION_HPP
#define UAVSEARCH_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "uavsearch/gridmap.hpp"
#include "uavsearch/planners.hpp"
#include "uavsearch/scenario.hpp"

namespace uavsearch {

/// A validated scenario with its grid and prior map built once and shared
/// read-only by every trial.
class PreparedScenario {
 public:
  explicit PreparedScenario(ScenarioConfig cfg);
  /// Uses `prior` instead of building one from the distribution spec.
  PreparedScenario(ScenarioConfig cfg, ProbabilityMap prior);

  const ScenarioConfig& config() const { return cfg_; }
  const GridSpec& grid() const { return prior_.grid(); }
  const ProbabilityMap& prior() const { return prior_; }
  CellIndex start_cell() const { return start_; }
  std::size_t max_steps() const { return max_steps_; }

  /// Seconds per time step: mean cell stride over cruise speed.
  double step_seconds() const { return step_seconds_; }

  /// Cells in non-increasing prior order (ties by index), for the simplified mode.
  const std::vector<CellIndex>& probability_order() const { return order_; }

 private:
  void init();

  ScenarioConfig cfg_;
  ProbabilityMap prior_;
  CellIndex start_ = 0;
  std::size_t max_steps_ = 0;
  double step_seconds_ = 0.0;
  std::vector<CellIndex> order_;
};

enum class TrialOutcome { detected, censored, failed };

std::string_view to_string(TrialOutcome outcome);

struct TrialResult {
  TrialOutcome outcome = TrialOutcome::censored;
  bool detected = false;
  CellIndex target = 0;
  std::int64_t time_steps = 0;  // observations plus ground-check delays
  std::size_t observations = 0;
  std::size_t moves = 0;        // steps that changed cell
  std::size_t hover_steps = 0;  // ground-check delays plus stay-in-place steps
  std::size_t false_alarms = 0;
  double path_length = 0.0;     // meters
  double energy = 0.0;          // joules
  std::string failure;
  std::vector<CellIndex> trace;
};

/// One search from the scenario's start cell until true detection or
/// max_steps observations. Deterministic in `seed`; the target cell depends
/// only on the seed, so every planner sees the same target for a seed.
TrialResult run_trial(const PreparedScenario& scenario, std::uint64_t seed,
                      bool keep_trace = false);

struct RunStatistics {
  std::string planner;
  std::size_t n_trials = 0;
  std::size_t n_detected = 0;
  std::size_t n_censored = 0;
  std::size_t n_failed = 0;
  double detection_rate = 0.0;
  // Time and energy moments are over detected trials.
  double mean_time = 0.0;
  double std_time = 0.0;
  double stderr_time = 0.0;
  bool stderr_defined = false;
  double mean_time_seconds = 0.0;
  double mean_energy = 0.0;
  double std_energy = 0.0;
  double mean_false_alarms = 0.0;
  double step_seconds = 0.0;
};

RunStatistics summarize(std::span<const TrialResult> trials, double step_seconds);

/// All trials with seeds base_seed + k, optionally across worker threads.
std::vector<TrialResult> run_trials(const PreparedScenario& scenario);

RunStatistics run_monte_carlo(const PreparedScenario& scenario);
RunStatistics run_monte_carlo(const ScenarioConfig& cfg);

struct ComparisonRow {
  PlannerConfig planner;
  RunStatistics stats;
  double time_ratio = 0.0;    // mean time / baseline mean time
  double energy_ratio = 0.0;  // mean energy / baseline mean energy
};

/// Runs each planner on the same seed set; the first planner is the baseline.
std::vector<ComparisonRow> compare_planners(const ScenarioConfig& cfg,
                                            std::span<const PlannerConfig> planners);

struct SweepPoint {
  std::size_t cell_count = 0;
  std::size_t window = 0;
  double windowing_mean_time = 0.0;
  double zigzag_mean_time = 0.0;
  double ratio = 0.0;  // windowing / zigzag
};

/// Windowing-to-zigzag time ratio over window sizes and grid sizes. Each
/// entry of `grid_sides` re-decomposes the area into side x side cells;
/// empty keeps the scenario grid.
std::vector<SweepPoint> sweep_window_sizes(const ScenarioConfig& cfg,
                                           std::span<const std::size_t> windows,
                                           std::span<const std::size_t> grid_sides);

/// Path flown when every observation is a non-detection: the search
/// pattern itself, `steps` cells long including the start cell.
std::vector<CellIndex> search_trace(const PreparedScenario& scenario, std::size_t steps);

double corridor_fraction(const GridSpec& grid, std::span<const CellIndex> trace,
                         const CorridorSpec& corridor);

}  // namespace uavsearch

#endif  // UAVSEARCH_SIMULATION_HPP
