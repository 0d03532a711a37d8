#ifndef UAVSEARCH_SCENARIO_HPP
#define UAVSEARCH_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "uavsearch/energy.hpp"
#include "uavsearch/gridmap.hpp"
#include "uavsearch/planners.hpp"
#include "uavsearch/sensor.hpp"

namespace uavsearch {

/// Area decomposition inputs. Cell size comes from the camera footprint
/// when a camera is given, otherwise from cell_width/cell_height.
struct GridConfig {
  double area_width = 0.0;
  double area_height = 0.0;
  std::optional<CameraSpec> camera;
  double cell_width = 0.0;
  double cell_height = 0.0;
  double overlap_x = 0.0;
  double overlap_y = 0.0;

  GridSpec build() const;
};

/// Inclusive block of cells, used to measure how much of a trace is spent
/// flying between two modes of the prior.
struct CorridorSpec {
  std::size_t row_min = 0;
  std::size_t row_max = 0;
  std::size_t col_min = 0;
  std::size_t col_max = 0;

  bool contains(CellCoord c) const {
    return c.row >= row_min && c.row <= row_max && c.col >= col_min && c.col <= col_max;
  }
};

struct TrialControls {
  std::size_t n_trials = 1000;
  std::size_t max_steps = 0;  // 0 selects 20 * M
  std::uint64_t base_seed = 1;
  unsigned workers = 0;       // 0 selects hardware concurrency
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  GridConfig grid;
  DistributionSpec distribution;
  SensorModel sensor;
  PlannerConfig planner;
  PowerParams power = representative_rotary_wing();
  double speed = 20.0;  // cruise speed, m/s
  TrialControls trials;
  /// Unit-cost teleporting, probability-ordered, update-free search.
  bool simplified = false;
  std::optional<CorridorSpec> corridor;

  void validate() const;
  std::size_t max_steps_for(std::size_t cell_count) const;
};

ScenarioConfig parse_scenario(std::string_view json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Applies UAVSEARCH_TRIALS and UAVSEARCH_SEED from the environment.
void apply_env_overrides(ScenarioConfig& cfg);

Corner parse_corner(std::string_view text);

}  // namespace uavsearch

#endif  // UAVSEARCH_SCENARIO_HPP
