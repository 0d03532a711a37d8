#ifndef UAVSEARCH_SENSOR_HPP
#define UAVSEARCH_SENSOR_HPP

#include <cstdint>

#include "uavsearch/gridmap.hpp"
#include "uavsearch/rng.hpp"

namespace uavsearch {

/// Binary detector with missed-detection probability `missed_detection`
/// (P(no detection | present)) and false-alarm probability `false_alarm`
/// (P(detection | absent)). A detection costs `ground_check_delay` extra
/// time steps when the ground team finds nothing.
struct SensorModel {
  double missed_detection = 0.0;
  double false_alarm = 0.0;
  std::int64_t ground_check_delay = 0;

  void validate() const;
};

struct Observation {
  CellIndex cell = 0;
  bool detected = false;
  bool target_present = false;  // simulator-side ground truth
};

Observation observe(CellIndex target_cell, CellIndex visited_cell,
                    const SensorModel& sensor, Rng& rng);

/// Probability of a non-detection at a cell holding mass p:
/// e_d * p + (1 - e_f) * (1 - p). Throws DegeneratePosterior when zero.
double b_factor(double p, const SensorModel& sensor);

/// Posterior after a non-detection at `visited`.
ProbabilityMap update_no_detection(const ProbabilityMap& map, CellIndex visited,
                                   const SensorModel& sensor);
void apply_no_detection(ProbabilityMap& map, CellIndex visited, const SensorModel& sensor);

/// Posterior after a ground check confirmed the target is not at `visited`.
ProbabilityMap resolve_false_alarm(const ProbabilityMap& map, CellIndex visited);
void apply_false_alarm(ProbabilityMap& map, CellIndex visited);

}  // namespace uavsearch

#endif  // UAVSEARCH_SENSOR_HPP
