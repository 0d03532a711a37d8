#include "uavsearch/sensor.hpp"

#include <string>

#include "uavsearch/errors.hpp"

namespace uavsearch {

void SensorModel::validate() const {
  // missed_detection = 1 is a blind sensor that never detects.
  if (!(missed_detection >= 0.0 && missed_detection <= 1.0))
    throw InvalidSensor("missed_detection must lie in [0, 1]");
  if (!(false_alarm >= 0.0 && false_alarm < 1.0))
    throw InvalidSensor("false_alarm must lie in [0, 1)");
  if (ground_check_delay < 0) throw InvalidSensor("ground_check_delay must be non-negative");
}

Observation observe(CellIndex target_cell, CellIndex visited_cell,
                    const SensorModel& sensor, Rng& rng) {
  Observation obs;
  obs.cell = visited_cell;
  obs.target_present = target_cell == visited_cell;
  const double p_detect = obs.target_present ? 1.0 - sensor.missed_detection : sensor.false_alarm;
  obs.detected = bernoulli(rng, p_detect);
  return obs;
}

double b_factor(double p, const SensorModel& sensor) {
  const double b = sensor.missed_detection * p + (1.0 - sensor.false_alarm) * (1.0 - p);
  if (!(b > 0.0))
    throw DegeneratePosterior("non-detection has zero probability under the current map");
  return b;
}

void apply_no_detection(ProbabilityMap& map, CellIndex visited, const SensorModel& sensor) {
  const double b = b_factor(map[visited], sensor);
  const double hit = sensor.missed_detection / b;
  const double miss = (1.0 - sensor.false_alarm) / b;
  map.reweight([&](CellIndex i, double p) { return p * (i == visited ? hit : miss); });
}

ProbabilityMap update_no_detection(const ProbabilityMap& map, CellIndex visited,
                                   const SensorModel& sensor) {
  ProbabilityMap out = map;
  apply_no_detection(out, visited, sensor);
  return out;
}

void apply_false_alarm(ProbabilityMap& map, CellIndex visited) {
  if (map[visited] >= 1.0)
    throw DegeneratePosterior("ground check contradicts a point-mass map at cell " +
                              std::to_string(visited));
  if (map[visited] == 0.0) return;
  map.reweight([&](CellIndex i, double p) { return i == visited ? 0.0 : p; });
}

ProbabilityMap resolve_false_alarm(const ProbabilityMap& map, CellIndex visited) {
  ProbabilityMap out = map;
  apply_false_alarm(out, visited);
  return out;
}

}  // namespace uavsearch
