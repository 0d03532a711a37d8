#include "uavsearch/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "uavsearch/errors.hpp"

namespace uavsearch {

namespace {

double expected_rounds(double missed_detection) {
  if (!(missed_detection < 1.0))
    throw DivergentExpectation("expected detection time diverges for missed_detection = 1");
  if (missed_detection < 0.0) throw InvalidSensor("missed_detection must be non-negative");
  return 1.0 / (1.0 - missed_detection);
}

}  // namespace

void SimplifiedScenario::validate() const {
  if (probs.empty()) throw InvalidMap("simplified scenario needs at least one cell");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0 && probs[i] <= 1.0)) throw InvalidMap("probabilities must lie in [0, 1]");
    if (i > 0 && probs[i] > probs[i - 1]) throw InvalidMap("probabilities must be sorted non-increasing");
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidMap("probabilities must sum to 1");
  if (!(false_alarm >= 0.0 && false_alarm <= 1.0)) throw InvalidSensor("false_alarm must lie in [0, 1]");
  if (ground_check_delay < 0.0) throw InvalidSensor("ground_check_delay must be non-negative");
}

std::vector<double> sorted_descending(std::span<const double> probs) {
  std::vector<double> out(probs.begin(), probs.end());
  std::stable_sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

double mean_visit_index(std::span<const double> probs) {
  double e = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) e += static_cast<double>(i + 1) * probs[i];
  return e;
}

double expected_time_simplified(const SimplifiedScenario& s) {
  s.validate();
  if (s.false_alarm != 0.0)
    throw InvalidSensor("expected_time_simplified assumes false_alarm = 0");
  const double m = static_cast<double>(s.cell_count());
  return m * (expected_rounds(s.missed_detection) - 1.0) + mean_visit_index(s.probs);
}

double worst_case_upper_bound(std::size_t cell_count, double missed_detection) {
  expected_rounds(missed_detection);
  const double m = static_cast<double>(cell_count);
  return m * (1.0 + missed_detection) / (2.0 * (1.0 - missed_detection)) + 0.5;
}

double expected_time_with_false_alarm(const SimplifiedScenario& s) {
  s.validate();
  const double m = static_cast<double>(s.cell_count());
  const double ey = expected_rounds(s.missed_detection);
  const double ei = mean_visit_index(s.probs);
  // Z ~ Binomial((Y-1)(M-1) + I - 1, e_f) false alarms before detection.
  const double false_alarm_delay =
      ((ey - 1.0) * (m - 1.0) + ei - 1.0) * s.ground_check_delay * s.false_alarm;
  return false_alarm_delay + (ey - 1.0) * m + ei;
}

FirstDetectionPMF first_detection_pmf(std::span<const double> q, std::size_t horizon) {
  FirstDetectionPMF pmf;
  pmf.horizon = std::min(horizon, q.size());
  pmf.q.assign(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(pmf.horizon));
  pmf.f.reserve(pmf.horizon);
  double survive = 1.0;
  for (double qt : pmf.q) {
    if (!(qt >= 0.0 && qt <= 1.0)) throw InvalidMap("non-detection probabilities must lie in [0, 1]");
    pmf.f.push_back((1.0 - qt) * survive);
    survive *= qt;
  }
  return pmf;
}

TruncatedExpectation expected_time_from_pmf(const FirstDetectionPMF& pmf) {
  TruncatedExpectation out;
  for (std::size_t t = 0; t < pmf.f.size(); ++t)
    out.value += static_cast<double>(t + 1) * pmf.f[t];
  // Survival past the horizon, computed from q rather than as 1 - sum(f).
  out.tail_mass = 1.0;
  for (double qt : pmf.q) out.tail_mass *= qt;
  return out;
}

}  // namespace uavsearch
