#ifndef UAVSEARCH_ANALYTICS_HPP
#define UAVSEARCH_ANALYTICS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace uavsearch {

/// Teleporting, probability-ordered, update-free search: the UAV visits
/// cell i (1-based, probs sorted non-increasing) at times t = M*k + i.
struct SimplifiedScenario {
  std::vector<double> probs;
  double missed_detection = 0.0;
  double false_alarm = 0.0;
  double ground_check_delay = 0.0;

  std::size_t cell_count() const { return probs.size(); }
  void validate() const;
};

/// Sorts a distribution non-increasing, the order the simplified search visits cells.
std::vector<double> sorted_descending(std::span<const double> probs);

/// E[I] with 1-based cell indices.
double mean_visit_index(std::span<const double> probs);

/// M (1/(1-e_d) - 1) + E[I]. Requires false_alarm == 0.
double expected_time_simplified(const SimplifiedScenario& s);

/// Uniform-map value M (1+e_d) / (2 (1-e_d)) + 1/2, an upper bound on
/// expected_time_simplified for any sorted map.
double worst_case_upper_bound(std::size_t cell_count, double missed_detection);

/// Simplified search where every false alarm adds ground_check_delay steps.
double expected_time_with_false_alarm(const SimplifiedScenario& s);

/// First-detection distribution built from conditional non-detection
/// probabilities q_t = P(no detection at t | none before t).
struct FirstDetectionPMF {
  std::vector<double> q;
  std::vector<double> f;
  std::size_t horizon = 0;
};

FirstDetectionPMF first_detection_pmf(std::span<const double> q, std::size_t horizon);

struct TruncatedExpectation {
  double value = 0.0;
  double tail_mass = 0.0;  // 1 - sum(f): probability mass beyond the horizon
};

TruncatedExpectation expected_time_from_pmf(const FirstDetectionPMF& pmf);

}  // namespace uavsearch

#endif  // UAVSEARCH_ANALYTICS_HPP
