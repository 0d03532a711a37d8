#ifndef UAVSEARCH_REPORT_HPP
#define UAVSEARCH_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <span>

#include "uavsearch/simulation.hpp"

namespace uavsearch {

/// Closed-form detection times for the scenario's prior under the
/// simplified (teleporting, update-free) search.
struct AnalyticReport {
  std::size_t cell_count = 0;
  double missed_detection = 0.0;
  double false_alarm = 0.0;
  double ground_check_delay = 0.0;
  double mean_index = 0.0;
  std::optional<double> expected_time;  // only defined for false_alarm == 0
  double upper_bound = 0.0;
  double expected_time_with_false_alarm = 0.0;
  double step_seconds = 0.0;
};

AnalyticReport analytic_report(const PreparedScenario& scenario);

void write_analytic_text(std::ostream& out, const AnalyticReport& r);
void write_analytic_csv(std::ostream& out, const AnalyticReport& r);

void write_statistics_text(std::ostream& out, const RunStatistics& s);
void write_statistics_csv(std::ostream& out, std::span<const RunStatistics> rows);

void write_comparison_text(std::ostream& out, std::span<const ComparisonRow> rows);
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

void write_sweep_text(std::ostream& out, std::span<const SweepPoint> points);
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points);

/// `trial,outcome,target,time_steps,false_alarms,path_length_m,energy_j`.
void write_trials_csv(std::ostream& out, std::span<const TrialResult> trials,
                      std::uint64_t base_seed);

/// `t,row,col` with t starting at 1.
void write_trace_csv(std::ostream& out, const GridSpec& grid, std::span<const CellIndex> trace);

void write_grid_text(std::ostream& out, const GridSpec& grid);

}  // namespace uavsearch

#endif  // UAVSEARCH_REPORT_HPP
