#include "uavsearch/report.hpp"

#include <iomanip>
#include <ostream>

#include "uavsearch/analytics.hpp"

namespace uavsearch {

namespace {

// Restores stream formatting on scope exit.
class FormatGuard {
 public:
  explicit FormatGuard(std::ostream& out) : out_(out), flags_(out.flags()), precision_(out.precision()) {}
  ~FormatGuard() {
    out_.flags(flags_);
    out_.precision(precision_);
  }
  FormatGuard(const FormatGuard&) = delete;
  FormatGuard& operator=(const FormatGuard&) = delete;

 private:
  std::ostream& out_;
  std::ios::fmtflags flags_;
  std::streamsize precision_;
};

}  // namespace

AnalyticReport analytic_report(const PreparedScenario& scenario) {
  const auto& cfg = scenario.config();
  SimplifiedScenario s;
  s.probs = sorted_descending(scenario.prior().probs());
  s.missed_detection = cfg.sensor.missed_detection;
  s.false_alarm = cfg.sensor.false_alarm;
  s.ground_check_delay = static_cast<double>(cfg.sensor.ground_check_delay);

  AnalyticReport r;
  r.cell_count = s.cell_count();
  r.missed_detection = s.missed_detection;
  r.false_alarm = s.false_alarm;
  r.ground_check_delay = s.ground_check_delay;
  r.mean_index = mean_visit_index(s.probs);
  if (s.false_alarm == 0.0) r.expected_time = expected_time_simplified(s);
  r.upper_bound = worst_case_upper_bound(s.cell_count(), s.missed_detection);
  r.expected_time_with_false_alarm = expected_time_with_false_alarm(s);
  r.step_seconds = scenario.step_seconds();
  return r;
}

void write_analytic_text(std::ostream& out, const AnalyticReport& r) {
  FormatGuard guard(out);
  out << std::fixed << std::setprecision(6);
  out << "cells (M)                       " << r.cell_count << '\n'
      << "missed detection e_d            " << r.missed_detection << '\n'
      << "false alarm e_f                 " << r.false_alarm << '\n'
      << "ground-check delay (steps)      " << r.ground_check_delay << '\n'
      << "E[I] (sorted, 1-based)          " << r.mean_index << '\n';
  if (r.expected_time)
    out << "E[T] simplified (steps)         " << *r.expected_time << '\n';
  else
    out << "E[T] simplified (steps)         n/a (false alarms present)\n";
  out << "E[T] with false alarms (steps)  " << r.expected_time_with_false_alarm << '\n'
      << "uniform-map upper bound (steps) " << r.upper_bound << '\n'
      << "seconds per step                " << r.step_seconds << '\n';
}

void write_analytic_csv(std::ostream& out, const AnalyticReport& r) {
  FormatGuard guard(out);
  out << std::setprecision(17);
  out << "M,e_d,e_f,delta_f,mean_index,expected_time,expected_time_false_alarm,upper_bound,"
         "step_seconds\n";
  out << r.cell_count << ',' << r.missed_detection << ',' << r.false_alarm << ','
      << r.ground_check_delay << ',' << r.mean_index << ',';
  if (r.expected_time) out << *r.expected_time;
  out << ',' << r.expected_time_with_false_alarm << ',' << r.upper_bound << ','
      << r.step_seconds << '\n';
}

void write_statistics_text(std::ostream& out, const RunStatistics& s) {
  FormatGuard guard(out);
  out << std::fixed << std::setprecision(3);
  out << "planner           " << s.planner << '\n'
      << "trials            " << s.n_trials << " (detected " << s.n_detected << ", censored "
      << s.n_censored << ", failed " << s.n_failed << ")\n"
      << "detection rate    " << s.detection_rate << '\n'
      << "mean time         " << s.mean_time << " steps  (" << s.mean_time_seconds << " s)\n"
      << "std time          " << s.std_time << " steps\n"
      << "stderr time       " << s.stderr_time << (s.stderr_defined ? "" : " (undefined, n < 2)")
      << '\n'
      << "mean energy       " << s.mean_energy / 1000.0 << " kJ (std " << s.std_energy / 1000.0
      << ")\n"
      << "mean false alarms " << s.mean_false_alarms << '\n';
}

void write_statistics_csv(std::ostream& out, std::span<const RunStatistics> rows) {
  FormatGuard guard(out);
  out << std::setprecision(12);
  out << "planner,n_trials,n_detected,n_censored,n_failed,detection_rate,mean_time_steps,"
         "std_time_steps,stderr_time_steps,stderr_defined,mean_time_s,mean_energy_j,"
         "std_energy_j,mean_false_alarms\n";
  for (const auto& s : rows)
    out << s.planner << ',' << s.n_trials << ',' << s.n_detected << ',' << s.n_censored << ','
        << s.n_failed << ',' << s.detection_rate << ',' << s.mean_time << ',' << s.std_time << ','
        << s.stderr_time << ',' << (s.stderr_defined ? 1 : 0) << ',' << s.mean_time_seconds << ','
        << s.mean_energy << ',' << s.std_energy << ',' << s.mean_false_alarms << '\n';
}

void write_comparison_text(std::ostream& out, std::span<const ComparisonRow> rows) {
  FormatGuard guard(out);
  out << std::left << std::setw(16) << "planner" << std::right << std::setw(12) << "mean steps"
      << std::setw(10) << "stderr" << std::setw(12) << "mean s" << std::setw(14) << "energy kJ"
      << std::setw(10) << "detect" << std::setw(12) << "time ratio" << std::setw(14)
      << "energy ratio" << '\n';
  out << std::fixed;
  for (const auto& r : rows) {
    const auto& s = r.stats;
    out << std::left << std::setw(16) << s.planner << std::right << std::setprecision(2)
        << std::setw(12) << s.mean_time << std::setw(10) << s.stderr_time << std::setw(12)
        << s.mean_time_seconds << std::setw(14) << s.mean_energy / 1000.0
        << std::setprecision(4) << std::setw(10) << s.detection_rate << std::setw(12)
        << r.time_ratio << std::setw(14) << r.energy_ratio << '\n';
  }
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  FormatGuard guard(out);
  out << std::setprecision(12);
  out << "planner,window,n_trials,detection_rate,mean_time_steps,stderr_time_steps,mean_time_s,"
         "mean_energy_j,time_ratio,energy_ratio\n";
  for (const auto& r : rows) {
    const auto& s = r.stats;
    out << to_string(r.planner.kind) << ','
        << (r.planner.kind == PlannerKind::windowing ? r.planner.window : 0) << ',' << s.n_trials
        << ',' << s.detection_rate << ',' << s.mean_time << ',' << s.stderr_time << ','
        << s.mean_time_seconds << ',' << s.mean_energy << ',' << r.time_ratio << ','
        << r.energy_ratio << '\n';
  }
}

void write_sweep_text(std::ostream& out, std::span<const SweepPoint> points) {
  FormatGuard guard(out);
  out << std::setw(8) << "M" << std::setw(6) << "W" << std::setw(16) << "windowing steps"
      << std::setw(14) << "zigzag steps" << std::setw(10) << "ratio" << '\n';
  out << std::fixed;
  for (const auto& p : points)
    out << std::setw(8) << p.cell_count << std::setw(6) << p.window << std::setprecision(2)
        << std::setw(16) << p.windowing_mean_time << std::setw(14) << p.zigzag_mean_time
        << std::setprecision(4) << std::setw(10) << p.ratio << '\n';
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points) {
  FormatGuard guard(out);
  out << std::setprecision(12);
  out << "M,W,windowing_mean_time,zigzag_mean_time,ratio\n";
  for (const auto& p : points)
    out << p.cell_count << ',' << p.window << ',' << p.windowing_mean_time << ','
        << p.zigzag_mean_time << ',' << p.ratio << '\n';
}

void write_trials_csv(std::ostream& out, std::span<const TrialResult> trials,
                      std::uint64_t base_seed) {
  FormatGuard guard(out);
  out << std::setprecision(12);
  out << "trial,seed,outcome,target,time_steps,false_alarms,path_length_m,energy_j\n";
  for (std::size_t k = 0; k < trials.size(); ++k) {
    const auto& t = trials[k];
    out << k << ',' << base_seed + k << ',' << to_string(t.outcome) << ',' << t.target << ','
        << t.time_steps << ',' << t.false_alarms << ',' << t.path_length << ',' << t.energy
        << '\n';
  }
}

void write_trace_csv(std::ostream& out, const GridSpec& grid, std::span<const CellIndex> trace) {
  out << "t,row,col\n";
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const auto [r, c] = grid.coord(trace[t]);
    out << t + 1 << ',' << r << ',' << c << '\n';
  }
}

void write_grid_text(std::ostream& out, const GridSpec& grid) {
  FormatGuard guard(out);
  out << std::fixed << std::setprecision(3);
  out << "area          " << grid.area_width() << " x " << grid.area_height() << " m\n"
      << "cell          " << grid.cell_width() << " x " << grid.cell_height() << " m\n"
      << "overlap       " << grid.overlap_x() << " x " << grid.overlap_y() << '\n'
      << "stride        " << grid.stride_x() << " x " << grid.stride_y() << " m\n"
      << "grid          " << grid.rows() << " rows x " << grid.cols() << " cols (M = "
      << grid.cell_count() << ")\n";
  const Point first = grid.waypoint(0);
  const Point last = grid.waypoint(grid.cell_count() - 1);
  out << "waypoint 0    (" << first.x << ", " << first.y << ")\n"
      << "waypoint M-1  (" << last.x << ", " << last.y << ")\n";
}

}  // namespace uavsearch
