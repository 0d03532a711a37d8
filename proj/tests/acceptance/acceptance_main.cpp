// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "uavsearch/analytics.hpp"
#include "uavsearch/energy.hpp"
#include "uavsearch/planners.hpp"
#include "uavsearch/report.hpp"
#include "uavsearch/scenario.hpp"
#include "uavsearch/sensor.hpp"
#include "uavsearch/simulation.hpp"

using namespace uavsearch;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int precision = 4) {
  std::ostringstream os;
  os.precision(precision);
  os << std::fixed << v;
  return os.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string scenario_path(const std::string& name) {
  return std::string(UAVSEARCH_SCENARIO_DIR) + "/" + name + ".json";
}

// Simplified-mode Monte Carlo over a given visiting distribution.
RunStatistics simplified_run(const std::vector<double>& probs, SensorModel sensor,
                             std::size_t trials, std::uint64_t seed) {
  auto grid = std::make_shared<const GridSpec>(GridSpec::unit(1, probs.size()));
  ScenarioConfig cfg;
  cfg.name = "simplified";
  cfg.simplified = true;
  cfg.sensor = sensor;
  cfg.planner.kind = PlannerKind::zigzag;
  cfg.trials.n_trials = trials;
  cfg.trials.base_seed = seed;
  cfg.trials.workers = 0;
  cfg.trials.max_steps = 1'000'000;
  return run_monte_carlo(PreparedScenario(cfg, ProbabilityMap(grid, probs)));
}

bool within_sigmas(double simulated, double expected, double stderr_, double k = 3.0) {
  return std::abs(simulated - expected) <= k * stderr_;
}

Outcome criterion_expected_time() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  std::size_t checked = 0, failed = 0;
  double worst_z = 0.0;
  std::string worst;
  std::uint64_t seed = 1'000'000;
  for (std::size_t m : {4u, 16u, 64u}) {
    for (double e_d : {0.0, 0.1, 0.3, 0.5}) {
      for (int random_map = 0; random_map < 2; ++random_map) {
        const auto probs = random_map ? oracle::random_sorted_simplex(m, rng)
                                      : std::vector<double>(m, 1.0 / static_cast<double>(m));
        const double expected = expected_time_simplified({probs, e_d, 0.0, 0.0});
        const auto s = simplified_run(probs, {e_d, 0.0, 0}, 100'000, seed);
        seed += 100'000;
        ++checked;
        const double z = std::abs(s.mean_time - expected) / s.stderr_time;
        if (z > worst_z) {
          worst_z = z;
          worst = "M=" + std::to_string(m) + " e_d=" + fmt(e_d, 1) + (random_map ? " random" : " uniform");
        }
        if (s.n_detected != s.n_trials || !within_sigmas(s.mean_time, expected, s.stderr_time))
          ++failed;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = failed == 0 && elapsed < 30.0;
  return {pass, std::to_string(checked) + " configs x 1e5 trials, " + std::to_string(failed) +
                    " outside 3 stderr, worst |z|=" + fmt(worst_z, 2) + " (" + worst + "), " +
                    fmt(elapsed, 1) + " s (limit 30 s)"};
}

Outcome criterion_upper_bound() {
  std::size_t failed = 0;
  std::string detail;
  std::uint64_t seed = 5'000'000;
  for (std::size_t m : {4u, 16u, 64u}) {
    for (double e_d : {0.0, 0.3, 0.5}) {
      const std::vector<double> probs(m, 1.0 / static_cast<double>(m));
      const double bound = worst_case_upper_bound(m, e_d);
      const auto s = simplified_run(probs, {e_d, 0.0, 0}, 100'000, seed);
      seed += 100'000;
      if (!within_sigmas(s.mean_time, bound, s.stderr_time)) ++failed;
    }
  }
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ed(0.0, 0.95);
  std::uniform_int_distribution<std::size_t> msize(1, 200);
  std::size_t violations = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = msize(rng);
    const double e_d = ed(rng);
    const auto probs = oracle::random_sorted_simplex(m, rng);
    if (expected_time_simplified({probs, e_d, 0.0, 0.0}) > worst_case_upper_bound(m, e_d)) ++violations;
  }
  return {failed == 0 && violations == 0,
          "uniform maps: " + std::to_string(failed) + "/9 outside 3 stderr of the bound; " +
              "random sorted maps: " + std::to_string(violations) + "/100 above the bound"};
}

Outcome criterion_false_alarm() {
  std::size_t failed = 0;
  std::ostringstream detail;
  std::uint64_t seed = 9'000'000;
  std::mt19937_64 rng(99);
  const auto random16 = oracle::random_sorted_simplex(16, rng);
  double example = 0.0;
  for (int map_kind = 0; map_kind < 2; ++map_kind) {
    const auto probs = map_kind == 0 ? std::vector<double>(4, 0.25) : random16;
    for (double e_f : {0.05, 0.1}) {
      for (int delta : {5, 10}) {
        const double e_d = 0.5;
        const double expected =
            expected_time_with_false_alarm({probs, e_d, e_f, static_cast<double>(delta)});
        if (map_kind == 0 && e_f == 0.1 && delta == 10) example = expected;
        const auto s = simplified_run(probs, {e_d, e_f, delta}, 100'000, seed);
        seed += 100'000;
        if (!within_sigmas(s.mean_time, expected, s.stderr_time)) ++failed;
      }
    }
  }
  const bool example_ok = std::abs(example - 11.0) < 1e-12;
  return {failed == 0 && example_ok,
          std::to_string(failed) + "/8 configs outside 3 stderr; M=4 uniform e_d=0.5 e_f=0.1 "
          "delay=10 closed form " + fmt(example, 6) + " (expected 11.0)"};
}

Outcome criterion_bayes() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  auto grid = std::make_shared<const GridSpec>(GridSpec::unit(10, 10));
  std::vector<double> w(grid->cell_count());
  for (auto& x : w) x = u(rng);
  ProbabilityMap map = ProbabilityMap::from_weights(grid, w);
  const SensorModel sensor{0.2, 0.05, 0};
  double worst_sum = 0.0;
  for (int step = 0; step < 10'000; ++step) {
    const auto cell = static_cast<CellIndex>(u(rng) * static_cast<double>(grid->cell_count()));
    if (step % 50 == 49 && map[cell] < 1.0)
      apply_false_alarm(map, cell);
    else
      apply_no_detection(map, cell, sensor);
    double s = 0.0;
    for (double p : map.probs()) s += p;
    worst_sum = std::max(worst_sum, std::abs(s - 1.0));
  }

  double worst_cell = 0.0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t rows = 1 + static_cast<std::size_t>(u(rng) * 5.0);
    const std::size_t cols = 1 + static_cast<std::size_t>(u(rng) * 5.0);
    const std::size_t m = rows * cols;
    std::vector<double> weights(m);
    for (auto& x : weights) x = 0.05 + u(rng);
    const auto prior = ProbabilityMap::from_weights(
        std::make_shared<const GridSpec>(GridSpec::unit(rows, cols)), weights);
    const SensorModel s{u(rng) * 0.6, u(rng) * 0.3, 0};
    const std::size_t n_obs = static_cast<std::size_t>(u(rng) * 11.0);
    std::vector<std::size_t> visits;
    ProbabilityMap post = prior;
    for (std::size_t t = 0; t < n_obs; ++t) {
      const auto cell = static_cast<std::size_t>(u(rng) * static_cast<double>(m));
      visits.push_back(cell);
      apply_no_detection(post, cell, s);
    }
    const auto expected = oracle::joint_bayes_posterior(
        std::vector<double>(prior.probs().begin(), prior.probs().end()), visits,
        s.missed_detection, s.false_alarm);
    for (std::size_t i = 0; i < m; ++i) worst_cell = std::max(worst_cell, std::abs(post[i] - expected[i]));
  }
  return {worst_sum < 1e-12 && worst_cell < 1e-10,
          "fuzz max |sum-1|=" + sci(worst_sum) + " over 1e4 updates (limit 1e-12); " +
              "oracle max cell error " + sci(worst_cell) + " over 200 cases (limit 1e-10)"};
}

struct PlannerRun {
  std::string name;
  RunStatistics stats;
  double conservative_mean = 0.0;  // censored trials counted at max_steps
  double conservative_stderr = 0.0;
};

std::vector<PlannerRun> table_runs;

PlannerRun run_planner(const ScenarioConfig& base, const ProbabilityMap& prior, PlannerKind kind) {
  ScenarioConfig cfg = base;
  cfg.planner.kind = kind;
  const PreparedScenario sc(cfg, prior);
  const auto results = run_trials(sc);
  PlannerRun run;
  run.name = std::string(to_string(kind));
  run.stats = summarize(results, sc.step_seconds());
  double sum = 0.0, sum2 = 0.0;
  for (const auto& r : results) {
    const double t = r.outcome == TrialOutcome::detected ? static_cast<double>(r.time_steps)
                                                         : static_cast<double>(sc.max_steps());
    sum += t;
    sum2 += t * t;
  }
  const double n = static_cast<double>(results.size());
  run.conservative_mean = sum / n;
  run.conservative_stderr = std::sqrt((sum2 - n * run.conservative_mean * run.conservative_mean) / (n - 1.0) / n);
  return run;
}

Outcome criterion_table_direction() {
  const auto t0 = Clock::now();
  auto cfg = load_scenario(scenario_path("table-1-analog"));
  cfg.trials.n_trials = 10'000;
  const PreparedScenario base(cfg);
  table_runs.clear();
  for (auto kind : {PlannerKind::zigzag, PlannerKind::naive, PlannerKind::windowing})
    table_runs.push_back(run_planner(cfg, base.prior(), kind));
  const auto& zig = table_runs[0];
  const auto& win = table_runs[2];
  constexpr double z99 = 2.576;
  const double win_hi = win.stats.mean_time + z99 * win.stats.stderr_time;
  const double zig_lo = zig.stats.mean_time - z99 * zig.stats.stderr_time;
  const double win_hi_cons = win.conservative_mean + z99 * win.conservative_stderr;
  const double zig_lo_cons = zig.conservative_mean - z99 * zig.conservative_stderr;
  const double elapsed = seconds_since(t0);
  const bool pass = win_hi < zig_lo && win_hi_cons < zig_lo_cons && elapsed < 300.0;
  return {pass, "windowing W=" + std::to_string(cfg.planner.window) + " " +
                    fmt(win.stats.mean_time, 1) + " +/- " + fmt(z99 * win.stats.stderr_time, 1) +
                    " steps vs zigzag " + fmt(zig.stats.mean_time, 1) + " +/- " +
                    fmt(z99 * zig.stats.stderr_time, 1) + " (99% CI), ratio " +
                    fmt(win.stats.mean_time / zig.stats.mean_time, 3) + "; windowing detection rate " +
                    fmt(win.stats.detection_rate, 4) + ", censored-as-max ratio " +
                    fmt(win.conservative_mean / zig.conservative_mean, 3) + "; " + fmt(elapsed, 1) +
                    " s (limit 300 s)"};
}

Outcome criterion_energy() {
  const auto p = representative_rotary_wing();
  const bool hover_exact = propulsion_power(0.0, p) == p.blade_profile_power + p.induced_power;

  // With a perfect ground check (no false alarms) every step after the first
  // is a move, so energy is exactly P(v) * step_seconds * (T - 1).
  auto cfg = load_scenario(scenario_path("table-1-analog"));
  cfg.sensor.false_alarm = 0.0;
  cfg.trials.n_trials = 2'000;
  const PreparedScenario base(cfg);
  const double per_step = propulsion_power(cfg.speed, cfg.power) * base.step_seconds();
  double worst_rel = 0.0;
  std::vector<std::pair<double, double>> time_energy;
  for (auto kind : {PlannerKind::zigzag, PlannerKind::naive, PlannerKind::windowing}) {
    ScenarioConfig c = cfg;
    c.planner.kind = kind;
    const PreparedScenario sc(c, base.prior());
    for (const auto& r : run_trials(sc)) {
      if (r.outcome != TrialOutcome::detected || r.hover_steps > 0) continue;
      const double expected = per_step * static_cast<double>(r.time_steps - 1);
      if (expected > 0.0) worst_rel = std::max(worst_rel, std::abs(r.energy - expected) / expected);
    }
    const auto s = run_monte_carlo(sc);
    time_energy.emplace_back(s.mean_time, s.mean_energy);
  }
  auto rank = [](std::vector<double> v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    return idx;
  };
  std::vector<double> t0, e0, t1, e1;
  for (auto [t, e] : time_energy) {
    t0.push_back(t);
    e0.push_back(e);
  }
  for (const auto& run : table_runs) {
    t1.push_back(run.stats.mean_time);
    e1.push_back(run.stats.mean_energy);
  }
  const bool ranking_exact = rank(t0) == rank(e0);
  const bool ranking_table = table_runs.empty() || rank(t1) == rank(e1);
  std::string energies;
  for (const auto& run : table_runs)
    energies += " " + run.name + "=" + fmt(run.stats.mean_energy / 1000.0, 1) + "kJ";
  return {hover_exact && worst_rel < 1e-12 && ranking_exact && ranking_table,
          std::string("P(0)=P0+Pi ") + (hover_exact ? "exact" : "MISMATCH") +
              "; max relative deviation from P(v)*dt*(T-1) " + sci(worst_rel) +
              "; energy ranking " + (ranking_exact && ranking_table ? "matches" : "differs from") +
              " time ranking; table-1-analog mean energy:" + energies};
}

Outcome criterion_naive_demo() {
  const auto cfg = load_scenario(scenario_path("fig2-naive-demo"));
  if (!cfg.corridor) return {false, "scenario has no corridor"};
  double fraction[2];
  int k = 0;
  for (auto kind : {PlannerKind::naive, PlannerKind::windowing}) {
    ScenarioConfig c = cfg;
    c.planner.kind = kind;
    const PreparedScenario sc(c);
    const auto trace = search_trace(sc, 300);
    fraction[k++] = corridor_fraction(sc.grid(), trace, *cfg.corridor);
  }
  return {fraction[0] >= 0.6 && fraction[1] < 0.4,
          "300-step corridor share: naive " + fmt(fraction[0], 3) + " (need >= 0.60), windowing W=" +
              std::to_string(cfg.planner.window) + " " + fmt(fraction[1], 3) + " (need < 0.40)"};
}

Outcome criterion_window_oracle() {
  std::mt19937_64 rng(8080);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t mismatches = 0, ties = 0;
  for (int k = 0; k < 500; ++k) {
    std::size_t rows, cols;
    do {
      rows = 1 + static_cast<std::size_t>(u(rng) * 5.0);
      cols = 1 + static_cast<std::size_t>(u(rng) * 5.0);
    } while (rows * cols < 2);
    const std::size_t m = rows * cols;
    std::size_t w = 1 + static_cast<std::size_t>(u(rng) * 3.0);
    while (w * w > m) --w;
    std::vector<double> weights(m);
    const bool coarse = k % 4 == 0;  // few distinct values, so ties occur
    for (auto& x : weights) x = coarse ? std::floor(u(rng) * 3.0) : u(rng);
    weights[static_cast<std::size_t>(u(rng) * static_cast<double>(m))] += 1.0;
    const auto map = ProbabilityMap::from_weights(
        std::make_shared<const GridSpec>(GridSpec::unit(rows, cols)), weights);
    const std::vector<double> p(map.probs().begin(), map.probs().end());
    const auto current = static_cast<CellIndex>(u(rng) * static_cast<double>(m));
    const auto expected = oracle::brute_force_window(p, rows, cols, current, w);
    if (coarse) ++ties;
    if (next_cell_window(current, map, {w, m}) != expected.cell) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + "/500 mismatches against brute-force enumeration (" +
                               std::to_string(ties) + " tie-prone instances)"};
}

Outcome criterion_sweep() {
  auto cfg = load_scenario(scenario_path("table-1-analog"));
  cfg.trials.n_trials = 1'000;
  const std::vector<std::size_t> windows{2, 3, 4};
  const auto points = sweep_window_sizes(cfg, windows, {});
  std::ostringstream csv;
  write_sweep_csv(csv, points);

  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  bool ok = line == "M,W,windowing_mean_time,zigzag_mean_time,ratio";
  std::size_t rows = 0;
  std::string trend;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string f;
    std::vector<double> values;
    while (std::getline(fields, f, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(f, &used));
        ok = ok && used == f.size();
      } catch (const std::exception&) {
        ok = false;
      }
    }
    ok = ok && values.size() == 5 && std::isfinite(values[4]) && values[4] > 0.0;
    if (values.size() == 5) trend += " W=" + fmt(values[1], 0) + ":" + fmt(values[4], 3);
    ++rows;
  }
  ok = ok && rows == windows.size();
  return {ok, std::to_string(rows) + " rows parsed; windowing/zigzag ratio by W (informational):" + trend};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "simplified search matches closed-form expected time", criterion_expected_time},
      {2, "uniform maps attain the worst-case bound; random maps stay below it", criterion_upper_bound},
      {3, "false-alarm expected time matches its closed form", criterion_false_alarm},
      {4, "Bayes update exactness", criterion_bayes},
      {5, "windowing beats zigzag on table-1-analog", criterion_table_direction},
      {6, "energy ranking equals time ranking at constant speed", criterion_energy},
      {7, "naive planner shuttles through the inter-peak corridor", criterion_naive_demo},
      {8, "window scoring matches brute-force enumeration", criterion_window_oracle},
      {9, "window-size sweep report", criterion_sweep},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- "
              << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
