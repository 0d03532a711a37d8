#include "uavsearch/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "uavsearch/energy.hpp"
#include "uavsearch/errors.hpp"
#include "uavsearch/sensor.hpp"

namespace uavsearch {

namespace {

constexpr std::uint32_t kTargetStream = 0;
constexpr std::uint32_t kSensorStream = 1;

void finish_energy(TrialResult& r, const ScenarioConfig& cfg, double step_seconds) {
  const double motion_seconds = r.path_length / cfg.speed;
  r.energy = propulsion_power(cfg.speed, cfg.power) * motion_seconds +
             cfg.power.hover_power() * static_cast<double>(r.hover_steps) * step_seconds;
}

// Teleporting search over the probability order, no map updates.
TrialResult run_simplified_trial(const PreparedScenario& sc, std::uint64_t seed) {
  const auto& cfg = sc.config();
  const auto& order = sc.probability_order();
  Rng target_rng = make_stream(seed, kTargetStream);
  Rng sensor_rng = make_stream(seed, kSensorStream);

  TrialResult r;
  r.target = sample_target(sc.prior(), target_rng);
  const double stride = 0.5 * (sc.grid().stride_x() + sc.grid().stride_y());
  for (std::size_t visit = 0;; ++visit) {
    const CellIndex cell = order[visit % order.size()];
    if (visit > 0) {
      ++r.moves;
      r.path_length += stride;
    }
    ++r.observations;
    ++r.time_steps;
    const Observation obs = observe(r.target, cell, cfg.sensor, sensor_rng);
    if (obs.detected) {
      if (obs.target_present) {
        r.detected = true;
        r.outcome = TrialOutcome::detected;
        break;
      }
      ++r.false_alarms;
      r.time_steps += cfg.sensor.ground_check_delay;
      r.hover_steps += static_cast<std::size_t>(cfg.sensor.ground_check_delay);
    }
    if (r.observations >= sc.max_steps()) {
      r.outcome = TrialOutcome::censored;
      break;
    }
  }
  return r;
}

TrialResult run_planned_trial(const PreparedScenario& sc, std::uint64_t seed, bool keep_trace) {
  const auto& cfg = sc.config();
  const GridSpec& grid = sc.grid();
  Rng target_rng = make_stream(seed, kTargetStream);
  Rng sensor_rng = make_stream(seed, kSensorStream);

  TrialResult r;
  r.target = sample_target(sc.prior(), target_rng);

  ProbabilityMap map = sc.prior();
  auto planner = make_planner(cfg.planner);
  planner->reset(map, sc.start_cell());
  const bool update = planner->uses_posterior();

  CellIndex current = sc.start_cell();
  if (keep_trace) r.trace.push_back(current);
  try {
    for (;;) {
      ++r.observations;
      ++r.time_steps;
      const Observation obs = observe(r.target, current, cfg.sensor, sensor_rng);
      if (obs.detected) {
        if (obs.target_present) {
          r.detected = true;
          r.outcome = TrialOutcome::detected;
          break;
        }
        ++r.false_alarms;
        r.time_steps += cfg.sensor.ground_check_delay;
        r.hover_steps += static_cast<std::size_t>(cfg.sensor.ground_check_delay);
        if (update) apply_false_alarm(map, current);
      } else if (update) {
        apply_no_detection(map, current, cfg.sensor);
      }
      planner->notify(obs, map);

      if (r.observations >= sc.max_steps()) {
        r.outcome = TrialOutcome::censored;
        break;
      }
      const CellIndex next = planner->next_cell({current, r.observations}, map);
      if (!grid.contains(next) || grid.grid_distance(current, next) > 1)
        throw PlannerStuck(planner->name() + " emitted an illegal move");
      if (next == current) {
        ++r.hover_steps;
      } else {
        ++r.moves;
        r.path_length += distance(grid.waypoint(current), grid.waypoint(next));
      }
      current = next;
      if (keep_trace) r.trace.push_back(current);
    }
  } catch (const Error& e) {
    r.outcome = TrialOutcome::failed;
    r.detected = false;
    r.failure = e.what();
  }
  return r;
}

}  // namespace

PreparedScenario::PreparedScenario(ScenarioConfig cfg)
    : cfg_(std::move(cfg)),
      prior_(build_map(std::make_shared<const GridSpec>(cfg_.grid.build()), cfg_.distribution)) {
  init();
}

PreparedScenario::PreparedScenario(ScenarioConfig cfg, ProbabilityMap prior)
    : cfg_(std::move(cfg)), prior_(std::move(prior)) {
  init();
}

void PreparedScenario::init() {
  cfg_.sensor.validate();
  cfg_.power.validate();
  if (!(cfg_.speed > 0.0)) throw ConfigError("speed must be positive");
  if (cfg_.trials.n_trials < 1) throw ConfigError("trials.count must be at least 1");
  const GridSpec& g = prior_.grid();
  if (!cfg_.simplified && cfg_.planner.kind == PlannerKind::windowing)
    WindowPlannerConfig{cfg_.planner.window, g.cell_count()}.validate();
  start_ = g.corner(cfg_.planner.start);
  max_steps_ = cfg_.max_steps_for(g.cell_count());
  step_seconds_ = 0.5 * (g.stride_x() + g.stride_y()) / cfg_.speed;
  order_.resize(prior_.size());
  for (CellIndex i = 0; i < order_.size(); ++i) order_[i] = i;
  const auto p = prior_.probs();
  std::stable_sort(order_.begin(), order_.end(),
                   [&](CellIndex a, CellIndex b) { return p[a] > p[b]; });
}

std::string_view to_string(TrialOutcome outcome) {
  switch (outcome) {
    case TrialOutcome::detected: return "detected";
    case TrialOutcome::censored: return "censored";
    case TrialOutcome::failed: return "failed";
  }
  return "unknown";
}

TrialResult run_trial(const PreparedScenario& scenario, std::uint64_t seed, bool keep_trace) {
  TrialResult r = scenario.config().simplified ? run_simplified_trial(scenario, seed)
                                               : run_planned_trial(scenario, seed, keep_trace);
  finish_energy(r, scenario.config(), scenario.step_seconds());
  return r;
}

RunStatistics summarize(std::span<const TrialResult> trials, double step_seconds) {
  RunStatistics s;
  s.n_trials = trials.size();
  s.step_seconds = step_seconds;
  double sum_t = 0.0, sum_e = 0.0, sum_fa = 0.0;
  for (const auto& t : trials) {
    switch (t.outcome) {
      case TrialOutcome::detected:
        ++s.n_detected;
        sum_t += static_cast<double>(t.time_steps);
        sum_e += t.energy;
        sum_fa += static_cast<double>(t.false_alarms);
        break;
      case TrialOutcome::censored: ++s.n_censored; break;
      case TrialOutcome::failed: ++s.n_failed; break;
    }
  }
  if (s.n_trials > 0)
    s.detection_rate = static_cast<double>(s.n_detected) / static_cast<double>(s.n_trials);
  if (s.n_detected == 0) return s;

  const double n = static_cast<double>(s.n_detected);
  s.mean_time = sum_t / n;
  s.mean_energy = sum_e / n;
  s.mean_false_alarms = sum_fa / n;
  s.mean_time_seconds = s.mean_time * step_seconds;
  if (s.n_detected > 1) {
    double ss_t = 0.0, ss_e = 0.0;
    for (const auto& t : trials) {
      if (t.outcome != TrialOutcome::detected) continue;
      const double dt = static_cast<double>(t.time_steps) - s.mean_time;
      const double de = t.energy - s.mean_energy;
      ss_t += dt * dt;
      ss_e += de * de;
    }
    s.std_time = std::sqrt(ss_t / (n - 1.0));
    s.std_energy = std::sqrt(ss_e / (n - 1.0));
    s.stderr_time = s.std_time / std::sqrt(n);
    s.stderr_defined = true;
  }
  return s;
}

std::vector<TrialResult> run_trials(const PreparedScenario& scenario) {
  const auto& trials = scenario.config().trials;
  std::vector<TrialResult> results(trials.n_trials);
  unsigned workers = trials.workers ? trials.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(results.size()));

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < results.size(); k = next++)
      results[k] = run_trial(scenario, trials.base_seed + k);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

RunStatistics run_monte_carlo(const PreparedScenario& scenario) {
  const auto results = run_trials(scenario);
  RunStatistics s = summarize(results, scenario.step_seconds());
  s.planner = scenario.config().simplified
                  ? std::string("simplified")
                  : std::string(to_string(scenario.config().planner.kind));
  return s;
}

RunStatistics run_monte_carlo(const ScenarioConfig& cfg) {
  return run_monte_carlo(PreparedScenario(cfg));
}

std::vector<ComparisonRow> compare_planners(const ScenarioConfig& cfg,
                                            std::span<const PlannerConfig> planners) {
  if (planners.size() < 2) throw ConfigError("compare needs at least two planners");
  const PreparedScenario base(cfg);
  std::vector<ComparisonRow> rows;
  for (const auto& p : planners) {
    ScenarioConfig c = cfg;
    c.planner = p;
    c.simplified = false;
    ComparisonRow row;
    row.planner = p;
    row.stats = run_monte_carlo(PreparedScenario(c, base.prior()));
    if (p.kind == PlannerKind::windowing)
      row.stats.planner += " W=" + std::to_string(p.window);
    rows.push_back(std::move(row));
  }
  const auto& baseline = rows.front().stats;
  for (auto& row : rows) {
    row.time_ratio = baseline.mean_time > 0.0 ? row.stats.mean_time / baseline.mean_time : 0.0;
    row.energy_ratio =
        baseline.mean_energy > 0.0 ? row.stats.mean_energy / baseline.mean_energy : 0.0;
  }
  return rows;
}

std::vector<SweepPoint> sweep_window_sizes(const ScenarioConfig& cfg,
                                           std::span<const std::size_t> windows,
                                           std::span<const std::size_t> grid_sides) {
  std::vector<ScenarioConfig> grids;
  if (grid_sides.empty()) {
    grids.push_back(cfg);
  } else {
    for (std::size_t side : grid_sides) {
      if (side == 0) throw ConfigError("grid side must be positive");
      ScenarioConfig c = cfg;
      c.grid.camera.reset();
      c.grid.cell_width = cfg.grid.area_width / static_cast<double>(side);
      c.grid.cell_height = cfg.grid.area_height / static_cast<double>(side);
      c.grid.overlap_x = c.grid.overlap_y = 0.0;
      grids.push_back(std::move(c));
    }
  }

  std::vector<SweepPoint> points;
  for (const auto& g : grids) {
    ScenarioConfig zig = g;
    zig.simplified = false;
    zig.planner.kind = PlannerKind::zigzag;
    const PreparedScenario zsc(zig);
    const RunStatistics zstats = run_monte_carlo(zsc);
    for (std::size_t w : windows) {
      if (w == 0 || w * w > zsc.grid().cell_count()) continue;
      ScenarioConfig win = zig;
      win.planner.kind = PlannerKind::windowing;
      win.planner.window = w;
      const RunStatistics wstats = run_monte_carlo(PreparedScenario(win, zsc.prior()));
      SweepPoint pt;
      pt.cell_count = zsc.grid().cell_count();
      pt.window = w;
      pt.windowing_mean_time = wstats.mean_time;
      pt.zigzag_mean_time = zstats.mean_time;
      pt.ratio = zstats.mean_time > 0.0 ? wstats.mean_time / zstats.mean_time : 0.0;
      points.push_back(pt);
    }
  }
  return points;
}

std::vector<CellIndex> search_trace(const PreparedScenario& scenario, std::size_t steps) {
  const auto& cfg = scenario.config();
  ProbabilityMap map = scenario.prior();
  auto planner = make_planner(cfg.planner);
  planner->reset(map, scenario.start_cell());

  std::vector<CellIndex> trace;
  CellIndex current = scenario.start_cell();
  for (std::size_t t = 1; t <= steps; ++t) {
    trace.push_back(current);
    Observation obs{current, false, false};
    apply_no_detection(map, current, cfg.sensor);
    planner->notify(obs, map);
    if (t == steps) break;
    current = planner->next_cell({current, t}, map);
  }
  return trace;
}

double corridor_fraction(const GridSpec& grid, std::span<const CellIndex> trace,
                         const CorridorSpec& corridor) {
  if (trace.empty()) return 0.0;
  const auto inside = std::count_if(trace.begin(), trace.end(), [&](CellIndex c) {
    return corridor.contains(grid.coord(c));
  });
  return static_cast<double>(inside) / static_cast<double>(trace.size());
}

}  // namespace uavsearch
