// Command-line front end: scenario-driven simulation, planner comparison,
// closed-form analytics, grid reports and path traces.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavsearch/errors.hpp"
#include "uavsearch/report.hpp"
#include "uavsearch/scenario.hpp"
#include "uavsearch/simulation.hpp"

namespace {

using namespace uavsearch;

struct CommonOptions {
  std::string scenario;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<std::string> planner;
  std::optional<std::size_t> window;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_planner = true) {
  cmd->add_option("scenario", o.scenario, "Scenario file (JSON)")->required();
  cmd->add_option("--trials,-n", o.trials, "Number of Monte Carlo trials");
  cmd->add_option("--seed", o.seed, "Base seed; trial k uses seed + k");
  cmd->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
  if (with_planner) {
    cmd->add_option("--planner", o.planner, "zigzag | naive | windowing");
    cmd->add_option("--window,-w", o.window, "Window size W for the windowing planner");
  }
}

ScenarioConfig load(const CommonOptions& o) {
  ScenarioConfig cfg = load_scenario(o.scenario);
  apply_env_overrides(cfg);
  if (o.trials) cfg.trials.n_trials = *o.trials;
  if (o.seed) cfg.trials.base_seed = *o.seed;
  if (o.workers) cfg.trials.workers = *o.workers;
  if (o.planner) cfg.planner.kind = parse_planner_kind(*o.planner);
  if (o.window) cfg.planner.window = *o.window;
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  return out;
}

std::vector<PlannerConfig> parse_planner_list(const std::vector<std::string>& names,
                                              const ScenarioConfig& cfg) {
  std::vector<PlannerConfig> out;
  for (const auto& name : names) {
    PlannerConfig p = cfg.planner;
    const auto colon = name.find(':');
    p.kind = parse_planner_kind(name.substr(0, colon));
    if (colon != std::string::npos) p.window = std::stoul(name.substr(colon + 1));
    out.push_back(p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic UAV target-search simulator"};
  app.require_subcommand(1);

  CommonOptions sim_opts;
  std::string sim_csv, sim_trials_csv;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of one planner");
  add_common(simulate, sim_opts);
  simulate->add_option("--csv", sim_csv, "Write summary statistics CSV");
  simulate->add_option("--trials-csv", sim_trials_csv, "Write per-trial results CSV");

  CommonOptions cmp_opts;
  std::vector<std::string> cmp_planners{"zigzag", "naive", "windowing"};
  std::string cmp_csv;
  auto* compare = app.add_subcommand("compare", "Compare planners on a common seed set");
  add_common(compare, cmp_opts);
  compare->add_option("--planners", cmp_planners,
                      "Planners, first is the baseline; windowing:W sets W")
      ->delimiter(',');
  compare->add_option("--csv", cmp_csv, "Write comparison CSV");

  CommonOptions ana_opts;
  std::string ana_csv;
  auto* analytic = app.add_subcommand("analytic", "Closed-form detection times");
  add_common(analytic, ana_opts, false);
  analytic->add_option("--csv", ana_csv, "Write CSV");

  CommonOptions dec_opts;
  std::string dec_map_csv;
  auto* decompose = app.add_subcommand("decompose", "Report the area decomposition");
  add_common(decompose, dec_opts, false);
  decompose->add_option("--map-csv", dec_map_csv, "Write the prior map as row,col,p");

  CommonOptions path_opts;
  std::size_t path_steps = 300;
  std::optional<std::uint64_t> path_trial;
  std::string path_out;
  auto* emit_path = app.add_subcommand("emit-path", "Write a visited-cell trace as CSV");
  add_common(emit_path, path_opts);
  emit_path->add_option("--steps", path_steps, "Trace length for the no-detection trace");
  emit_path->add_option("--trial", path_trial,
                        "Trace a full trial with this seed instead of a no-detection search");
  emit_path->add_option("--out,-o", path_out, "Output file (default stdout)");

  CommonOptions sw_opts;
  std::vector<std::size_t> sw_windows{2, 3, 4};
  std::vector<std::size_t> sw_sides;
  std::string sw_csv;
  auto* sweep = app.add_subcommand("sweep", "Windowing/zigzag time ratio over W and M");
  add_common(sweep, sw_opts, false);
  sweep->add_option("--windows", sw_windows, "Window sizes")->delimiter(',');
  sweep->add_option("--sides", sw_sides, "Grid sides (M = side^2); default keeps the scenario grid")
      ->delimiter(',');
  sweep->add_option("--csv", sw_csv, "Write sweep CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate) {
      const ScenarioConfig cfg = load(sim_opts);
      const PreparedScenario sc(cfg);
      const auto results = run_trials(sc);
      RunStatistics stats = summarize(results, sc.step_seconds());
      stats.planner = cfg.simplified ? "simplified" : std::string(to_string(cfg.planner.kind));
      std::cout << "scenario          " << cfg.name << '\n';
      write_statistics_text(std::cout, stats);
      if (!sim_csv.empty()) {
        auto out = open_out(sim_csv);
        write_statistics_csv(out, std::span(&stats, 1));
      }
      if (!sim_trials_csv.empty()) {
        auto out = open_out(sim_trials_csv);
        write_trials_csv(out, results, cfg.trials.base_seed);
      }
    } else if (*compare) {
      const ScenarioConfig cfg = load(cmp_opts);
      const auto planners = parse_planner_list(cmp_planners, cfg);
      const auto rows = compare_planners(cfg, planners);
      std::cout << "scenario " << cfg.name << ", " << cfg.trials.n_trials << " trials\n";
      write_comparison_text(std::cout, rows);
      if (!cmp_csv.empty()) {
        auto out = open_out(cmp_csv);
        write_comparison_csv(out, rows);
      }
    } else if (*analytic) {
      const ScenarioConfig cfg = load(ana_opts);
      const auto report = analytic_report(PreparedScenario(cfg));
      write_analytic_text(std::cout, report);
      if (!ana_csv.empty()) {
        auto out = open_out(ana_csv);
        write_analytic_csv(out, report);
      }
    } else if (*decompose) {
      const ScenarioConfig cfg = load(dec_opts);
      const PreparedScenario sc(cfg);
      write_grid_text(std::cout, sc.grid());
      if (!dec_map_csv.empty()) {
        auto out = open_out(dec_map_csv);
        write_map_csv(out, sc.prior());
      }
    } else if (*emit_path) {
      const ScenarioConfig cfg = load(path_opts);
      const PreparedScenario sc(cfg);
      std::vector<CellIndex> trace;
      if (path_trial) {
        trace = run_trial(sc, *path_trial, /*keep_trace=*/true).trace;
      } else {
        trace = search_trace(sc, path_steps);
      }
      if (path_out.empty()) {
        write_trace_csv(std::cout, sc.grid(), trace);
      } else {
        auto out = open_out(path_out);
        write_trace_csv(out, sc.grid(), trace);
      }
      if (cfg.corridor)
        std::cerr << "corridor fraction " << corridor_fraction(sc.grid(), trace, *cfg.corridor)
                  << '\n';
    } else if (*sweep) {
      const ScenarioConfig cfg = load(sw_opts);
      const auto points = sweep_window_sizes(cfg, sw_windows, sw_sides);
      write_sweep_text(std::cout, points);
      if (!sw_csv.empty()) {
        auto out = open_out(sw_csv);
        write_sweep_csv(out, points);
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
