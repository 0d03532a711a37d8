#include "uavsearch/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uavsearch/errors.hpp"

namespace uavsearch {

using nlohmann::json;

namespace {

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

void check_keys(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be an object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || item.key() == a;
    if (!ok) throw ConfigError("unknown key '" + item.key() + "' in " + std::string(where));
  }
}

const json& require(const json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key))
    throw ConfigError("missing key '" + std::string(key) + "' in " + std::string(where));
  return obj.at(key);
}

Point read_pair(const json& v, std::string_view what) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(std::string(what) + " must be [x, y]");
  return {v[0].get<double>(), v[1].get<double>()};
}

DistributionKind parse_kind(const std::string& s) {
  if (s == "uniform") return DistributionKind::uniform;
  if (s == "gaussian_mixture") return DistributionKind::gaussian_mixture;
  if (s == "gaussian_uniform_mixture") return DistributionKind::gaussian_uniform_mixture;
  throw ConfigError("unknown distribution kind '" + s + "'");
}

GridConfig parse_grid(const json& root) {
  GridConfig g;
  const json& area = require(root, "area", "scenario");
  check_keys(area, "area", {"width", "height"});
  g.area_width = require(area, "width", "area").get<double>();
  g.area_height = require(area, "height", "area").get<double>();
  if (root.contains("camera")) {
    const json& cam = root.at("camera");
    check_keys(cam, "camera", {"altitude", "vertical_angle_deg", "horizontal_angle_deg"});
    g.camera = CameraSpec{require(cam, "altitude", "camera").get<double>(),
                          deg2rad(require(cam, "vertical_angle_deg", "camera").get<double>()),
                          deg2rad(require(cam, "horizontal_angle_deg", "camera").get<double>())};
  } else {
    const json& cell = require(root, "cell", "scenario (no camera given)");
    check_keys(cell, "cell", {"width", "height"});
    g.cell_width = require(cell, "width", "cell").get<double>();
    g.cell_height = require(cell, "height", "cell").get<double>();
  }
  if (root.contains("overlap")) {
    const json& ov = root.at("overlap");
    check_keys(ov, "overlap", {"x", "y"});
    g.overlap_x = ov.value("x", 0.0);
    g.overlap_y = ov.value("y", 0.0);
  }
  return g;
}

DistributionSpec parse_distribution(const json& d) {
  check_keys(d, "distribution", {"kind", "components", "uniform_weight"});
  DistributionSpec spec;
  spec.kind = parse_kind(require(d, "kind", "distribution").get<std::string>());
  spec.uniform_weight = d.value("uniform_weight", 0.0);
  if (d.contains("components")) {
    for (const json& c : d.at("components")) {
      check_keys(c, "distribution component", {"weight", "mean", "std"});
      spec.components.push_back({require(c, "weight", "component").get<double>(),
                                 read_pair(require(c, "mean", "component"), "mean"),
                                 read_pair(require(c, "std", "component"), "std")});
    }
  }
  return spec;
}

PowerParams parse_power(const json& p) {
  check_keys(p, "power", {"blade_profile_power", "induced_power", "tip_speed", "induced_velocity",
                          "fuselage_drag_ratio", "air_density", "disc_area", "label"});
  PowerParams out = representative_rotary_wing();
  out.blade_profile_power = p.value("blade_profile_power", out.blade_profile_power);
  out.induced_power = p.value("induced_power", out.induced_power);
  out.tip_speed = p.value("tip_speed", out.tip_speed);
  out.induced_velocity = p.value("induced_velocity", out.induced_velocity);
  out.fuselage_drag_ratio = p.value("fuselage_drag_ratio", out.fuselage_drag_ratio);
  out.air_density = p.value("air_density", out.air_density);
  out.disc_area = p.value("disc_area", out.disc_area);
  return out;
}

}  // namespace

Corner parse_corner(std::string_view text) {
  if (text == "bottom_left") return Corner::bottom_left;
  if (text == "bottom_right") return Corner::bottom_right;
  if (text == "top_left") return Corner::top_left;
  if (text == "top_right") return Corner::top_right;
  throw ConfigError("unknown corner '" + std::string(text) + "'");
}

GridSpec GridConfig::build() const {
  if (camera) return decompose_area(area_width, area_height, *camera, overlap_x, overlap_y);
  return GridSpec::from_cells(area_width, area_height, cell_width, cell_height, overlap_x,
                              overlap_y);
}

void ScenarioConfig::validate() const {
  const GridSpec g = grid.build();
  distribution.validate();
  sensor.validate();
  power.validate();
  if (!(speed > 0.0)) throw ConfigError("speed must be positive");
  if (trials.n_trials < 1) throw ConfigError("trials.count must be at least 1");
  if (planner.kind == PlannerKind::windowing)
    WindowPlannerConfig{planner.window, g.cell_count()}.validate();
  if (corridor) {
    if (corridor->row_min > corridor->row_max || corridor->col_min > corridor->col_max ||
        corridor->row_max >= g.rows() || corridor->col_max >= g.cols())
      throw ConfigError("corridor lies outside the grid");
  }
}

std::size_t ScenarioConfig::max_steps_for(std::size_t cell_count) const {
  return trials.max_steps > 0 ? trials.max_steps : 20 * cell_count;
}

ScenarioConfig parse_scenario(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  check_keys(root, "scenario",
             {"name", "description", "area", "camera", "cell", "overlap", "distribution",
              "sensor", "planner", "power", "speed", "trials", "simplified", "corridor"});

  ScenarioConfig cfg;
  try {
    cfg.name = root.value("name", std::string("unnamed"));
    cfg.description = root.value("description", std::string());
    cfg.grid = parse_grid(root);
    cfg.distribution = parse_distribution(require(root, "distribution", "scenario"));

    if (root.contains("sensor")) {
      const json& s = root.at("sensor");
      check_keys(s, "sensor", {"missed_detection", "false_alarm", "ground_check_delay"});
      cfg.sensor.missed_detection = s.value("missed_detection", 0.0);
      cfg.sensor.false_alarm = s.value("false_alarm", 0.0);
      cfg.sensor.ground_check_delay = s.value("ground_check_delay", std::int64_t{0});
    }
    if (root.contains("planner")) {
      const json& p = root.at("planner");
      check_keys(p, "planner", {"kind", "window", "start"});
      cfg.planner.kind = parse_planner_kind(p.value("kind", std::string("windowing")));
      cfg.planner.window = p.value("window", std::size_t{3});
      cfg.planner.start = parse_corner(p.value("start", std::string("bottom_left")));
    }
    if (root.contains("power")) cfg.power = parse_power(root.at("power"));
    cfg.speed = root.value("speed", cfg.speed);
    if (root.contains("trials")) {
      const json& t = root.at("trials");
      check_keys(t, "trials", {"count", "max_steps", "base_seed", "workers"});
      cfg.trials.n_trials = t.value("count", cfg.trials.n_trials);
      cfg.trials.max_steps = t.value("max_steps", cfg.trials.max_steps);
      cfg.trials.base_seed = t.value("base_seed", cfg.trials.base_seed);
      cfg.trials.workers = t.value("workers", cfg.trials.workers);
    }
    cfg.simplified = root.value("simplified", false);
    if (root.contains("corridor")) {
      const json& c = root.at("corridor");
      check_keys(c, "corridor", {"rows", "cols"});
      const auto rows = require(c, "rows", "corridor").get<std::vector<std::size_t>>();
      const auto cols = require(c, "cols", "corridor").get<std::vector<std::size_t>>();
      if (rows.size() != 2 || cols.size() != 2)
        throw ConfigError("corridor rows/cols must be [min, max]");
      cfg.corridor = CorridorSpec{rows[0], rows[1], cols[0], cols[1]};
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed scenario: ") + e.what());
  }

  try {
    cfg.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("invalid scenario: ") + e.what());
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

void apply_env_overrides(ScenarioConfig& cfg) {
  const auto read = [](const char* name) -> std::optional<unsigned long long> {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0') throw ConfigError(std::string(name) + " must be a non-negative integer");
    return n;
  };
  if (auto n = read("UAVSEARCH_TRIALS")) {
    if (*n == 0) throw ConfigError("UAVSEARCH_TRIALS must be at least 1");
    cfg.trials.n_trials = static_cast<std::size_t>(*n);
  }
  if (auto s = read("UAVSEARCH_SEED")) cfg.trials.base_seed = *s;
}

}  // namespace uavsearch
