#include "uavsearch/energy.hpp"

#include <cmath>
#include <string>

#include "uavsearch/errors.hpp"

namespace uavsearch {

void PowerParams::validate() const {
  const double fields[] = {blade_profile_power, induced_power,      tip_speed, induced_velocity,
                           fuselage_drag_ratio, air_density, disc_area};
  for (double f : fields)
    if (!(f > 0.0) || !std::isfinite(f)) throw ConfigError("power parameters must be positive");
}

PowerParams representative_rotary_wing() {
  PowerParams p;
  p.blade_profile_power = 79.86;
  p.induced_power = 88.63;
  p.tip_speed = 120.0;
  p.induced_velocity = 4.03;
  p.fuselage_drag_ratio = 0.6;
  p.air_density = 1.225;
  p.disc_area = 0.503;
  return p;
}

double induced_factor(double speed, const PowerParams& params) {
  const double r = speed / params.induced_velocity;
  const double r2 = r * r;
  // sqrt(1 + r^4/4) - r^2/2 == 1 / (sqrt(1 + r^4/4) + r^2/2), which avoids
  // cancellation at high speed.
  return std::sqrt(1.0 / (std::sqrt(1.0 + r2 * r2 / 4.0) + r2 / 2.0));
}

double propulsion_power(double speed, const PowerParams& params) {
  if (!(speed >= 0.0) || !std::isfinite(speed))
    throw InvalidSpeed("speed must be non-negative, got " + std::to_string(speed));
  if (speed == 0.0) return params.hover_power();
  const double u = speed / params.tip_speed;
  const double profile = params.blade_profile_power * (1.0 + 3.0 * u * u);
  const double induced = params.induced_power * induced_factor(speed, params);
  const double parasite = 0.5 * params.fuselage_drag_ratio * params.air_density *
                          params.disc_area * speed * speed * speed;
  return profile + induced + parasite;
}

Trajectory Trajectory::constant_speed(std::vector<Point> waypoints, double speed) {
  Trajectory t;
  t.waypoints = std::move(waypoints);
  t.speed = speed;
  const double len = t.length();
  if (len > 0.0) {
    if (!(speed > 0.0)) throw InvalidTrajectory("zero speed over a non-empty path");
    t.duration = len / speed;
  }
  return t;
}

Trajectory Trajectory::hover(Point at, double duration) {
  if (!(duration >= 0.0)) throw InvalidTrajectory("hover duration must be non-negative");
  Trajectory t;
  t.waypoints = {at};
  t.duration = duration;
  return t;
}

double Trajectory::length() const {
  double len = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i)
    len += distance(waypoints[i - 1], waypoints[i]);
  return len;
}

double trajectory_energy(const Trajectory& traj, const PowerParams& params) {
  const double len = traj.length();
  if (len == 0.0) return propulsion_power(0.0, params) * traj.duration;
  if (!(traj.speed > 0.0)) throw InvalidTrajectory("zero speed over a non-empty path");
  return propulsion_power(traj.speed, params) * traj.duration;
}

double profile_energy(const std::function<double(double)>& speed_at, double duration,
                      const PowerParams& params, double max_step) {
  if (!(duration >= 0.0)) throw InvalidTrajectory("duration must be non-negative");
  if (!(max_step > 0.0)) throw InvalidTrajectory("quadrature step must be positive");
  if (duration == 0.0) return 0.0;
  const auto steps = static_cast<std::size_t>(std::ceil(duration / max_step));
  const double dt = duration / static_cast<double>(steps);
  double energy = 0.0;
  for (std::size_t k = 0; k < steps; ++k)
    energy += propulsion_power(speed_at((static_cast<double>(k) + 0.5) * dt), params);
  return energy * dt;
}

}  // namespace uavsearch
