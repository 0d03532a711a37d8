#ifndef UAVSEARCH_ENERGY_HPP
#define UAVSEARCH_ENERGY_HPP

#include <functional>
#include <vector>

#include "uavsearch/gridmap.hpp"

namespace uavsearch {

/// Rotary-wing propulsion model parameters.
struct PowerParams {
  double blade_profile_power = 0.0;  // P0, W
  double induced_power = 0.0;        // Pi, W
  double tip_speed = 0.0;            // U_tip, m/s
  double induced_velocity = 0.0;     // v0, m/s (mean rotor induced velocity in hover)
  double fuselage_drag_ratio = 0.0;  // d0
  double air_density = 0.0;          // kg/m^3
  double disc_area = 0.0;            // m^2

  void validate() const;
  double hover_power() const { return blade_profile_power + induced_power; }
};

/// Parameters of a representative small rotary-wing UAV. These are
/// configuration defaults, not measured values for any particular airframe.
PowerParams representative_rotary_wing();

/// Propulsion power at forward speed v: blade profile, induced and
/// parasite terms.
double propulsion_power(double speed, const PowerParams& params);

/// The induced-power multiplier (sqrt(1 + v^4/(4 v0^4)) - v^2/(2 v0^2))^(1/2).
double induced_factor(double speed, const PowerParams& params);

/// Constant-speed flight through waypoints, or a hover of fixed duration.
struct Trajectory {
  std::vector<Point> waypoints;
  double speed = 0.0;     // m/s
  double duration = 0.0;  // s

  static Trajectory constant_speed(std::vector<Point> waypoints, double speed);
  static Trajectory hover(Point at, double duration);

  double length() const;
};

/// Energy in joules. Constant speed collapses the power integral to
/// P(speed) * duration.
double trajectory_energy(const Trajectory& traj, const PowerParams& params);

/// Composite midpoint rule for a time-varying speed profile. The step is at
/// most `max_step` seconds; for a profile with bounded second derivative of
/// P(v(t)) the error is at most duration * max_step^2 * sup|d2P/dt2| / 24.
double profile_energy(const std::function<double(double)>& speed_at, double duration,
                      const PowerParams& params, double max_step = 0.1);

}  // namespace uavsearch

#endif  // UAVSEARCH_ENERGY_HPP
