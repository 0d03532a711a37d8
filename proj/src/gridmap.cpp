#include "uavsearch/gridmap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "uavsearch/errors.hpp"

namespace uavsearch {

namespace {

constexpr double kNormTolerance = 1e-9;

// ceil() that ignores floating-point dust just above an integer.
std::size_t tile_count(double extent, double stride) {
  const double n = std::ceil(extent / stride - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

void CameraSpec::validate() const {
  if (!(altitude > 0.0) || !std::isfinite(altitude))
    throw InvalidCamera("camera altitude must be positive, got " + std::to_string(altitude));
  const auto in_range = [](double a) { return a > 0.0 && a < std::numbers::pi; };
  if (!in_range(vertical_angle) || !in_range(horizontal_angle))
    throw InvalidCamera("camera angles must lie in (0, pi)");
}

Footprint footprint(const CameraSpec& camera) {
  camera.validate();
  return {2.0 * camera.altitude * std::tan(camera.vertical_angle / 2.0),
          2.0 * camera.altitude * std::tan(camera.horizontal_angle / 2.0)};
}

GridSpec GridSpec::from_cells(double area_width, double area_height,
                              double cell_width, double cell_height,
                              double overlap_x, double overlap_y) {
  if (!(area_width > 0.0) || !(area_height > 0.0) || !std::isfinite(area_width) ||
      !std::isfinite(area_height))
    throw InvalidArea("area dimensions must be positive");
  if (!(cell_width > 0.0) || !(cell_height > 0.0))
    throw InvalidArea("cell dimensions must be positive");
  if (!(overlap_x >= 0.0 && overlap_x < 1.0) || !(overlap_y >= 0.0 && overlap_y < 1.0))
    throw InvalidArea("overlap fractions must lie in [0, 1)");

  GridSpec g;
  g.area_width_ = area_width;
  g.area_height_ = area_height;
  g.cell_width_ = cell_width;
  g.cell_height_ = cell_height;
  g.overlap_x_ = overlap_x;
  g.overlap_y_ = overlap_y;
  g.cols_ = tile_count(area_width, g.stride_x());
  g.rows_ = tile_count(area_height, g.stride_y());

  g.waypoints_.reserve(g.cell_count());
  for (std::size_t r = 0; r < g.rows_; ++r)
    for (std::size_t c = 0; c < g.cols_; ++c)
      g.waypoints_.push_back({static_cast<double>(c) * g.stride_x() + cell_width / 2.0,
                              static_cast<double>(r) * g.stride_y() + cell_height / 2.0});
  return g;
}

GridSpec GridSpec::unit(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidArea("grid must have at least one cell");
  return from_cells(static_cast<double>(cols), static_cast<double>(rows), 1.0, 1.0);
}

Point GridSpec::waypoint(CellIndex i) const { return waypoints_.at(i); }

CellIndex GridSpec::corner(Corner c) const {
  switch (c) {
    case Corner::bottom_left: return index(0, 0);
    case Corner::bottom_right: return index(0, cols_ - 1);
    case Corner::top_left: return index(rows_ - 1, 0);
    case Corner::top_right: return index(rows_ - 1, cols_ - 1);
  }
  return 0;
}

std::vector<CellIndex> GridSpec::neighbors(CellIndex i) const {
  const auto [r, c] = coord(i);
  std::vector<CellIndex> out;
  out.reserve(4);
  if (r > 0) out.push_back(index(r - 1, c));
  if (c > 0) out.push_back(index(r, c - 1));
  if (c + 1 < cols_) out.push_back(index(r, c + 1));
  if (r + 1 < rows_) out.push_back(index(r + 1, c));
  return out;
}

std::size_t GridSpec::grid_distance(CellIndex a, CellIndex b) const {
  const auto ca = coord(a);
  const auto cb = coord(b);
  const auto diff = [](std::size_t x, std::size_t y) { return x > y ? x - y : y - x; };
  return diff(ca.row, cb.row) + diff(ca.col, cb.col);
}

CellIndex GridSpec::step_toward(CellIndex from, CellIndex to) const {
  auto [r, c] = coord(from);
  const auto [tr, tc] = coord(to);
  if (c < tc) ++c;
  else if (c > tc) --c;
  else if (r < tr) ++r;
  else if (r > tr) --r;
  return index(r, c);
}

GridSpec decompose_area(double area_width, double area_height,
                        const CameraSpec& camera, double overlap_x,
                        double overlap_y) {
  const Footprint fp = footprint(camera);
  return GridSpec::from_cells(area_width, area_height, fp.width, fp.height,
                              overlap_x, overlap_y);
}

// ---------------------------------------------------------------------------

ProbabilityMap::ProbabilityMap(std::shared_ptr<const GridSpec> grid,
                               std::vector<double> probs)
    : grid_(std::move(grid)), probs_(std::move(probs)) {
  if (!grid_) throw InvalidMap("probability map requires a grid");
  if (probs_.size() != grid_->cell_count())
    throw InvalidMap("probability vector has " + std::to_string(probs_.size()) +
                     " entries for a grid of " + std::to_string(grid_->cell_count()));
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
      throw InvalidMap("cell probabilities must lie in [0, 1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormTolerance)
    throw InvalidMap("cell probabilities sum to " + std::to_string(sum) + ", expected 1");
  normalize();
}

ProbabilityMap ProbabilityMap::from_weights(std::shared_ptr<const GridSpec> grid,
                                            std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidMap("weights must be finite and non-negative");
    sum += w;
  }
  if (!(sum > 0.0)) throw InvalidMap("weights sum to zero");
  for (double& w : weights) w /= sum;
  return ProbabilityMap(std::move(grid), std::move(weights));
}

ProbabilityMap ProbabilityMap::uniform(std::shared_ptr<const GridSpec> grid) {
  const std::size_t m = grid->cell_count();
  return ProbabilityMap(std::move(grid), std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

CellIndex ProbabilityMap::argmax() const {
  return static_cast<CellIndex>(std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

void ProbabilityMap::normalize() {
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw InvalidMap("non-finite or negative cell weight");
    sum += p;
  }
  if (!(sum > 0.0)) throw InvalidMap("probability map has no mass");
  for (double& p : probs_) p /= sum;
}

// ---------------------------------------------------------------------------

void DistributionSpec::validate() const {
  if (kind == DistributionKind::uniform) return;
  if (components.empty())
    throw InvalidDistribution("mixture distribution needs at least one component");
  if (!(uniform_weight >= 0.0 && uniform_weight <= 1.0))
    throw InvalidDistribution("uniform_weight must lie in [0, 1]");
  if (kind == DistributionKind::gaussian_mixture && uniform_weight != 0.0)
    throw InvalidDistribution("gaussian_mixture takes no uniform_weight");
  double total = uniform_weight;
  for (const auto& c : components) {
    if (!(c.weight >= 0.0)) throw InvalidDistribution("component weights must be non-negative");
    if (!(c.stddev.x > 0.0) || !(c.stddev.y > 0.0))
      throw InvalidDistribution("component standard deviations must be positive");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidDistribution("mixture weights sum to " + std::to_string(total) + ", expected 1");
}

ProbabilityMap build_map(std::shared_ptr<const GridSpec> grid,
                         const DistributionSpec& dist, std::uint64_t /*seed*/) {
  dist.validate();
  if (dist.kind == DistributionKind::uniform) return ProbabilityMap::uniform(std::move(grid));

  const double cell_area = grid->stride_x() * grid->stride_y();
  const double uniform_density = dist.uniform_weight / (grid->area_width() * grid->area_height());
  std::vector<double> mass(grid->cell_count(), 0.0);
  for (CellIndex i = 0; i < mass.size(); ++i) {
    const Point p = grid->waypoint(i);
    double density = uniform_density;
    for (const auto& c : dist.components) {
      const double zx = (p.x - c.mean.x) / c.stddev.x;
      const double zy = (p.y - c.mean.y) / c.stddev.y;
      density += c.weight * std::exp(-0.5 * (zx * zx + zy * zy)) /
                 (2.0 * std::numbers::pi * c.stddev.x * c.stddev.y);
    }
    mass[i] = density * cell_area;
  }
  return ProbabilityMap::from_weights(std::move(grid), std::move(mass));
}

CellIndex sample_target(const ProbabilityMap& map, Rng& rng) {
  const double u = uniform01(rng);
  const auto p = map.probs();
  double cumulative = 0.0;
  CellIndex last_positive = 0;
  for (CellIndex i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    cumulative += p[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // u landed in the rounding gap above the final cumulative sum.
  return last_positive;
}

void write_map_csv(std::ostream& out, const ProbabilityMap& map) {
  out << "row,col,p\n";
  const auto& g = map.grid();
  const auto old_precision = out.precision(17);
  for (CellIndex i = 0; i < map.size(); ++i) {
    const auto [r, c] = g.coord(i);
    out << r << ',' << c << ',' << map[i] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace uavsearch
