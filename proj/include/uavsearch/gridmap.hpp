#ifndef UAVSEARCH_GRIDMAP_HPP
#define UAVSEARCH_GRIDMAP_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "uavsearch/rng.hpp"

namespace uavsearch {

using CellIndex = std::size_t;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

/// Downward-looking camera. Angles are full opening angles in radians.
struct CameraSpec {
  double altitude = 0.0;
  double vertical_angle = 0.0;
  double horizontal_angle = 0.0;

  void validate() const;
};

/// Ground rectangle imaged by the camera, in meters.
struct Footprint {
  double width = 0.0;
  double height = 0.0;
};

Footprint footprint(const CameraSpec& camera);

struct CellCoord {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

enum class Corner { bottom_left, bottom_right, top_left, top_right };

/// Rectangular area decomposition. Cells are indexed row-major with row 0
/// at the bottom edge and column 0 at the left edge; waypoint k is the
/// center of cell k. Adjacency is 4-connected.
class GridSpec {
 public:
  /// Tiles the area with cell_width x cell_height rectangles overlapping by
  /// the given fractions. The last row/column may overhang the boundary.
  static GridSpec from_cells(double area_width, double area_height,
                             double cell_width, double cell_height,
                             double overlap_x = 0.0, double overlap_y = 0.0);

  /// rows x cols grid of 1 m cells without overlap.
  static GridSpec unit(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t cell_count() const { return rows_ * cols_; }

  double area_width() const { return area_width_; }
  double area_height() const { return area_height_; }
  double cell_width() const { return cell_width_; }
  double cell_height() const { return cell_height_; }
  double overlap_x() const { return overlap_x_; }
  double overlap_y() const { return overlap_y_; }
  double stride_x() const { return cell_width_ * (1.0 - overlap_x_); }
  double stride_y() const { return cell_height_ * (1.0 - overlap_y_); }

  CellIndex index(std::size_t row, std::size_t col) const { return row * cols_ + col; }
  CellIndex index(CellCoord c) const { return index(c.row, c.col); }
  CellCoord coord(CellIndex i) const { return {i / cols_, i % cols_}; }
  bool contains(CellIndex i) const { return i < cell_count(); }

  Point waypoint(CellIndex i) const;
  const std::vector<Point>& waypoints() const { return waypoints_; }

  CellIndex corner(Corner c) const;

  /// In-bounds 4-neighbors in ascending index order (down, left, right, up).
  std::vector<CellIndex> neighbors(CellIndex i) const;

  /// Manhattan distance in cells.
  std::size_t grid_distance(CellIndex a, CellIndex b) const;

  /// One step along a shortest grid path: columns first, then rows.
  CellIndex step_toward(CellIndex from, CellIndex to) const;

 private:
  GridSpec() = default;

  double area_width_ = 0.0;
  double area_height_ = 0.0;
  double cell_width_ = 0.0;
  double cell_height_ = 0.0;
  double overlap_x_ = 0.0;
  double overlap_y_ = 0.0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Point> waypoints_;
};

/// Cell size from the camera footprint, then tiling as in GridSpec::from_cells.
GridSpec decompose_area(double area_width, double area_height,
                        const CameraSpec& camera, double overlap_x,
                        double overlap_y);

/// Target-presence probabilities over the cells of a grid.
///
/// Every value lies in [0, 1] and the vector sums to one. All mutating
/// operations renormalize before returning, so the invariant holds after
/// each call.
class ProbabilityMap {
 public:
  /// `probs` must already sum to one within 1e-9; it is renormalized exactly.
  ProbabilityMap(std::shared_ptr<const GridSpec> grid, std::vector<double> probs);

  /// Arbitrary non-negative weights, normalized to a distribution.
  static ProbabilityMap from_weights(std::shared_ptr<const GridSpec> grid,
                                     std::vector<double> weights);
  static ProbabilityMap uniform(std::shared_ptr<const GridSpec> grid);

  const GridSpec& grid() const { return *grid_; }
  const std::shared_ptr<const GridSpec>& grid_ptr() const { return grid_; }

  std::size_t size() const { return probs_.size(); }
  double operator[](CellIndex i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  /// Replaces each p_i with fn(i, p_i) and renormalizes. The resulting
  /// weights must be finite, non-negative, and not all zero.
  template <class Fn>
  void reweight(Fn&& fn) {
    for (std::size_t i = 0; i < probs_.size(); ++i) probs_[i] = fn(i, probs_[i]);
    normalize();
  }

  CellIndex argmax() const;

 private:
  void normalize();

  std::shared_ptr<const GridSpec> grid_;
  std::vector<double> probs_;
};

enum class DistributionKind { uniform, gaussian_mixture, gaussian_uniform_mixture };

struct GaussianComponent {
  double weight = 0.0;
  Point mean;
  Point stddev;  // per-axis standard deviation, meters
};

/// Continuous prior over the area: a mixture of axis-aligned Gaussians,
/// optionally blended with a uniform density over the area.
struct DistributionSpec {
  DistributionKind kind = DistributionKind::uniform;
  std::vector<GaussianComponent> components;
  double uniform_weight = 0.0;

  void validate() const;
};

/// Cell mass is the mixture density at the cell center times the cell's
/// stride area, renormalized to sum to one. `seed` is unused by the
/// current distribution kinds.
ProbabilityMap build_map(std::shared_ptr<const GridSpec> grid,
                         const DistributionSpec& dist, std::uint64_t seed = 0);

/// Inverse-CDF draw of a cell index.
CellIndex sample_target(const ProbabilityMap& map, Rng& rng);

/// `row,col,p` rows with a header line.
void write_map_csv(std::ostream& out, const ProbabilityMap& map);

}  // namespace uavsearch

#endif  // UAVSEARCH_GRIDMAP_HPP
