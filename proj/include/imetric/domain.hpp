#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

namespace imetric {

/// A point of R^n, n >= 2.
using Point = Eigen::VectorXd;

enum class DomainKind { UnitBall, HalfSpace, Polygon };

/// A proper open subdomain of R^n supplying the boundary distance that the
/// intrinsic metrics are built from. Immutable after construction; all
/// queries are pure. Boundary points are outside (open-set convention):
/// a zero boundary distance would be meaningless to the metrics.
class Domain {
 public:
  /// {x : |x| < 1} in R^dim.
  static Domain unit_ball(int dim = 2);
  /// {x : x_n > 0} in R^dim.
  static Domain half_space(int dim = 2);
  /// Simple (non-self-intersecting) closed polygon in R^2, >= 3 vertices.
  static Domain polygon(std::vector<Eigen::Vector2d> vertices);
  /// Reads a polygon as a JSON array of [x, y] vertex pairs.
  static Domain polygon_from_json(const std::filesystem::path& file);

  DomainKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  const std::vector<Eigen::Vector2d>& vertices() const;
  std::string describe() const;

 private:
  Domain(DomainKind kind, int dim) : kind_(kind), dim_(dim) {}
  DomainKind kind_;
  int dim_;
  std::vector<Eigen::Vector2d> vertices_;
};

/// True iff x lies strictly inside dom. Polygon membership is decided by
/// even-odd ray crossing. Throws std::invalid_argument on dimension mismatch.
bool contains(const Domain& dom, const Point& x);

/// Distance from an interior point to the boundary: 1 - |x| for the ball,
/// x_n for the half-space, exact minimum over edge segments for a polygon.
/// Throws std::domain_error if x is not inside dom.
double boundary_distance(const Domain& dom, const Point& x);

/// Axis-aligned box enclosing the domain (or, for the unbounded half-space,
/// a canonical finite slab); used by the rejection samplers.
std::pair<Point, Point> bounding_box(const Domain& dom);

/// Distance from p to the segment [a, b] (projection clamped to the segment).
double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b);

}  // namespace imetric
