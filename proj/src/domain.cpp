#include "imetric/domain.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace imetric {

namespace {

void require_dimension(const Domain& dom, const Point& x, const char* fn) {
  if (x.size() != dom.dimension()) {
    throw std::invalid_argument(std::string(fn) + ": point has dimension " +
                                std::to_string(x.size()) + ", domain expects " +
                                std::to_string(dom.dimension()));
  }
  if (!x.allFinite()) {
    throw std::invalid_argument(std::string(fn) + ": point has non-finite coordinates");
  }
}

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Orientation-based proper-intersection test for open segments.
bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
                        const Eigen::Vector2d& q1, const Eigen::Vector2d& q2) {
  const double d1 = cross2(q2 - q1, p1 - q1);
  const double d2 = cross2(q2 - q1, p2 - q1);
  const double d3 = cross2(p2 - p1, q1 - p1);
  const double d4 = cross2(p2 - p1, q2 - p1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  auto on = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b,
               const Eigen::Vector2d& c) {
    return cross2(b - a, c - a) == 0.0 && c.x() >= std::min(a.x(), b.x()) &&
           c.x() <= std::max(a.x(), b.x()) && c.y() >= std::min(a.y(), b.y()) &&
           c.y() <= std::max(a.y(), b.y());
  };
  return on(p1, p2, q1) || on(p1, p2, q2) || on(q1, q2, p1) || on(q1, q2, p2);
}

void validate_polygon(const std::vector<Eigen::Vector2d>& v) {
  const std::size_t n = v.size();
  if (n < 3) throw std::invalid_argument("polygon: needs at least 3 vertices");
  for (const auto& p : v) {
    if (!p.allFinite()) throw std::invalid_argument("polygon: non-finite vertex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[(i + 1) % n] - v[i]).norm() == 0.0)
      throw std::invalid_argument("polygon: repeated consecutive vertex");
  }
  // Simplicity: no two non-adjacent edges may meet.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        throw std::invalid_argument("polygon: boundary self-intersects");
    }
  }
}

bool polygon_contains(const std::vector<Eigen::Vector2d>& v, const Eigen::Vector2d& p) {
  bool inside = false;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y() > p.y()) != (v[j].y() > p.y())) {
      const double t = (p.y() - v[i].y()) / (v[j].y() - v[i].y());
      if (p.x() < v[i].x() + t * (v[j].x() - v[i].x())) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

Domain Domain::unit_ball(int dim) {
  if (dim < 2) throw std::invalid_argument("unit_ball: dimension must be >= 2");
  return Domain(DomainKind::UnitBall, dim);
}

Domain Domain::half_space(int dim) {
  if (dim < 2) throw std::invalid_argument("half_space: dimension must be >= 2");
  return Domain(DomainKind::HalfSpace, dim);
}

Domain Domain::polygon(std::vector<Eigen::Vector2d> vertices) {
  validate_polygon(vertices);
  Domain d(DomainKind::Polygon, 2);
  d.vertices_ = std::move(vertices);
  return d;
}

Domain Domain::polygon_from_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("polygon_from_json: cannot open " + file.string());
  nlohmann::json j;
  in >> j;
  if (!j.is_array()) throw std::invalid_argument("polygon_from_json: expected an array");
  std::vector<Eigen::Vector2d> verts;
  verts.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("polygon_from_json: vertices must be [x, y] pairs");
    verts.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return polygon(std::move(verts));
}

const std::vector<Eigen::Vector2d>& Domain::vertices() const {
  if (kind_ != DomainKind::Polygon)
    throw std::logic_error("vertices: only polygons carry vertices");
  return vertices_;
}

std::string Domain::describe() const {
  switch (kind_) {
    case DomainKind::UnitBall:
      return "ball" + std::to_string(dim_);
    case DomainKind::HalfSpace:
      return "halfspace" + std::to_string(dim_);
    case DomainKind::Polygon:
      return "polygon" + std::to_string(vertices_.size());
  }
  return "unknown";
}

bool contains(const Domain& dom, const Point& x) {
  require_dimension(dom, x, "contains");
  switch (dom.kind()) {
    case DomainKind::UnitBall:
      return x.norm() < 1.0;
    case DomainKind::HalfSpace:
      return x[x.size() - 1] > 0.0;
    case DomainKind::Polygon:
      return polygon_contains(dom.vertices(), Eigen::Vector2d(x[0], x[1]));
  }
  return false;
}

double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                        const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
  return (p - (a + t * d)).norm();
}

double boundary_distance(const Domain& dom, const Point& x) {
  require_dimension(dom, x, "boundary_distance");
  if (!contains(dom, x)) {
    throw std::domain_error("boundary_distance: point lies outside the domain");
  }
  switch (dom.kind()) {
    case DomainKind::UnitBall:
      return 1.0 - x.norm();
    case DomainKind::HalfSpace:
      return x[x.size() - 1];
    case DomainKind::Polygon: {
      const auto& v = dom.vertices();
      const Eigen::Vector2d p(x[0], x[1]);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        best = std::min(best, segment_distance(p, v[i], v[(i + 1) % n]));
      }
      return best;
    }
  }
  return 0.0;
}

std::pair<Point, Point> bounding_box(const Domain& dom) {
  const int n = dom.dimension();
  Point lo(n), hi(n);
  switch (dom.kind()) {
    case DomainKind::UnitBall:
      lo.setConstant(-1.0);
      hi.setConstant(1.0);
      break;
    case DomainKind::HalfSpace:
      // Canonical finite slab; the metrics are similarity-invariant so the
      // sampled scale is representative.
      lo.setConstant(-2.0);
      hi.setConstant(2.0);
      lo[n - 1] = 0.0;
      hi[n - 1] = 2.0;
      break;
    case DomainKind::Polygon: {
      lo.setConstant(std::numeric_limits<double>::infinity());
      hi.setConstant(-std::numeric_limits<double>::infinity());
      for (const auto& v : dom.vertices()) {
        lo[0] = std::min(lo[0], v.x());
        lo[1] = std::min(lo[1], v.y());
        hi[0] = std::max(hi[0], v.x());
        hi[1] = std::max(hi[1], v.y());
      }
      break;
    }
  }
  return {lo, hi};
}

}  // namespace imetric
