#include "imetric/sampling.hpp"

#include <stdexcept>

namespace imetric {

Point sample_point(const Domain& dom, Rng& rng) {
  const auto [lo, hi] = bounding_box(dom);
  Point p(dom.dimension());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 0; i < p.size(); ++i) p[i] = rng.uniform(lo[i], hi[i]);
    if (contains(dom, p)) return p;
  }
  throw std::runtime_error("sample_point: rejection sampling failed (degenerate domain?)");
}

Eigen::Vector2d sample_disk(Rng& rng, double radius) {
  for (;;) {
    const Eigen::Vector2d z(rng.uniform(-radius, radius), rng.uniform(-radius, radius));
    if (z.norm() < radius) return z;
  }
}

Eigen::Vector2d sample_disk_near_boundary(Rng& rng) {
  const bool near = rng.uniform01() < 0.25;
  for (;;) {
    const Eigen::Vector2d z(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const double n = z.norm();
    if (near ? (n > 0.9 && n < 1.0) : n < 1.0) return z;
  }
}

}  // namespace imetric
