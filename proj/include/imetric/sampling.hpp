#pragma once

#include <cstdint>
#include <random>

#include "imetric/domain.hpp"

namespace imetric {

/// Seeded generator producing uniform doubles directly from the 64-bit
/// engine output. std::uniform_real_distribution is implementation-defined,
/// which would break byte-identical report reproduction across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

 private:
  std::mt19937_64 gen_;
};

/// Uniform point of dom, by rejection from its bounding box.
Point sample_point(const Domain& dom, Rng& rng);

/// Point of the unit disk. A 25% quota is drawn conditioned on |z| > 0.9,
/// where the distortion bounds are loosest.
Eigen::Vector2d sample_disk_near_boundary(Rng& rng);

/// Uniform point of the disk of radius `radius` centred at the origin.
Eigen::Vector2d sample_disk(Rng& rng, double radius = 1.0);

}  // namespace imetric
