#include "imetric/report.hpp"

#include <cmath>
#include <stdexcept>

namespace imetric {

void GridSpec::validate() const {
  if (c_values.empty()) throw std::invalid_argument("GridSpec: no c values");
  for (double c : c_values)
    if (!(c > 0.0)) throw std::invalid_argument("GridSpec: c values must be positive");
  if (!(t_min > 0.0)) throw std::invalid_argument("GridSpec: t_min must be positive");
  if (!(t_max > t_min)) throw std::invalid_argument("GridSpec: t_max must exceed t_min");
  if (t_max > 700.0) throw std::invalid_argument("GridSpec: t_max above overflow guard 700");
  if (t_samples < 2) throw std::invalid_argument("GridSpec: need at least 2 samples");
}

std::vector<double> GridSpec::t_nodes() const {
  validate();
  std::vector<double> nodes(t_samples);
  if (spacing == Spacing::Log) {
    const double l0 = std::log(t_min), l1 = std::log(t_max);
    for (int i = 0; i < t_samples; ++i)
      nodes[i] = std::exp(l0 + (l1 - l0) * i / (t_samples - 1));
  } else {
    for (int i = 0; i < t_samples; ++i)
      nodes[i] = t_min + (t_max - t_min) * i / (t_samples - 1);
  }
  nodes.front() = t_min;
  nodes.back() = t_max;
  return nodes;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim_id"] = claim_id;
  j["n_checked"] = n_checked;
  j["n_violations"] = n_violations;
  j["max_violation"] = std::isfinite(max_violation) ? max_violation : 0.0;
  if (witness) {
    nlohmann::ordered_json w;
    for (const auto& [name, value] : witness->params) w[name] = value;
    if (!witness->points.empty()) {
      nlohmann::ordered_json pts = nlohmann::ordered_json::array();
      for (const auto& p : witness->points) {
        nlohmann::ordered_json coords = nlohmann::ordered_json::array();
        for (int i = 0; i < p.size(); ++i) coords.push_back(p[i]);
        pts.push_back(coords);
      }
      w["points"] = pts;
    }
    j["witness"] = w;
  }
  j["rng_seed"] = rng_seed;
  return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

}  // namespace imetric
