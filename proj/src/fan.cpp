#include <bsbott/fan.hpp>

namespace bsbott {

namespace {

nlohmann::ordered_json coordinate(const Integer& x) {
  constexpr long long kLimit = 1LL << 53;
  if (x < kLimit && x > -kLimit) return x.convert_to<long long>();
  return x.str();
}

}  // namespace

nlohmann::ordered_json fan_to_json(const Fan& fan) {
  nlohmann::ordered_json rays = nlohmann::ordered_json::object();
  for (Eigen::Index r = 0; r < fan.rays.cols(); ++r) {
    auto v = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < fan.rays.rows(); ++i) v.push_back(coordinate(fan.rays(i, r)));
    rays[fan.label(r)] = std::move(v);
  }
  auto cones = nlohmann::ordered_json::array();
  for (const auto& cone : fan.maximal_cones) {
    auto labels = nlohmann::ordered_json::array();
    for (auto r : cone) labels.push_back(fan.label(r));
    cones.push_back(std::move(labels));
  }
  nlohmann::ordered_json out;
  out["dim"] = fan.dim;
  out["rays"] = std::move(rays);
  out["maximal_cones"] = std::move(cones);
  return out;
}

std::string fan_to_csv(const Fan& fan) {
  std::string out = "label";
  for (Eigen::Index i = 0; i < fan.rays.rows(); ++i) {
    out += fan.rays.rows() == 2 ? (i == 0 ? ",x" : ",y") : ",x" + std::to_string(i + 1);
  }
  out += '\n';
  for (Eigen::Index r = 0; r < fan.rays.cols(); ++r) {
    out += fan.label(r);
    for (Eigen::Index i = 0; i < fan.rays.rows(); ++i) out += "," + fan.rays(i, r).str();
    out += '\n';
  }
  return out;
}

}  // namespace bsbott
