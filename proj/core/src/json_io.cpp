#include "crystalq/json_io.hpp"

#include <stdexcept>

namespace crystalq {

using nlohmann::json;

json to_json(const QSeries& s) {
  json coeffs = json::array();
  for (long e = s.min_exp(); e <= s.trunc(); ++e)
    coeffs.push_back(rat_to_string(s.coeff(e)));
  return json{{"min_exp", s.min_exp()}, {"trunc", s.trunc()},
              {"coeffs", std::move(coeffs)}};
}

QSeries qseries_from_json(const json& j) {
  long min_exp = j.at("min_exp").get<long>();
  long trunc = j.at("trunc").get<long>();
  std::vector<Rat> coeffs;
  for (const auto& c : j.at("coeffs"))
    coeffs.push_back(rat_from_string(c.get<std::string>()));
  return QSeries(min_exp, trunc, std::move(coeffs));
}

json to_json(const PlanePartition& pi) {
  json out{{"heights", pi.heights}};
  if (pi.has_legs()) {
    json legs = json::array();
    for (const auto& leg : *pi.legs) legs.push_back(leg.parts);
    out["legs"] = std::move(legs);
  }
  return out;
}

PlanePartition plane_partition_from_json(const json& j) {
  auto heights = j.at("heights").get<std::vector<std::vector<long>>>();
  if (!j.contains("legs")) return PlanePartition(std::move(heights));
  const auto& legs = j.at("legs");
  if (legs.size() != 3)
    throw std::invalid_argument("PlanePartition JSON: legs must have 3 entries");
  return PlanePartition::with_legs(
      Partition2D(legs[0].get<std::vector<long>>()),
      Partition2D(legs[1].get<std::vector<long>>()),
      Partition2D(legs[2].get<std::vector<long>>()), std::move(heights));
}

json to_json(const FactoredWeight& w) {
  json factors = json::array();
  for (const auto& [a, e] : w.exponents)
    factors.push_back(json{{"a", a}, {"e", e}});
  return json{{"chi", w.chi}, {"factors", std::move(factors)}};
}

FactoredWeight factored_weight_from_json(const json& j) {
  FactoredWeight w;
  w.chi = j.at("chi").get<long>();
  for (const auto& f : j.at("factors")) {
    auto a = f.at("a").get<std::vector<long>>();
    if (a.size() != 3)
      throw std::invalid_argument("FactoredWeight JSON: a must have 3 entries");
    w.exponents.emplace(LatticeVector{a[0], a[1], a[2]}, f.at("e").get<long>());
  }
  return w;
}

}  // namespace crystalq
