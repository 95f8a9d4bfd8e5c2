#pragma once

#include <json.hpp>

#include "segre/chow.hpp"

namespace segre {

inline long long to_int64(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw ValueError("coefficient exceeds the 64-bit JSON range");
  }
  return static_cast<long long>(v);
}

inline nlohmann::json class_to_json(const ChowClass& c) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& v : c.coeffs()) coeffs.push_back(to_int64(v));
  return {{"ambient", c.ambient()}, {"coeffs", coeffs}};
}

inline ChowClass class_from_json(const nlohmann::json& j) {
  int n = j.at("ambient").get<int>();
  std::vector<BigInt> coeffs;
  for (const auto& v : j.at("coeffs")) coeffs.emplace_back(v.get<long long>());
  return ChowClass(n, std::move(coeffs));
}

inline nlohmann::json bigints_to_json(const std::vector<BigInt>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const BigInt& v : vs) out.push_back(to_int64(v));
  return out;
}

}  // namespace segre
