#pragma once

// JSON form of Region: {"type": "<tag>", ...params}, UnionOf nests via "parts".
// Points are two-element arrays [t, x]. Field names are documented in docs/regions.md.

#include <nlohmann/json.hpp>

#include "regions.hpp"

namespace lightcone {

using json = nlohmann::json;

namespace detail {

inline RealPoint2 point_from_json(const json& j, const char* key, bool optional = false) {
  if (!j.contains(key)) {
    require(optional, ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
    return {};
  }
  const json& v = j.at(key);
  require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(), ErrorCode::InvalidArgument,
          std::string("field '") + key + "' must be [t, x]");
  return {v[0].get<double>(), v[1].get<double>()};
}

inline double number_from_json(const json& j, const char* key) {
  require(j.contains(key) && j.at(key).is_number(), ErrorCode::InvalidArgument,
          std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

inline json point_to_json(const RealPoint2& p) { return json::array({p.t, p.x}); }

}  // namespace detail

inline Region region_from_json(const json& j) {
  using namespace detail;
  require(j.is_object() && j.contains("type") && j.at("type").is_string(), ErrorCode::InvalidArgument,
          "region must be an object with a string 'type'");
  const std::string type = j.at("type").get<std::string>();
  if (type == "ForwardCone") return ForwardCone{point_from_json(j, "apex", true)};
  if (type == "BackwardCone") return BackwardCone{point_from_json(j, "apex", true)};
  if (type == "MuCone") return MuCone{number_from_json(j, "mu"), point_from_json(j, "apex", true)};
  if (type == "DoubleCone") return DoubleCone{point_from_json(j, "a"), point_from_json(j, "b")};
  if (type == "SpacelikeComplementOfDoubleCone")
    return SpacelikeComplementOfDoubleCone{point_from_json(j, "a"), point_from_json(j, "b")};
  if (type == "SpacelikeSet") return SpacelikeSet{};
  if (type == "HyperboloidShell") return HyperboloidShell{number_from_json(j, "m1"), number_from_json(j, "m2")};
  if (type == "Wedge") return Wedge{point_from_json(j, "shift", true)};
  if (type == "ShellCap") return ShellCap{number_from_json(j, "m")};
  if (type == "UnionOf") {
    require(j.contains("parts") && j.at("parts").is_array(), ErrorCode::InvalidArgument, "UnionOf needs 'parts' array");
    UnionOf u;
    for (const auto& part : j.at("parts")) u.parts.push_back(region_from_json(part));
    return u;
  }
  fail(ErrorCode::InvalidArgument, "unknown region type '" + type + "'");
}

inline Region region_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidArgument, std::string("region JSON: ") + e.what());
  }
  return region_from_json(j);
}

inline json region_to_json(const Region& r) {
  using namespace detail;
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ForwardCone>) return {{"type", "ForwardCone"}, {"apex", point_to_json(s.apex)}};
        else if constexpr (std::is_same_v<S, BackwardCone>)
          return {{"type", "BackwardCone"}, {"apex", point_to_json(s.apex)}};
        else if constexpr (std::is_same_v<S, MuCone>)
          return {{"type", "MuCone"}, {"mu", s.mu}, {"apex", point_to_json(s.apex)}};
        else if constexpr (std::is_same_v<S, DoubleCone>)
          return {{"type", "DoubleCone"}, {"a", point_to_json(s.a)}, {"b", point_to_json(s.b)}};
        else if constexpr (std::is_same_v<S, SpacelikeComplementOfDoubleCone>)
          return {{"type", "SpacelikeComplementOfDoubleCone"}, {"a", point_to_json(s.a)}, {"b", point_to_json(s.b)}};
        else if constexpr (std::is_same_v<S, SpacelikeSet>) return {{"type", "SpacelikeSet"}};
        else if constexpr (std::is_same_v<S, HyperboloidShell>)
          return {{"type", "HyperboloidShell"}, {"m1", s.m1}, {"m2", s.m2}};
        else if constexpr (std::is_same_v<S, Wedge>) return {{"type", "Wedge"}, {"shift", point_to_json(s.shift)}};
        else if constexpr (std::is_same_v<S, ShellCap>) return {{"type", "ShellCap"}, {"m", s.m}};
        else {
          json parts = json::array();
          for (const auto& p : s.parts) parts.push_back(region_to_json(p));
          return {{"type", "UnionOf"}, {"parts", parts}};
        }
      },
      r.shape);
}

}  // namespace lightcone
