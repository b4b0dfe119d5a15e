#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "logmot/expr.hpp"
#include "logmot/fan.hpp"
#include "logmot/snc.hpp"

namespace logmot {

using nlohmann::json;

namespace io_detail {

inline long long require_int(const json& j, const std::string& where) {
  // Integers must be bit-exact; floating point input is rejected outright.
  if (!j.is_number_integer())
    throw parse_failure(where + " must be an integer (floats are not accepted)");
  return j.get<long long>();
}

inline const json& require_field(const json& j, const std::string& key,
                                 const std::string& where) {
  if (!j.contains(key))
    throw parse_failure(where + " is missing required field \"" + key + "\"");
  return j.at(key);
}

}  // namespace io_detail

// Fan format: {"dim": n, "rays": [[ints]], "cones": [[ray indices]]}.
// Listing maximal cones suffices; validation closes under faces.
inline FanData fan_data_from_json(const json& j) {
  if (!j.is_object()) throw parse_failure("fan file must be a JSON object");
  FanData data;
  data.dim = static_cast<int>(
      io_detail::require_int(io_detail::require_field(j, "dim", "fan"), "\"dim\""));
  for (const json& ray : io_detail::require_field(j, "rays", "fan")) {
    RayVec r;
    for (const json& v : ray) r.push_back(io_detail::require_int(v, "ray entry"));
    data.rays.push_back(std::move(r));
  }
  for (const json& cone : io_detail::require_field(j, "cones", "fan")) {
    Cone c;
    for (const json& v : cone)
      c.push_back(static_cast<int>(io_detail::require_int(v, "cone entry")));
    data.cones.push_back(std::move(c));
  }
  return data;
}

inline json fan_to_json(const Fan& fan) {
  json j;
  j["dim"] = fan.ambient_dim();
  j["rays"] = json::array();
  for (const RayVec& r : fan.rays()) j["rays"].push_back(r);
  j["cones"] = json::array();
  for (const Cone& c : fan.maximal_cones())
    if (!c.empty()) j["cones"].push_back(c);
  return j;
}

// Symbol declarations: [{"name": .., "e": "<u,v expression>", "dim": ..,
// "smooth_projective": bool}].
inline void declare_symbols_from_json(const json& list, SymbolTable& table) {
  if (!list.is_array()) throw parse_failure("\"symbols\" must be an array");
  for (const json& s : list) {
    std::string name =
        io_detail::require_field(s, "name", "symbol").get<std::string>();
    EPolynomial e =
        parse_epoly(io_detail::require_field(s, "e", "symbol").get<std::string>());
    long long dim = io_detail::require_int(
        io_detail::require_field(s, "dim", "symbol"), "symbol \"dim\"");
    if (dim < 0) throw parse_failure("symbol dimension must be nonnegative");
    bool sp = s.value("smooth_projective", false);
    table.declare(name, std::move(e), static_cast<unsigned>(dim), sp);
  }
}

// S.n.c. format: {"dim": n, "components": [names],
//                 "strata": {"name,name": "<class expression>"},
//                 "closed_strata": {...}, "symbols": [...]}.
// Subset keys are comma-separated component names; "" is the interior.
// Either open strata ("strata") or "closed_strata" may be given; closed
// strata are converted by inclusion-exclusion.
inline SncSpec snc_from_json(const json& j, std::shared_ptr<SymbolTable> table) {
  if (!j.is_object()) throw parse_failure("s.n.c. file must be a JSON object");
  SncSpec spec;
  spec.dim = static_cast<int>(io_detail::require_int(
      io_detail::require_field(j, "dim", "s.n.c. spec"), "\"dim\""));
  for (const json& name : io_detail::require_field(j, "components", "s.n.c. spec"))
    spec.components.push_back(name.get<std::string>());

  if (j.contains("symbols")) declare_symbols_from_json(j.at("symbols"), *table);

  auto parse_subset = [&spec](const std::string& key) {
    ComponentSet set;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      size_t a = part.find_first_not_of(" \t");
      size_t b = part.find_last_not_of(" \t");
      if (a == std::string::npos) continue;
      part = part.substr(a, b - a + 1);
      auto it = std::find(spec.components.begin(), spec.components.end(), part);
      if (it == spec.components.end())
        throw parse_failure("stratum key names unknown component '" + part + "'");
      set.push_back(static_cast<int>(it - spec.components.begin()));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw parse_failure("stratum key lists a component twice");
    return set;
  };

  auto read_strata = [&](const json& obj,
                         std::map<ComponentSet, MotiveClass>& target) {
    if (!obj.is_object()) throw parse_failure("strata must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
      ComponentSet set = parse_subset(key);
      if (target.count(set))
        throw parse_failure("stratum subset {" + key + "} given twice");
      target.emplace(std::move(set), parse_motive(value.get<std::string>(), table));
    }
  };

  if (j.contains("strata")) read_strata(j.at("strata"), spec.open_strata);
  if (j.contains("closed_strata"))
    read_strata(j.at("closed_strata"), spec.closed_strata);
  if (!spec.has_open() && !spec.has_closed())
    throw parse_failure("s.n.c. spec needs \"strata\" or \"closed_strata\"");
  if (spec.has_closed()) spec = strata_open_from_closed(std::move(spec));
  return spec;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_failure("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw parse_failure(std::string("invalid JSON in '") + path + "': " + err.what());
  }
  return j;
}

}  // namespace logmot
