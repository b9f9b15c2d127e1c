#pragma once
// JSON and DOT serialization for incidence systems and correlations.
//
// Geometry JSON:
//   {"types":[...],
//    "elements":[{"id":0,"type":"P","label":"..."}, ...],
//    "incidences":[[a,b], ...]}        ids dense from 0, lower id first.
// Correlation JSON:
//   {"perm":[...], "type_perm":[...]}

#include <sstream>
#include <string>

#include <json.hpp>

#include "trigeom/incidence.hpp"

namespace trigeom {

inline nlohmann::json geometry_to_json(const IncidenceSystem& sys) {
  nlohmann::json j;
  j["types"] = sys.types;
  nlohmann::json elems = nlohmann::json::array();
  for (int i = 0; i < sys.size(); ++i)
    elems.push_back({{"id", i},
                     {"type", sys.types[sys.type_of[i]]},
                     {"label", sys.labels[i]}});
  j["elements"] = std::move(elems);
  nlohmann::json inc = nlohmann::json::array();
  for (int a = 0; a < sys.size(); ++a)
    for (int b : sys.adj[a])
      if (a < b) inc.push_back({a, b});
  j["incidences"] = std::move(inc);
  return j;
}

inline IncidenceSystem geometry_from_json(const nlohmann::json& j) {
  IncidenceSystem sys;
  for (const auto& t : j.at("types")) sys.add_type(t.get<std::string>());
  const auto& elems = j.at("elements");
  for (size_t i = 0; i < elems.size(); ++i) {
    const auto& e = elems[i];
    if (e.at("id").get<int>() != static_cast<int>(i))
      throw std::invalid_argument("geometry json: element ids must be dense from 0");
    std::string tname = e.at("type").get<std::string>();
    int t = -1;
    for (int k = 0; k < sys.rank(); ++k)
      if (sys.types[k] == tname) t = k;
    if (t < 0) throw std::invalid_argument("geometry json: unknown type " + tname);
    sys.add_element(t, e.at("label").get<std::string>());
  }
  for (const auto& pair : j.at("incidences")) {
    if (pair.size() != 2)
      throw std::invalid_argument("geometry json: incidence entries are pairs");
    int a = pair[0].get<int>(), b = pair[1].get<int>();
    if (a >= b)
      throw std::invalid_argument("geometry json: incidence pairs need lower id first");
    sys.add_incidence(a, b);
  }
  auto bad = validate(sys);
  if (!bad.empty())
    throw std::invalid_argument("geometry json: " + bad.front());
  return sys;
}

// One fill color per type, cycled if the rank exceeds the palette.
inline std::string geometry_to_dot(const IncidenceSystem& sys,
                                   const std::string& name = "G") {
  static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a",
                                  "#984ea3", "#ff7f00", "#a65628"};
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [style=filled];\n";
  for (int i = 0; i < sys.size(); ++i)
    os << "  n" << i << " [label=\"" << sys.labels[i] << "\", fillcolor=\""
       << palette[sys.type_of[i] % 6] << "\"];\n";
  for (int a = 0; a < sys.size(); ++a)
    for (int b : sys.adj[a])
      if (a < b) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace trigeom
