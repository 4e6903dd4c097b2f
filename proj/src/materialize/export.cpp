#include <map>
#include <sstream>

#include "geoforge/error.hpp"
#include "geoforge/materialize.hpp"

namespace geoforge {
namespace {

const char* palette(std::uint32_t t) {
  static const char* colors[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"};
  return colors[t % 8];
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Geometry& geo) {
  std::ostringstream os;
  os << "graph geometry {\n";
  for (std::uint32_t e = 0; e < geo.size(); ++e)
    os << "  n" << e << " [label=" << quoted(geo.names[e]) << ", type=" << quoted(geo.types[geo.type_of[e]])
       << ", color=" << palette(geo.type_of[e]) << "];\n";
  for (std::uint32_t e = 0; e < geo.size(); ++e)
    for (auto f : geo.adjacency[e])
      if (e < f) os << "  n" << e << " -- n" << f << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const Geometry& geo) {
  nlohmann::ordered_json doc;
  doc["types"] = geo.types;
  doc["elements"] = nlohmann::ordered_json::array();
  for (std::uint32_t e = 0; e < geo.size(); ++e)
    doc["elements"].push_back({{"id", e}, {"type", geo.types[geo.type_of[e]]}, {"name", geo.names[e]}});
  doc["incidences"] = nlohmann::ordered_json::array();
  for (std::uint32_t e = 0; e < geo.size(); ++e)
    for (auto f : geo.adjacency[e])
      if (e < f) doc["incidences"].push_back({e, f});
  return doc.dump() + "\n";
}

Geometry import_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("geometry json: ") + e.what());
  }
  try {
    Geometry geo;
    std::map<std::string, std::uint32_t> type_index;
    for (const auto& t : doc.at("types")) {
      auto label = t.get<std::string>();
      if (!type_index.emplace(label, static_cast<std::uint32_t>(geo.types.size())).second)
        fail(ErrorCode::TypeLabelCollision, "type label '" + label + "' appears twice");
      geo.types.push_back(label);
    }
    std::map<std::int64_t, const nlohmann::json*> by_id;
    for (const auto& e : doc.at("elements"))
      if (!by_id.emplace(e.at("id").get<std::int64_t>(), &e).second)
        fail(ErrorCode::ParseError, "duplicate element id " + e.at("id").dump());
    std::map<std::int64_t, std::uint32_t> position;
    for (const auto& [id, e] : by_id) {
      auto type = e->at("type").get<std::string>();
      auto it = type_index.find(type);
      if (it == type_index.end()) fail(ErrorCode::UnknownType, "element " + std::to_string(id) + " has unknown type " + type);
      std::string name = e->contains("name") ? e->at("name").get<std::string>() : std::to_string(id);
      position[id] = geo.add(it->second, name);
    }
    for (const auto& pair : doc.at("incidences")) {
      auto a = pair.at(0).get<std::int64_t>();
      auto b = pair.at(1).get<std::int64_t>();
      if (!position.count(a) || !position.count(b))
        fail(ErrorCode::UnresolvedReference, "incidence " + pair.dump() + " names an unknown element");
      geo.connect(position[a], position[b]);
    }
    geo.finish();
    return geo;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("geometry json: ") + e.what());
  }
}

}  // namespace geoforge
