#include "wgdr/element_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wgdr/errors.hpp"

namespace wgdr {

PolyElement parse_element_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("element file is not valid JSON: ") + e.what());
  }
  if (!doc.contains("vertices") || !doc.contains("faces"))
    throw Error("element file needs `vertices` and `faces` keys");

  std::vector<Vec3> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 3) throw Error("each vertex must be an [x, y, z] array");
    vertices.emplace_back(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
  }

  std::vector<std::vector<int>> loops;
  for (const auto& loop : doc["faces"]) {
    if (!loop.is_array()) throw Error("each face must be an array of vertex indices");
    loops.push_back(loop.get<std::vector<int>>());
  }

  return PolyElement::from_vertices_faces(std::move(vertices), std::move(loops));
}

PolyElement load_element(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open element file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_element_json(buffer.str());
}

std::string element_to_json(const PolyElement& el) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const Vec3& v : el.vertices()) doc["vertices"].push_back({v.x(), v.y(), v.z()});
  doc["faces"] = nlohmann::ordered_json::array();
  for (const FaceGeom& f : el.faces()) doc["faces"].push_back(f.loop);
  return doc.dump(2) + "\n";
}

void save_element(const PolyElement& el, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write element file: " + path);
  out << element_to_json(el);
}

}  // namespace wgdr
