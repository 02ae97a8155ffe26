#include "pebble/io.hpp"

#include <json.hpp>

namespace pebble {

std::string to_dot(const Graph& g) {
  std::string out = "graph \"" + g.family() + "\" {\n";
  for (VertexId v = 0; v < g.order(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string to_edge_list_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["family"] = g.family();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

Graph graph_from_edge_list_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("invalid edge-list JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("order") ||
      !j["order"].is_number_integer() || !j.contains("edges") ||
      !j["edges"].is_array())
    throw Error("edge-list JSON needs integer \"order\" and array \"edges\"");
  const int order = j["order"].get<int>();
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error("each edge must be a pair of vertex indices");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::string family = j.value("family", std::string{});
  return Graph(order, std::move(edges), std::move(family));
}

}  // namespace pebble
