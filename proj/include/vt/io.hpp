#pragma once

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vt/error.hpp"
#include "vt/routing.hpp"
#include "vt/torus.hpp"

namespace vt {

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_failure, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(Errc::io_failure, "write to " + path + " failed");
}

/// {params:{r,s}, vertices:[[x,y]...], edges:[{u,v,kind}...]}, vertices
/// row-major and edges in canonical order.
inline std::string export_json(const VtGraph& g) {
  nlohmann::ordered_json doc;
  doc["params"] = {{"r", g.r()}, {"s", g.s()}};
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (const Vertex& v : g.vertices()) vertices.push_back({v.x, v.y});
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::ordered_json item;
    item["u"] = {e.u.x, e.u.y};
    item["v"] = {e.v.x, e.v.y};
    item["kind"] = to_string(e.kind);
    edges.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

inline std::string export_dot(const VtGraph& g) {
  std::ostringstream out;
  out << "graph VT_" << g.r() << "_" << g.s() << " {\n";
  for (const Vertex& v : g.vertices()) out << "  \"" << to_string(v) << "\";\n";
  for (const Edge& e : g.edges()) {
    out << "  \"" << to_string(e.u) << "\" -- \"" << to_string(e.v) << "\" [kind=" << to_string(e.kind)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

/// Reads back the edge lines written by export_dot.
inline std::vector<Edge> parse_dot_edges(const std::string& dot) {
  static const std::regex line(R"re("(\d+),(\d+)"\s*--\s*"(\d+),(\d+)"\s*\[kind=(acute|obtuse)\])re");
  std::vector<Edge> edges;
  for (std::sregex_iterator it(dot.begin(), dot.end(), line), end; it != end; ++it) {
    const auto& m = *it;
    edges.push_back({{std::stoi(m[1]), std::stoi(m[2])},
                     {std::stoi(m[3]), std::stoi(m[4])},
                     m[5] == "acute" ? EdgeKind::acute : EdgeKind::obtuse});
  }
  return edges;
}

inline std::string export_profile_csv(const VtGraph& g, const CongestionProfile& profile) {
  std::ostringstream out;
  out << "u_x,u_y,v_x,v_y,kind,load\n";
  for (std::size_t id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    out << e.u.x << ',' << e.u.y << ',' << e.v.x << ',' << e.v.y << ',' << to_string(e.kind) << ','
        << profile.per_edge[id] << '\n';
  }
  return out.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace vt
