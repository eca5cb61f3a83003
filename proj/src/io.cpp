#include "lightcolor/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace lightcolor {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key) {
  if (!obj.is_object()) throw InvalidInput(std::string("expected an object holding \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(std::string("missing key \"") + key + "\"");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw InvalidInput("unexpected key \"" + key + "\"");
  }
}

Vertex vertex_value(const json& j) {
  if (!j.is_number_integer()) throw InvalidInput("vertex ids must be integers");
  const auto value = j.get<std::int64_t>();
  if (value < 0 || value > std::numeric_limits<Vertex>::max()) throw InvalidInput("vertex id out of range");
  return static_cast<Vertex>(value);
}

std::pair<Vertex, Vertex> vertex_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("edges and arcs must be [a,b] pairs");
  return {vertex_value(j[0]), vertex_value(j[1])};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Coloring::Color> color_values(const json& arr) {
  if (!arr.is_array()) throw InvalidInput("colors must be an array");
  std::vector<Coloring::Color> out;
  out.reserve(arr.size());
  for (const json& c : arr) {
    if (!c.is_number_integer()) throw InvalidInput("colors must be integers");
    const auto value = c.get<std::int64_t>();
    if (value < 0 || value > std::numeric_limits<Coloring::Color>::max()) throw InvalidInput("color out of range");
    out.push_back(static_cast<Coloring::Color>(value));
  }
  return out;
}

const char* kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kType1: return "1";
    case EdgeKind::kType2: return "2";
    case EdgeKind::kType3: return "3";
    case EdgeKind::kType4: return "4";
  }
  return "?";
}

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kFirstFit: return "first-fit";
    case Scheme::kMatchingOnEdge: return "matching-edge";
    case Scheme::kMatchingOnSibling: return "matching-sibling";
  }
  return "?";
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : inst.tree().edges) edges.push_back({u, v});
  ordered_json subtrees = ordered_json::array();
  for (const RootedSubtree& s : inst.subtrees()) {
    ordered_json arcs = ordered_json::array();
    for (const Arc& a : s.arcs) arcs.push_back({a.tail, a.head});
    ordered_json entry;
    entry["root"] = s.root;
    entry["arcs"] = std::move(arcs);
    subtrees.push_back(std::move(entry));
  }
  ordered_json tree;
  tree["vertices"] = inst.tree().vertex_count;
  tree["edges"] = std::move(edges);
  ordered_json doc;
  doc["tree"] = std::move(tree);
  doc["subtrees"] = std::move(subtrees);
  return to_line(doc);
}

Instance instance_from_json(std::string_view text) {
  const json doc = parse(text);
  const json& tree_json = member(doc, "tree");
  const json& subtrees_json = member(doc, "subtrees");
  only_keys(doc, {"tree", "subtrees"});
  only_keys(tree_json, {"vertices", "edges"});

  HostTree tree;
  tree.vertex_count = vertex_value(member(tree_json, "vertices"));
  const json& edges = member(tree_json, "edges");
  if (!edges.is_array()) throw InvalidInput("\"edges\" must be an array");
  for (const json& e : edges) tree.edges.push_back(vertex_pair(e));

  if (!subtrees_json.is_array()) throw InvalidInput("\"subtrees\" must be an array");
  std::vector<RootedSubtree> subtrees;
  for (const json& s : subtrees_json) {
    RootedSubtree subtree;
    subtree.root = vertex_value(member(s, "root"));
    only_keys(s, {"root", "arcs"});
    const json& arcs = member(s, "arcs");
    if (!arcs.is_array()) throw InvalidInput("\"arcs\" must be an array");
    for (const json& a : arcs) {
      auto [t, h] = vertex_pair(a);
      subtree.arcs.push_back({t, h});
    }
    subtrees.push_back(std::move(subtree));
  }
  return Instance(std::move(tree), std::move(subtrees));
}

ordered_json coloring_json(const Coloring& c) {
  ordered_json doc;
  doc["colors"] = c.values();
  doc["num_colors"] = c.colors_used();
  return doc;
}

ordered_json padded_coloring_json(const Coloring& padded, const Coloring& original) {
  ordered_json doc = coloring_json(padded);
  doc["original_colors"] = original.values();
  doc["original_num_colors"] = original.colors_used();
  return doc;
}

ordered_json trace_json(const std::vector<RoundState>& trace) {
  ordered_json rounds = ordered_json::array();
  for (const RoundState& r : trace) {
    ordered_json entry;
    entry["round"] = r.round;
    entry["edge"] = {r.edge.u, r.edge.v};
    entry["type"] = kind_name(r.type.kind);
    if (r.type.kind == EdgeKind::kType4) {
      entry["w"] = r.type.w;
      entry["x"] = r.type.x;
    }
    entry["newly_colored"] = r.newly_colored;
    entry["colors_before"] = r.colors_used_before;
    entry["colors_after"] = r.colors_used_after;
    entry["scheme"] = scheme_name(r.scheme);
    if (r.scheme1_colors) entry["scheme1_colors"] = *r.scheme1_colors;
    if (r.scheme2_colors) entry["scheme2_colors"] = *r.scheme2_colors;
    rounds.push_back(std::move(entry));
  }
  return rounds;
}

Coloring coloring_from_json(std::string_view text, std::size_t expected_size) {
  const json doc = parse(text);
  if (!doc.is_object()) throw InvalidInput("coloring must be a JSON object");
  std::vector<Coloring::Color> colors = color_values(member(doc, "colors"));
  if (colors.size() == expected_size) return Coloring(std::move(colors));
  if (doc.contains("original_colors")) {
    std::vector<Coloring::Color> original = color_values(doc["original_colors"]);
    if (original.size() == expected_size) return Coloring(std::move(original));
  }
  throw InvalidInput("coloring does not match the instance's " + std::to_string(expected_size) + " subtrees");
}

std::string to_line(const ordered_json& doc) { return doc.dump() + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << contents;
}

}  // namespace lightcolor
