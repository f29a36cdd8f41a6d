#include "p7c/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "p7c/error.hpp"

namespace p7c {

namespace {

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line) + ": " + what);
}

bool blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == 'c';
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long declared = -1;
  long seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "p") {
      std::string kind;
      if (n >= 0) fail_at(line_no, "second header");
      if (!(ss >> kind >> n >> declared) || (kind != "edge" && kind != "col"))
        fail_at(line_no, "expected 'p edge <n> <m>'");
      if (n < 0 || n > kMaxVertices || declared < 0) fail_at(line_no, "header out of range");
      g = Graph(n);
    } else if (tag == "e") {
      if (n < 0) fail_at(line_no, "edge before header");
      long u = 0;
      long v = 0;
      if (!(ss >> u >> v)) fail_at(line_no, "expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > n || v > n) fail_at(line_no, "vertex id out of range");
      if (u == v) fail_at(line_no, "self-loop");
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      ++seen;
    } else {
      fail_at(line_no, "unknown line type '" + tag + "'");
    }
    std::string rest;
    if (ss >> rest) fail_at(line_no, "trailing tokens");
  }
  if (n < 0) throw InvalidInput("missing 'p edge' header");
  if (seen != declared)
    throw InvalidInput("header declares " + std::to_string(declared) + " edges, found " +
                       std::to_string(seen));
  return g;
}

Graph parse_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
      throw InvalidInput("JSON graph needs 'n' and 'edges'");
    int n = doc.at("n").get<int>();
    if (n < 0 || n > kMaxVertices) throw InvalidInput("'n' out of range");
    Graph g(n);
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (doc.contains("labels")) {
      auto labels = doc.at("labels").get<std::vector<std::string>>();
      if (static_cast<int>(labels.size()) != n) throw InvalidInput("need one label per vertex");
      g.set_labels(std::move(labels));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON graph: ") + e.what());
  }
}

GraphFile parse_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  auto pos = text.find_first_not_of(" \t\r\n");
  std::istringstream ss(text);
  if (pos != std::string::npos && text[pos] == '{') return {parse_json(ss), GraphFormat::kJson};
  return {parse_dimacs(ss), GraphFormat::kDimacs};
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_graph(in);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string to_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  if (!g.labels().empty()) doc["labels"] = g.labels();
  return doc.dump() + "\n";
}

Coloring parse_coloring(std::istream& in, int n, int id_offset) {
  Coloring c(static_cast<std::size_t>(n), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      // The decision line printed by `solve`.
      if (line.find_first_of("0123456789") == std::string::npos) continue;
      fail_at(line_no, "expected 'vertex:color'");
    }
    int v = 0;
    int color = 0;
    try {
      v = std::stoi(line.substr(0, colon)) - id_offset;
      color = std::stoi(line.substr(colon + 1));
    } catch (const std::logic_error&) {
      fail_at(line_no, "expected 'vertex:color'");
    }
    if (v < 0 || v >= n) fail_at(line_no, "vertex id out of range");
    c[static_cast<std::size_t>(v)] = color;
  }
  return c;
}

}  // namespace p7c
