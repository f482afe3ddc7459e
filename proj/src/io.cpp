#include "greedy_spectra/io.hpp"

#include "greedy_spectra/error.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace greedy_spectra {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_degree_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::RejectEmpty, "degree sequence is empty");
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      out.push_back(parse_int(token));
    } else {
      const int value = parse_int(token.substr(0, caret));
      const int count = parse_int(token.substr(caret + 1));
      if (count < 0) throw Error(ErrorCode::ParseError, "negative repeat count");
      out.insert(out.end(), static_cast<std::size_t>(count), value);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

DegreeSequence parse_degree_sequence(std::string_view text) {
  return DegreeSequence::validate(parse_degree_list(text));
}

std::string format_degree_sequence(const DegreeSequence& d) {
  std::string out;
  std::size_t i = 0;
  while (i < d.size()) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(d[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

Json tree_to_json(const Tree& t) {
  Json j;
  j["n"] = t.size();
  Json edges = Json::array();
  for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["root_vertex"] = nullptr;
  j["root_edge"] = nullptr;
  if (const auto* r = std::get_if<VertexRoot>(&t.root())) j["root_vertex"] = r->v;
  if (const auto* e = std::get_if<EdgeRoot>(&t.root())) j["root_edge"] = {e->u, e->v};
  return j;
}

Tree tree_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "tree JSON must be an object");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edges are [u, v] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Root root;
    if (j.contains("root_vertex") && !j["root_vertex"].is_null()) {
      root = VertexRoot{j["root_vertex"].get<int>()};
    }
    if (j.contains("root_edge") && !j["root_edge"].is_null()) {
      if (std::holds_alternative<VertexRoot>(root)) {
        throw Error(ErrorCode::ParseError, "a tree has at most one of root_vertex and root_edge");
      }
      const auto& e = j["root_edge"];
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "root_edge is a [u, v] pair");
      root = EdgeRoot{e[0].get<int>(), e[1].get<int>()};
    }
    return Tree(n, std::move(edges), root);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

Tree parse_tree_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  return tree_from_json(j);
}

std::string tree_to_dot(const Tree& t) {
  std::ostringstream out;
  out << "graph tree {\n";
  if (t.is_rooted()) {
    std::map<int, std::vector<Vertex>> by_level;
    for (Vertex v = 0; v < t.size(); ++v) by_level[t.level(v)].push_back(v);
    for (const auto& [level, vs] : by_level) {
      out << "  { rank=same;";
      for (Vertex v : vs) out << ' ' << v << ';';
      out << " }  // level " << level << '\n';
    }
  } else {
    for (Vertex v = 0; v < t.size(); ++v) out << "  " << v << ";\n";
  }
  const EdgeRoot* root_edge = std::get_if<EdgeRoot>(&t.root());
  for (const auto& [u, v] : t.edges()) {
    out << "  " << u << " -- " << v;
    if (root_edge && ((root_edge->u == u && root_edge->v == v) || (root_edge->u == v && root_edge->v == u))) {
      out << " [style=bold]";
    }
    out << ";\n";
  }
  if (const auto* r = std::get_if<VertexRoot>(&t.root())) out << "  " << r->v << " [shape=doublecircle];\n";
  out << "}\n";
  return out.str();
}

Json moments_to_json(const MomentVector& m) {
  Json j = Json::array();
  for (const auto& c : m.counts()) j.push_back(to_decimal(c));
  return j;
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p) j.push_back(to_decimal(c));
  return j;
}

Json chain_to_json(const std::vector<DegreeSequence>& chain) {
  Json j = Json::array();
  for (const auto& d : chain) j.push_back(to_string(d));
  return j;
}

}  // namespace greedy_spectra
