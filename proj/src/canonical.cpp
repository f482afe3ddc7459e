#include "greedy_spectra/canonical.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace greedy_spectra {

std::string subtree_code(const Tree& t, Vertex v, Vertex excluded) {
  // Iterative post-order so long paths do not exhaust the stack.
  struct Frame {
    Vertex vertex;
    Vertex from;
    std::size_t next = 0;
    std::vector<std::string> child_codes;
  };
  std::vector<Frame> stack;
  stack.push_back({v, excluded, 0, {}});
  std::string result;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto nb = t.neighbors(top.vertex);
    if (top.next < nb.size()) {
      const Vertex y = nb[top.next++];
      if (y != top.from) stack.push_back({y, top.vertex, 0, {}});
      continue;
    }
    std::sort(top.child_codes.begin(), top.child_codes.end());
    std::string code = "(";
    for (auto& c : top.child_codes) code += c;
    code += ')';
    stack.pop_back();
    if (stack.empty()) {
      result = std::move(code);
    } else {
      stack.back().child_codes.push_back(std::move(code));
    }
  }
  return result;
}

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex y : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(y)] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

std::string edge_code(const Tree& t, Vertex u, Vertex v) {
  std::string a = subtree_code(t, u, v);
  std::string b = subtree_code(t, v, u);
  if (b < a) std::swap(a, b);
  return a + b;
}

}  // namespace

std::string canonical_code(const Tree& t, IsoMode mode) {
  if (mode == IsoMode::RespectRoot) {
    if (const auto* r = std::get_if<VertexRoot>(&t.root())) return "V" + subtree_code(t, r->v, -1);
    if (const auto* e = std::get_if<EdgeRoot>(&t.root())) return "E" + edge_code(t, e->u, e->v);
  }
  const auto c = centers(t);
  if (c.size() == 1) return "U" + subtree_code(t, c[0], -1);
  return "B" + edge_code(t, c[0], c[1]);
}

bool is_isomorphic(const Tree& a, const Tree& b, IsoMode mode) {
  if (a.size() != b.size()) return false;
  if (a.sorted_degrees() != b.sorted_degrees()) return false;
  return canonical_code(a, mode) == canonical_code(b, mode);
}

}  // namespace greedy_spectra
