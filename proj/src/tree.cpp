#include "greedy_spectra/tree.hpp"

#include "greedy_spectra/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

namespace greedy_spectra {

Tree::Tree() : n_(1), adjacency_(1) {}

Tree::Tree(int n, std::vector<Edge> edges, Root root) : n_(n), edges_(std::move(edges)), root_(root) {
  if (n < 1) throw Error(ErrorCode::InvalidTree, "a tree has at least one vertex");
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw Error(ErrorCode::InvalidTree, "a tree on " + std::to_string(n) + " vertices has " +
                                            std::to_string(n - 1) + " edges, got " +
                                            std::to_string(edges_.size()));
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  // Union-find rejects cycles; n-1 acyclic edges on n vertices are connected.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw Error(ErrorCode::InvalidTree, "bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    const int ru = find(u);
    const int rv = find(v);
    if (ru == rv) throw Error(ErrorCode::InvalidTree, "edges contain a cycle");
    parent[static_cast<std::size_t>(ru)] = rv;
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  compute_levels();
}

void Tree::compute_levels() {
  levels_.clear();
  std::deque<Vertex> queue;
  if (const auto* r = std::get_if<VertexRoot>(&root_)) {
    if (r->v < 0 || r->v >= n_) throw Error(ErrorCode::RootNotInTree, "root vertex " + std::to_string(r->v));
    levels_.assign(static_cast<std::size_t>(n_), 0);
    levels_[static_cast<std::size_t>(r->v)] = 1;
    queue.push_back(r->v);
  } else if (const auto* e = std::get_if<EdgeRoot>(&root_)) {
    if (e->u < 0 || e->u >= n_ || e->v < 0 || e->v >= n_ || !has_edge(e->u, e->v)) {
      throw Error(ErrorCode::RootNotInTree,
                  "root edge (" + std::to_string(e->u) + "," + std::to_string(e->v) + ") is not an edge");
    }
    levels_.assign(static_cast<std::size_t>(n_), 0);
    levels_[static_cast<std::size_t>(e->u)] = 1;
    levels_[static_cast<std::size_t>(e->v)] = 1;
    queue.push_back(e->u);
    queue.push_back(e->v);
  } else {
    return;
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : adjacency_[static_cast<std::size_t>(x)]) {
      if (levels_[static_cast<std::size_t>(y)] == 0) {
        levels_[static_cast<std::size_t>(y)] = levels_[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
}

int Tree::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Tree::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& nb = adjacency_[static_cast<std::size_t>(u)];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

int Tree::level_count() const noexcept {
  return levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end());
}

std::vector<Vertex> Tree::children(Vertex v) const {
  std::vector<Vertex> out;
  if (levels_.empty()) return out;
  for (Vertex y : neighbors(v)) {
    if (level(y) == level(v) + 1) out.push_back(y);
  }
  return out;
}

std::optional<Vertex> Tree::parent(Vertex v) const {
  if (levels_.empty()) return std::nullopt;
  for (Vertex y : neighbors(v)) {
    if (level(y) + 1 == level(v)) return y;
  }
  return std::nullopt;
}

std::optional<Vertex> Tree::vertex_with_label(GreedyLabel label) const {
  if (!greedy_labels_) return std::nullopt;
  const auto& labels = *greedy_labels_;
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

Tree Tree::with_root(Root root) const {
  Tree t = *this;
  t.root_ = root;
  t.greedy_labels_.reset();
  t.compute_levels();
  return t;
}

Tree Tree::with_greedy_labels(std::vector<GreedyLabel> labels) const {
  if (static_cast<int>(labels.size()) != n_) {
    throw Error(ErrorCode::InvalidTree, "greedy label count differs from vertex count");
  }
  Tree t = *this;
  t.greedy_labels_ = std::move(labels);
  return t;
}

std::vector<int> Tree::sorted_degrees() const {
  std::vector<int> d;
  d.reserve(adjacency_.size());
  for (const auto& nb : adjacency_) d.push_back(static_cast<int>(nb.size()));
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace greedy_spectra
