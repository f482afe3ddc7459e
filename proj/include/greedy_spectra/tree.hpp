#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace greedy_spectra {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

struct VertexRoot {
  Vertex v;
  friend bool operator==(const VertexRoot&, const VertexRoot&) = default;
};

struct EdgeRoot {
  Vertex u;
  Vertex v;
  friend bool operator==(const EdgeRoot&, const EdgeRoot&) = default;
};

using Root = std::variant<std::monostate, VertexRoot, EdgeRoot>;

/// Position g_index^level in a level greedy labeling (both 1-based).
struct GreedyLabel {
  int level;
  int index;
  friend bool operator==(const GreedyLabel&, const GreedyLabel&) = default;
  friend auto operator<=>(const GreedyLabel&, const GreedyLabel&) = default;
};

/// Labeled undirected tree on vertices 0..n-1, optionally rooted at a vertex or
/// an edge. A rooted tree carries 1-based levels (root level 1; both endpoints of
/// an edge root are on level 1). Builders may attach greedy labels as a separate
/// layer; they do not affect vertex identity.
class Tree {
 public:
  /// The one-vertex tree.
  Tree();

  /// Throws Error{InvalidTree} unless `edges` form a spanning tree of n vertices,
  /// and Error{RootNotInTree} if the root is not a vertex/edge of it.
  Tree(int n, std::vector<Edge> edges, Root root = {});

  int size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;

  const Root& root() const noexcept { return root_; }
  bool is_rooted() const noexcept { return !std::holds_alternative<std::monostate>(root_); }
  bool is_vertex_rooted() const noexcept { return std::holds_alternative<VertexRoot>(root_); }
  bool is_edge_rooted() const noexcept { return std::holds_alternative<EdgeRoot>(root_); }

  /// 1-based level of v; 0 for unrooted trees.
  int level(Vertex v) const { return levels_.empty() ? 0 : levels_[static_cast<std::size_t>(v)]; }
  int level_count() const noexcept;
  /// Neighbors one level further from the root. Empty for unrooted trees.
  std::vector<Vertex> children(Vertex v) const;
  std::optional<Vertex> parent(Vertex v) const;

  const std::optional<std::vector<GreedyLabel>>& greedy_labels() const noexcept { return greedy_labels_; }
  std::optional<Vertex> vertex_with_label(GreedyLabel label) const;

  Tree with_root(Root root) const;
  Tree unrooted() const { return with_root({}); }
  /// Throws Error{InvalidTree} if the label count differs from n.
  Tree with_greedy_labels(std::vector<GreedyLabel> labels) const;

  /// Vertex degrees sorted non-increasing.
  std::vector<int> sorted_degrees() const;

 private:
  void compute_levels();

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  Root root_;
  std::vector<int> levels_;
  std::optional<std::vector<GreedyLabel>> greedy_labels_;
};

}  // namespace greedy_spectra
