#include "greedy_spectra/transformations.hpp"

#include "greedy_spectra/construction.hpp"
#include "greedy_spectra/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace greedy_spectra {

namespace {

std::string label_string(GreedyLabel l) {
  return "g_" + std::to_string(l.index) + "^" + std::to_string(l.level);
}

}  // namespace

Tree move_branch(const Tree& g, const BranchMove& move) {
  if (!has_greedy_labeling(g)) {
    throw Error(ErrorCode::InvalidMove, "input is not a labelled level greedy tree");
  }
  const int i = move.source.level;
  if (move.target.level != i) throw Error(ErrorCode::InvalidMove, "source and target are on different levels");
  if (move.target.index >= move.source.index) {
    throw Error(ErrorCode::InvalidMove, "target " + label_string(move.target) + " does not precede source " +
                                            label_string(move.source));
  }
  const int levels = g.level_count();
  const int min_level = g.is_edge_rooted() ? 1 : 2;
  if (i < min_level || i >= levels) {
    throw Error(ErrorCode::InvalidMove, "level " + std::to_string(i) + " is outside [" + std::to_string(min_level) +
                                            ", " + std::to_string(levels - 1) + "]");
  }
  const auto source = g.vertex_with_label(move.source);
  const auto target = g.vertex_with_label(move.target);
  if (!source || !target) throw Error(ErrorCode::InvalidMove, "label not present in the tree");
  const auto kids = g.children(*source);
  if (std::find(kids.begin(), kids.end(), move.branch_root) == kids.end()) {
    throw Error(ErrorCode::InvalidMove, "vertex " + std::to_string(move.branch_root) + " is not a child of " +
                                            label_string(move.source));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) {
    if ((a == *source && b == move.branch_root) || (b == *source && a == move.branch_root)) {
      edges.emplace_back(*target, move.branch_root);
    } else {
      edges.emplace_back(a, b);
    }
  }
  return Tree(g.size(), std::move(edges), g.root());
}

std::vector<BranchMove> valid_branch_moves(const Tree& g) {
  std::vector<BranchMove> moves;
  if (!has_greedy_labeling(g)) return moves;
  const auto& labels = *g.greedy_labels();
  const int levels = g.level_count();
  const int min_level = g.is_edge_rooted() ? 1 : 2;
  std::vector<int> level_size(static_cast<std::size_t>(levels) + 1, 0);
  for (const auto& l : labels) level_size[static_cast<std::size_t>(l.level)] = std::max(level_size[static_cast<std::size_t>(l.level)], l.index);
  for (int i = min_level; i < levels; ++i) {
    for (int j = 2; j <= level_size[static_cast<std::size_t>(i)]; ++j) {
      const Vertex source = *g.vertex_with_label({i, j});
      for (Vertex w : g.children(source)) {
        for (int jp = 1; jp < j; ++jp) moves.push_back({{i, j}, {i, jp}, w});
      }
    }
  }
  return moves;
}

namespace {

struct StepIndices {
  std::size_t raise;
  std::size_t lower;
};

// Raise the first differing entry and lower the last one. When that overshoots
// d (prefix sums between the two can be tight), lower the first entry after
// `raise` that exceeds d instead, taking the last copy of its value so the
// result stays non-increasing.
StepIndices step_indices(const DegreeSequence& b, const DegreeSequence& d) {
  if (b.size() != d.size()) throw Error(ErrorCode::LengthMismatch, "degree sequences differ in length");
  if (b == d) throw Error(ErrorCode::AlreadyEqual, "sequences are equal");
  if (!majorizes(d, b)) throw Error(ErrorCode::NotMajorized, to_string(d) + " does not majorize " + to_string(b));
  std::size_t first = 0;
  while (b[first] == d[first]) ++first;
  std::size_t last = b.size() - 1;
  while (b[last] == d[last]) --last;
  std::vector<int> next = b.degrees();
  ++next[first];
  --next[last];
  if (majorizes(d.degrees(), next)) return {first, last};
  std::size_t lower = first + 1;
  while (b[lower] <= d[lower]) ++lower;
  while (lower + 1 < b.size() && b[lower + 1] == b[lower]) ++lower;
  return {first, lower};
}

}  // namespace

DegreeSequence majorization_step(const DegreeSequence& b, const DegreeSequence& d) {
  const auto [raise, lower] = step_indices(b, d);
  std::vector<int> next = b.degrees();
  ++next[raise];
  --next[lower];
  return DegreeSequence::validate(std::move(next));
}

std::vector<DegreeSequence> majorization_chain(const DegreeSequence& b, const DegreeSequence& d) {
  if (b.size() != d.size()) throw Error(ErrorCode::LengthMismatch, "degree sequences differ in length");
  if (!majorizes(d, b)) throw Error(ErrorCode::NotMajorized, to_string(d) + " does not majorize " + to_string(b));
  std::vector<DegreeSequence> chain{b};
  while (!(chain.back() == d)) chain.push_back(majorization_step(chain.back(), d));
  return chain;
}

Root midpoint_root(const Tree& t, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::InvalidBounds, "endpoints coincide");
  const Tree from_u = t.with_root(VertexRoot{u});
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(*from_u.parent(path.back()));
  const std::size_t length = path.size() - 1;
  if (length % 2 == 0) return VertexRoot{path[length / 2]};
  return EdgeRoot{path[length / 2], path[length / 2 + 1]};
}

TransferStep transfer_step(const DegreeSequence& b, const DegreeSequence& d) {
  const DegreeSequence next = majorization_step(b, d);
  const auto [first, last] = step_indices(b, d);

  const Tree g = build_greedy_tree(b).unrooted();
  Vertex u = -1;
  Vertex v = -1;
  for (Vertex x = 0; x < g.size() && u < 0; ++x) {
    if (g.degree(x) == b[first]) u = x;
  }
  for (Vertex x = 0; x < g.size() && v < 0; ++x) {
    if (x != u && g.degree(x) == b[last]) v = x;
  }
  const Root root = midpoint_root(g, u, v);
  const Tree rooted = g.with_root(root);
  const Vertex moved = rooted.children(v).front();
  std::vector<Edge> edges;
  for (const auto& [x, y] : rooted.edges()) {
    if ((x == v && y == moved) || (y == v && x == moved)) {
      edges.emplace_back(u, moved);
    } else {
      edges.emplace_back(x, y);
    }
  }
  Tree moved_tree(g.size(), std::move(edges), root);
  if (moved_tree.sorted_degrees() != next.degrees()) {
    throw Error(ErrorCode::Unrealizable, "transfer did not realise the next degree sequence");
  }
  return {std::move(moved_tree), root, u, v, moved};
}

}  // namespace greedy_spectra
