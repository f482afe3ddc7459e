#include "greedy_spectra/construction.hpp"

#include "greedy_spectra/canonical.hpp"
#include "greedy_spectra/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace greedy_spectra {

namespace {

// The whole labelled forest in label order: id = offset[h] + j - 1 for g_j^h.
struct LabelledForest {
  std::vector<Edge> edges;
  std::vector<GreedyLabel> labels;
  std::vector<int> component;  // index of the first-level ancestor
  int vertex_count = 0;
};

LabelledForest lay_out(const LeveledDegreeSequence& ld) {
  LabelledForest f;
  std::vector<int> offset;
  for (const auto& lv : ld.levels()) {
    offset.push_back(f.vertex_count);
    f.vertex_count += static_cast<int>(lv.size());
  }
  f.labels.reserve(static_cast<std::size_t>(f.vertex_count));
  f.component.assign(static_cast<std::size_t>(f.vertex_count), 0);
  for (std::size_t h = 0; h < ld.level_count(); ++h) {
    const auto& lv = ld.level(h);
    for (std::size_t j = 0; j < lv.size(); ++j) {
      f.labels.push_back({static_cast<int>(h) + 1, static_cast<int>(j) + 1});
    }
  }
  for (std::size_t h = 0; h < ld.level_count(); ++h) {
    const auto& lv = ld.level(h);
    int next_child = 0;
    for (std::size_t j = 0; j < lv.size(); ++j) {
      const int parent = offset[h] + static_cast<int>(j);
      if (h == 0) f.component[static_cast<std::size_t>(parent)] = static_cast<int>(j);
      for (int c = 0; c < ld.child_count(h, lv[j]); ++c) {
        const int child = offset[h + 1] + next_child++;
        f.edges.emplace_back(parent, child);
        f.component[static_cast<std::size_t>(child)] = f.component[static_cast<std::size_t>(parent)];
      }
    }
  }
  return f;
}

}  // namespace

Forest build_level_greedy_forest(const LeveledDegreeSequence& ld) {
  if (ld.root_kind() != LeveledDegreeSequence::RootKind::Vertex) {
    throw Error(ErrorCode::Unrealizable, "level greedy forests are vertex-rooted");
  }
  const LabelledForest f = lay_out(ld);
  const std::size_t roots = ld.level(0).size();
  std::vector<std::vector<int>> members(roots);
  for (int v = 0; v < f.vertex_count; ++v) {
    members[static_cast<std::size_t>(f.component[static_cast<std::size_t>(v)])].push_back(v);
  }
  Forest out;
  for (std::size_t c = 0; c < roots; ++c) {
    std::vector<int> local(static_cast<std::size_t>(f.vertex_count), -1);
    std::vector<GreedyLabel> labels;
    for (std::size_t i = 0; i < members[c].size(); ++i) {
      local[static_cast<std::size_t>(members[c][i])] = static_cast<int>(i);
      labels.push_back(f.labels[static_cast<std::size_t>(members[c][i])]);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : f.edges) {
      if (f.component[static_cast<std::size_t>(a)] == static_cast<int>(c)) {
        edges.emplace_back(local[static_cast<std::size_t>(a)], local[static_cast<std::size_t>(b)]);
      }
    }
    Tree t(static_cast<int>(members[c].size()), std::move(edges), VertexRoot{0});
    out.components.push_back(t.with_greedy_labels(std::move(labels)));
  }
  return out;
}

Tree build_level_greedy_tree(const LeveledDegreeSequence& ld) {
  if (ld.root_kind() != LeveledDegreeSequence::RootKind::Vertex || ld.level(0).size() != 1) {
    throw Error(ErrorCode::Unrealizable, "a vertex-rooted level greedy tree has a single first-level vertex");
  }
  return std::move(build_level_greedy_forest(ld).components.front());
}

Tree build_edge_rooted_level_greedy(const LeveledDegreeSequence& ld) {
  if (ld.root_kind() != LeveledDegreeSequence::RootKind::Edge) {
    throw Error(ErrorCode::Unrealizable, "expected an edge-rooted leveled degree sequence");
  }
  LabelledForest f = lay_out(ld);
  f.edges.insert(f.edges.begin(), Edge{0, 1});
  Tree t(f.vertex_count, std::move(f.edges), EdgeRoot{0, 1});
  return t.with_greedy_labels(std::move(f.labels));
}

Tree build_level_greedy(const LeveledDegreeSequence& ld) {
  return ld.root_kind() == LeveledDegreeSequence::RootKind::Edge ? build_edge_rooted_level_greedy(ld)
                                                                 : build_level_greedy_tree(ld);
}

Tree build_greedy_tree(const DegreeSequence& d) {
  if (d.is_degenerate()) return Tree(1, {}, VertexRoot{0}).with_greedy_labels({{1, 1}});
  const auto& deg = d.degrees();
  std::vector<std::vector<int>> levels{{deg[0]}};
  std::size_t next = 1;
  std::size_t slots = static_cast<std::size_t>(deg[0]);
  while (slots > 0) {
    if (next + slots > deg.size()) throw Error(ErrorCode::Unrealizable, "degree sequence runs out of vertices");
    std::vector<int> level(deg.begin() + static_cast<std::ptrdiff_t>(next),
                           deg.begin() + static_cast<std::ptrdiff_t>(next + slots));
    next += slots;
    slots = 0;
    for (int x : level) slots += static_cast<std::size_t>(x - 1);
    levels.push_back(std::move(level));
  }
  if (next != deg.size()) throw Error(ErrorCode::Unrealizable, "degree sequence leaves vertices unplaced");
  return build_level_greedy_tree(LeveledDegreeSequence(std::move(levels)));
}

Tree build_volkmann_tree(int n, int max_degree) {
  return build_greedy_tree(dominant_for_max_degree(n, max_degree));
}

LeveledDegreeSequence leveled_degree_sequence(const Tree& t, const Root& root) {
  if (std::holds_alternative<std::monostate>(root)) {
    throw Error(ErrorCode::InvalidBounds, "a leveled degree sequence needs a root");
  }
  const Tree rooted = t.root() == root ? t : t.with_root(root);
  std::vector<std::vector<int>> levels(static_cast<std::size_t>(rooted.level_count()));
  for (Vertex v = 0; v < rooted.size(); ++v) {
    levels[static_cast<std::size_t>(rooted.level(v) - 1)].push_back(rooted.degree(v));
  }
  for (auto& lv : levels) std::sort(lv.begin(), lv.end(), std::greater<>());
  const auto kind = std::holds_alternative<EdgeRoot>(root) ? LeveledDegreeSequence::RootKind::Edge
                                                           : LeveledDegreeSequence::RootKind::Vertex;
  return LeveledDegreeSequence(std::move(levels), kind);
}

bool is_level_greedy(const Tree& rooted) {
  if (!rooted.is_rooted()) return false;
  const Tree g = build_level_greedy(leveled_degree_sequence(rooted));
  return canonical_code(rooted, IsoMode::RespectRoot) == canonical_code(g, IsoMode::RespectRoot);
}

bool has_greedy_labeling(const Tree& rooted) {
  if (!rooted.is_rooted() || !rooted.greedy_labels()) return false;
  const auto& labels = *rooted.greedy_labels();
  const int levels = rooted.level_count();
  // by_label[h][j-1] = vertex labelled g_j^h
  std::vector<std::vector<Vertex>> by_label(static_cast<std::size_t>(levels));
  std::vector<std::size_t> level_size(static_cast<std::size_t>(levels), 0);
  for (Vertex v = 0; v < rooted.size(); ++v) {
    const auto& lab = labels[static_cast<std::size_t>(v)];
    if (lab.level != rooted.level(v) || lab.index < 1) return false;
    ++level_size[static_cast<std::size_t>(lab.level - 1)];
  }
  for (int h = 0; h < levels; ++h) {
    by_label[static_cast<std::size_t>(h)].assign(level_size[static_cast<std::size_t>(h)], -1);
  }
  for (Vertex v = 0; v < rooted.size(); ++v) {
    const auto& lab = labels[static_cast<std::size_t>(v)];
    auto& slot = by_label[static_cast<std::size_t>(lab.level - 1)];
    if (static_cast<std::size_t>(lab.index) > slot.size() || slot[static_cast<std::size_t>(lab.index - 1)] != -1) {
      return false;
    }
    slot[static_cast<std::size_t>(lab.index - 1)] = v;
  }
  for (int h = 0; h < levels; ++h) {
    const auto& row = by_label[static_cast<std::size_t>(h)];
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (rooted.degree(row[j]) > rooted.degree(row[j - 1])) return false;
    }
    if (h + 1 == levels) break;
    const auto& next_row = by_label[static_cast<std::size_t>(h + 1)];
    std::size_t block = 0;
    for (Vertex x : row) {
      const auto kids = rooted.children(x);
      for (std::size_t c = 0; c < kids.size(); ++c) {
        const Vertex expected = next_row[block + c];
        if (std::find(kids.begin(), kids.end(), expected) == kids.end()) return false;
      }
      block += kids.size();
    }
  }
  return true;
}

std::vector<Root> all_roots(const Tree& t) {
  std::vector<Root> roots;
  for (Vertex v = 0; v < t.size(); ++v) roots.emplace_back(VertexRoot{v});
  for (const auto& [u, v] : t.edges()) roots.emplace_back(EdgeRoot{u, v});
  return roots;
}

}  // namespace greedy_spectra
