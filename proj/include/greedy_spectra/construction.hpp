#pragma once

#include "greedy_spectra/degree_sequence.hpp"
#include "greedy_spectra/tree.hpp"

#include <vector>

namespace greedy_spectra {

/// Vertex-rooted components kept in the label order of their roots
/// (g_1^1, g_2^1, ...). Greedy labels refer to the whole forest.
struct Forest {
  std::vector<Tree> components;
};

/// Level greedy forest G(D): level h is labelled g_1^h..g_k^h with
/// non-increasing degrees, and the children of g_j^h are the next contiguous
/// block of level h+1. Vertex ids inside each component follow label order.
/// Throws Error{Unrealizable} for an edge-rooted `ld`.
Forest build_level_greedy_forest(const LeveledDegreeSequence& ld);

/// Connected case of the above. Throws Error{Unrealizable} unless `ld` is
/// vertex-rooted with a single root.
Tree build_level_greedy_tree(const LeveledDegreeSequence& ld);

/// Joins the roots of the two-component level greedy forest whose first level
/// is (i_11 - 1, i_12 - 1). The result is rooted at that edge, vertices 0 and 1.
Tree build_edge_rooted_level_greedy(const LeveledDegreeSequence& ld);

/// Dispatches on the root kind of `ld`.
Tree build_level_greedy(const LeveledDegreeSequence& ld);

/// Greedy tree G(d): d_1 at the root, remaining degrees handed out level by
/// level in non-increasing order. Rooted at vertex 0 with greedy labels.
Tree build_greedy_tree(const DegreeSequence& d);

Tree build_volkmann_tree(int n, int max_degree);

/// Per-level sorted degrees of `t` as seen from `root`. Throws
/// Error{RootNotInTree}; Error{InvalidBounds} for an unrooted request.
LeveledDegreeSequence leveled_degree_sequence(const Tree& t, const Root& root);
inline LeveledDegreeSequence leveled_degree_sequence(const Tree& rooted) {
  return leveled_degree_sequence(rooted, rooted.root());
}

/// True iff the rooted tree is isomorphic, as a rooted tree, to the level
/// greedy tree of its own leveled degree sequence.
bool is_level_greedy(const Tree& rooted);

/// True iff the attached greedy labels satisfy the labelling rules exactly:
/// labels enumerate each level in order, degrees are non-increasing along a
/// level, and children of g_j^h form the j-th contiguous block on level h+1.
bool has_greedy_labeling(const Tree& rooted);

/// Every vertex root and every edge root of `t`.
std::vector<Root> all_roots(const Tree& t);

}  // namespace greedy_spectra
