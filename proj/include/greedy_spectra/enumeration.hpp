#pragma once

#include "greedy_spectra/degree_sequence.hpp"
#include "greedy_spectra/tree.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace greedy_spectra {

inline constexpr int kDefaultEnumerationCap = 12;

/// One representative per isomorphism class of trees with degree sequence d,
/// ordered by unrooted canonical code. Trees are grown breadth-first from a
/// maximum-degree vertex, children of each vertex taking non-increasing
/// degrees; duplicates are rejected by canonical code.
/// Throws Error{CapExceeded} when d has more than `cap` entries.
std::vector<Tree> enumerate_trees(const DegreeSequence& d, int cap = kDefaultEnumerationCap);

/// All trees on n vertices (union over all degree sequences), each class once.
std::vector<Tree> enumerate_all_trees(int n, int cap = kDefaultEnumerationCap);

/// Same, restricted to maximum degree <= max_degree (or == when `exact`).
std::vector<Tree> enumerate_trees_with_max_degree(int n, int max_degree, bool exact,
                                                  int cap = kDefaultEnumerationCap);

}  // namespace greedy_spectra
