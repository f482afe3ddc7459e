#pragma once

#include "greedy_spectra/degree_sequence.hpp"
#include "greedy_spectra/tree.hpp"

#include <vector>

namespace greedy_spectra {

/// Detach the branch hanging from `branch_root` off g_j^i and hang it from
/// g_{j'}^i instead, with j' < j.
struct BranchMove {
  GreedyLabel source;
  GreedyLabel target;
  Vertex branch_root;
};

/// Returns G - source*branch_root + target*branch_root, keeping the root and
/// vertex ids. `g` must carry a valid level greedy labelling. Levels are
/// restricted to 1 < i < L for vertex roots and 1 <= i < L for edge roots.
/// Throws Error{InvalidMove}.
Tree move_branch(const Tree& g, const BranchMove& move);

/// Every move accepted by move_branch on `g`, in label order.
std::vector<BranchMove> valid_branch_moves(const Tree& g);

/// b with b_l incremented and b_m decremented, l and m the first and last
/// positions where b and d differ. If that result is not majorized by d, m is
/// instead the last copy of the first entry after l that exceeds d. Throws
/// Error{AlreadyEqual}, Error{NotMajorized} or Error{LengthMismatch}.
DegreeSequence majorization_step(const DegreeSequence& b, const DegreeSequence& d);

/// b = B_0 ≼ B_1 ≼ ... ≼ B_r = d by repeated majorization_step.
std::vector<DegreeSequence> majorization_chain(const DegreeSequence& b, const DegreeSequence& d);

/// Midpoint of the u-v path: its middle vertex when the path length is even,
/// its middle edge otherwise. Throws Error{InvalidBounds} when u == v.
Root midpoint_root(const Tree& t, Vertex u, Vertex v);

/// One branch transfer realising majorization_step on trees: in G(b) pick u of
/// degree b_l and v of degree b_m, root at their midpoint, and move one child
/// branch of v over to u.
struct TransferStep {
  Tree tree;  // rooted at `root`, degree sequence majorization_step(b, d)
  Root root;
  Vertex u;
  Vertex v;
  Vertex moved;
};
TransferStep transfer_step(const DegreeSequence& b, const DegreeSequence& d);

}  // namespace greedy_spectra
