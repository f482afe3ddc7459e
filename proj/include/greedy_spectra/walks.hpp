#pragma once

#include "greedy_spectra/bigint.hpp"
#include "greedy_spectra/tree.hpp"

#include <optional>
#include <vector>

namespace greedy_spectra {

/// Exact closed-walk counts M_0..M_K of a tree (the spectral moments).
class MomentVector {
 public:
  MomentVector() = default;
  explicit MomentVector(std::vector<BigInt> counts) : counts_(std::move(counts)) {}

  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& operator[](std::size_t k) const { return counts_[k]; }
  std::size_t size() const noexcept { return counts_.size(); }
  /// Largest index K.
  int order() const noexcept { return static_cast<int>(counts_.size()) - 1; }

  friend bool operator==(const MomentVector&, const MomentVector&) = default;

 private:
  std::vector<BigInt> counts_;
};

/// Per-step levels (1-based) of a walk in a rooted tree. Consecutive entries
/// differ by exactly one, except that two level-1 entries may follow each other
/// in an edge-rooted tree (a step across the root edge).
class LevelSequence {
 public:
  /// Throws Error{LevelMismatch} on an empty sequence, a level below 1, or a
  /// step that changes the level by anything other than one (or zero at level 1
  /// when `allow_root_edge_steps`).
  explicit LevelSequence(std::vector<int> levels, bool allow_root_edge_steps = false);

  const std::vector<int>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  int front() const { return levels_.front(); }
  int back() const { return levels_.back(); }

 private:
  std::vector<int> levels_;
};

/// Count attached to one start vertex.
struct VertexCount {
  Vertex vertex;
  BigInt count;
};

/// M_k(T) = trace(A^k), by per-vertex dynamic programming over exact integers.
BigInt spectral_moment(const Tree& t, int k);

/// M_0..M_K in one pass. Uses 64-bit arithmetic when n * Δ^K fits, BigInt otherwise.
MomentVector spectral_moments_up_to(const Tree& t, int max_k);

/// W(k;T): number of walks of length k (sum of all entries of A^k).
BigInt total_walks(const Tree& t, int k);

/// W_v(ls;T) for every vertex on level ls.front(), in increasing vertex order.
/// Empty when no vertex lies on that level. `t` must be rooted.
std::vector<VertexCount> walks_by_level_sequence(const Tree& t, const LevelSequence& ls);

/// C_v(ls;T) for every vertex on level ls.front(). Throws Error{LevelMismatch}
/// unless ls.front() == ls.back().
std::vector<VertexCount> closed_walks_by_level_sequence(const Tree& t, const LevelSequence& ls);

/// C_{u,v}(k;T): closed walks of length k from u whose first step goes to v.
/// Throws Error{NotAnEdge}.
BigInt closed_walks_from_directed_edge(const Tree& t, Vertex u, Vertex v, int k);

/// Smallest even k <= k_max where the moments differ.
std::optional<int> first_strict_difference(const Tree& a, const Tree& b, int k_max);
std::optional<int> first_strict_difference(const MomentVector& a, const MomentVector& b);

}  // namespace greedy_spectra
