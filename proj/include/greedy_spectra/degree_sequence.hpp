#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace greedy_spectra {

/// Non-increasing degree list of a tree. Realizability (positive entries summing
/// to 2(n-1)) is checked once at construction; the object is immutable afterwards.
/// The one-vertex tree is represented by the degenerate sequence (0).
class DegreeSequence {
 public:
  /// Sorts `raw` non-increasing and validates it.
  /// Throws Error{RejectEmpty} or Error{RejectNotRealizable}.
  static DegreeSequence validate(std::vector<int> raw);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int max_degree() const noexcept { return degrees_.front(); }
  bool is_degenerate() const noexcept { return degrees_.size() == 1; }

  auto begin() const noexcept { return degrees_.begin(); }
  auto end() const noexcept { return degrees_.end(); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {}
  std::vector<int> degrees_;
};

/// Per-level degree lists of a rooted forest. Level 0 holds the roots; for an
/// edge-rooted tree it holds the two endpoints of the root edge with their full
/// degrees.
class LeveledDegreeSequence {
 public:
  enum class RootKind { Vertex, Edge };

  /// Throws Error{Unrealizable} when a level is empty or not non-increasing,
  /// or the child counts do not line up with the next level's length.
  LeveledDegreeSequence(std::vector<std::vector<int>> levels, RootKind kind = RootKind::Vertex);

  const std::vector<std::vector<int>>& levels() const noexcept { return levels_; }
  const std::vector<int>& level(std::size_t i) const { return levels_[i]; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  RootKind root_kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept;

  // Number of children a vertex of degree `degree` at level `i` has.
  int child_count(std::size_t i, int degree) const noexcept {
    if (i == 0 && kind_ == RootKind::Vertex) return degree;
    return degree - 1;
  }

  friend bool operator==(const LeveledDegreeSequence&, const LeveledDegreeSequence&) = default;

 private:
  std::vector<std::vector<int>> levels_;
  RootKind kind_;
};

/// True iff the prefix sums of sorted `a` dominate those of sorted `b`, i.e.
/// b ≼ a. Inputs need not be sorted or tree-realizable. Throws
/// Error{LengthMismatch}.
bool majorizes(std::span<const int> a, std::span<const int> b);
bool majorizes(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
inline bool majorizes(const DegreeSequence& a, const DegreeSequence& b) {
  return majorizes(std::span<const int>(a.degrees()), std::span<const int>(b.degrees()));
}

/// Each a[l] repeated k[l] times. Throws Error{LengthMismatch}.
std::vector<int> star_product(std::span<const int> a, std::span<const int> k);

/// (Δ^m, r, 1^(n-m-1)) with m maximal; r == 1 merges into the leaf block.
/// Throws Error{InvalidBounds} unless n >= 2 and 2 <= Δ <= n-1.
DegreeSequence dominant_for_max_degree(int n, int max_degree);

/// (s, 2^(n-s-1), 1^s). Throws Error{InvalidBounds} unless 2 <= s <= n-1.
DegreeSequence dominant_for_leaf_count(int n, int leaves);

/// (α, 2^(n-α-1), 1^α). Throws Error{InvalidBounds} unless n/2 <= α <= n-1.
DegreeSequence dominant_for_independence_number(int n, int alpha);

/// Every tree degree sequence on n vertices, in descending lexicographic order.
std::vector<DegreeSequence> all_tree_degree_sequences(int n);

std::string to_string(const DegreeSequence& d);

}  // namespace greedy_spectra
