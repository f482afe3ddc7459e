#include "greedy_spectra/walks.hpp"

#include "greedy_spectra/error.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace greedy_spectra {

LevelSequence::LevelSequence(std::vector<int> levels, bool allow_root_edge_steps) : levels_(std::move(levels)) {
  if (levels_.empty()) throw Error(ErrorCode::LevelMismatch, "empty level sequence");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] < 1) throw Error(ErrorCode::LevelMismatch, "levels are 1-based");
    if (i == 0) continue;
    const int step = levels_[i] - levels_[i - 1];
    const bool root_edge = allow_root_edge_steps && step == 0 && levels_[i] == 1;
    if (step != 1 && step != -1 && !root_edge) {
      throw Error(ErrorCode::LevelMismatch, "levels " + std::to_string(levels_[i - 1]) + " and " +
                                                std::to_string(levels_[i]) + " are not adjacent");
    }
  }
}

namespace {

// Fits when n * Δ^k < 2^62.
bool fits_in_64_bits(const Tree& t, int k) {
  const double delta = std::max(1, t.max_degree());
  return std::log2(static_cast<double>(t.size())) + k * std::log2(delta) < 62.0;
}

template <class Num>
std::vector<Num> multiply_adjacency(const Tree& t, const std::vector<Num>& x) {
  std::vector<Num> y(x.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    Num acc = 0;
    for (Vertex w : t.neighbors(v)) acc += x[static_cast<std::size_t>(w)];
    y[static_cast<std::size_t>(v)] = std::move(acc);
  }
  return y;
}

template <class Num>
std::vector<BigInt> moments_dp(const Tree& t, int max_k) {
  std::vector<Num> totals(static_cast<std::size_t>(max_k) + 1, Num(0));
  const auto n = static_cast<std::size_t>(t.size());
  for (Vertex start = 0; start < t.size(); ++start) {
    std::vector<Num> cur(n, Num(0));
    cur[static_cast<std::size_t>(start)] = 1;
    totals[0] += 1;
    for (int k = 1; k <= max_k; ++k) {
      cur = multiply_adjacency(t, cur);
      totals[static_cast<std::size_t>(k)] += cur[static_cast<std::size_t>(start)];
    }
  }
  std::vector<BigInt> out;
  out.reserve(totals.size());
  for (auto& x : totals) out.emplace_back(x);
  return out;
}

}  // namespace

MomentVector spectral_moments_up_to(const Tree& t, int max_k) {
  if (max_k < 0) throw Error(ErrorCode::InvalidBounds, "walk length must be non-negative");
  if (fits_in_64_bits(t, max_k)) return MomentVector(moments_dp<std::uint64_t>(t, max_k));
  return MomentVector(moments_dp<BigInt>(t, max_k));
}

BigInt spectral_moment(const Tree& t, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidBounds, "walk length must be non-negative");
  if (k % 2 == 1) return 0;
  return spectral_moments_up_to(t, k)[static_cast<std::size_t>(k)];
}

BigInt total_walks(const Tree& t, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidBounds, "walk length must be non-negative");
  std::vector<BigInt> cur(static_cast<std::size_t>(t.size()), BigInt(1));
  for (int step = 0; step < k; ++step) cur = multiply_adjacency(t, cur);
  BigInt sum = 0;
  for (const auto& x : cur) sum += x;
  return sum;
}

namespace {

void require_rooted(const Tree& t) {
  if (!t.is_rooted()) throw Error(ErrorCode::RootNotInTree, "level sequences need a rooted tree");
}

std::vector<Vertex> vertices_on_level(const Tree& t, int level) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.level(v) == level) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<VertexCount> walks_by_level_sequence(const Tree& t, const LevelSequence& ls) {
  require_rooted(t);
  const auto& lv = ls.levels();
  const auto n = static_cast<std::size_t>(t.size());
  // ways[x] = walks from x following the suffix of ls that starts at x's step.
  std::vector<BigInt> ways(n, BigInt(0));
  for (Vertex x = 0; x < t.size(); ++x) {
    if (t.level(x) == lv.back()) ways[static_cast<std::size_t>(x)] = 1;
  }
  for (std::size_t j = lv.size() - 1; j-- > 0;) {
    std::vector<BigInt> prev(n, BigInt(0));
    for (Vertex x = 0; x < t.size(); ++x) {
      if (t.level(x) != lv[j]) continue;
      BigInt acc = 0;
      for (Vertex y : t.neighbors(x)) {
        if (t.level(y) == lv[j + 1]) acc += ways[static_cast<std::size_t>(y)];
      }
      prev[static_cast<std::size_t>(x)] = std::move(acc);
    }
    ways = std::move(prev);
  }
  std::vector<VertexCount> out;
  for (Vertex v : vertices_on_level(t, lv.front())) out.push_back({v, ways[static_cast<std::size_t>(v)]});
  return out;
}

std::vector<VertexCount> closed_walks_by_level_sequence(const Tree& t, const LevelSequence& ls) {
  require_rooted(t);
  const auto& lv = ls.levels();
  if (lv.front() != lv.back()) {
    throw Error(ErrorCode::LevelMismatch, "a closed walk starts and ends on the same level");
  }
  const auto n = static_cast<std::size_t>(t.size());
  std::vector<VertexCount> out;
  for (Vertex start : vertices_on_level(t, lv.front())) {
    std::vector<BigInt> cur(n, BigInt(0));
    cur[static_cast<std::size_t>(start)] = 1;
    for (std::size_t j = 1; j < lv.size(); ++j) {
      std::vector<BigInt> next(n, BigInt(0));
      for (Vertex x = 0; x < t.size(); ++x) {
        if (t.level(x) != lv[j]) continue;
        BigInt acc = 0;
        for (Vertex y : t.neighbors(x)) {
          if (t.level(y) == lv[j - 1]) acc += cur[static_cast<std::size_t>(y)];
        }
        next[static_cast<std::size_t>(x)] = std::move(acc);
      }
      cur = std::move(next);
    }
    out.push_back({start, cur[static_cast<std::size_t>(start)]});
  }
  return out;
}

BigInt closed_walks_from_directed_edge(const Tree& t, Vertex u, Vertex v, int k) {
  if (!t.has_edge(u, v)) {
    throw Error(ErrorCode::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  if (k < 1) return 0;
  // Remaining k-1 steps must lead from v back to u.
  std::vector<BigInt> cur(static_cast<std::size_t>(t.size()), BigInt(0));
  cur[static_cast<std::size_t>(v)] = 1;
  for (int step = 1; step < k; ++step) cur = multiply_adjacency(t, cur);
  return cur[static_cast<std::size_t>(u)];
}

std::optional<int> first_strict_difference(const MomentVector& a, const MomentVector& b) {
  const std::size_t top = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < top; k += 2) {
    if (a[k] != b[k]) return static_cast<int>(k);
  }
  return std::nullopt;
}

std::optional<int> first_strict_difference(const Tree& a, const Tree& b, int k_max) {
  if (k_max < 0) return std::nullopt;
  return first_strict_difference(spectral_moments_up_to(a, k_max), spectral_moments_up_to(b, k_max));
}

}  // namespace greedy_spectra
